#pragma once

/**
 * Ratio and cross-ratio of collinear points on a coordinatized line, where the
 * line's points are the elements of a (possibly noncommutative) field K.
 *
 *   r(A:B)         = B⁻¹A
 *   r(A,B;C)       = (B-C)⁻¹(A-C)
 *   c_r(A,B;C,D)   = [(A-D)⁻¹(B-D)] [(B-C)⁻¹(A-C)]
 *
 * Factor order is significant in H(Q). The line is extended by one point at
 * infinity with O⁻¹ = ∞, which is what degenerate cross-ratios evaluate to.
 */

#include <array>
#include <optional>

#include "crossratio/skewfield.hpp"

namespace crossratio {

/// A point of K ∪ {∞}. Infinity still carries its field.
class ExtendedPoint {
public:
	static ExtendedPoint finite(FieldElement value) { return ExtendedPoint(std::move(value)); }
	static ExtendedPoint infinity(const Field& field) { return ExtendedPoint(field); }

	ExtendedPoint(FieldElement value) : field_(value.field()), value_(std::move(value)) {} // NOLINT

	const Field& field() const noexcept { return field_; }
	bool is_infinite() const noexcept { return !value_.has_value(); }
	bool is_finite() const noexcept { return value_.has_value(); }
	/// Throws InvalidArguments on ∞.
	const FieldElement& value() const;

	friend bool operator==(const ExtendedPoint& x, const ExtendedPoint& y) {
		return x.field_ == y.field_ && x.value_ == y.value_;
	}

private:
	explicit ExtendedPoint(const Field& field) : field_(field) {}

	Field field_;
	std::optional<FieldElement> value_;
};

/// O⁻¹ = ∞, ∞⁻¹ = O.
ExtendedPoint inv(const ExtendedPoint& x);

using PointQuad = std::array<ExtendedPoint, 4>;

/// r(A:B) = B⁻¹A. DivisionByZero when B = O.
FieldElement ratio2(const FieldElement& a, const FieldElement& b);

/// r(A,B;C) = (B-C)⁻¹(A-C). DivisionByZero when B = C.
FieldElement ratio3(const FieldElement& a, const FieldElement& b, const FieldElement& c);

/// r(B:A), which is r(A:B)⁻¹.
FieldElement ratio2_inverse_law(const FieldElement& a, const FieldElement& b);

/// r(B,A;C), which is r(A,B;C)⁻¹.
FieldElement ratio3_swapped(const FieldElement& a, const FieldElement& b, const FieldElement& c);

/**
 * c_r(A,B;C,D). Cases are resolved in order:
 *   1. exactly one argument is ∞: the single-infinity forms
 *        c_r(∞,B;C,D) = (B-D)(B-C)⁻¹     c_r(A,∞;C,D) = (A-D)⁻¹(A-C)
 *        c_r(A,B;∞,D) = (A-D)⁻¹(B-D)     c_r(A,B;C,∞) = (B-C)⁻¹(A-C)
 *      with O⁻¹ read as ∞;
 *   2. a coincidence A=B→I, A=C→O, A=D→∞, B=C→∞, B=D→O, C=D→I (first match);
 *   3. the defining product.
 * Throws InvalidArguments when two arguments are ∞, three are equal, or the
 * fields differ.
 */
ExtendedPoint cross_ratio(const ExtendedPoint& a, const ExtendedPoint& b, const ExtendedPoint& c,
                          const ExtendedPoint& d);

inline ExtendedPoint cross_ratio(const PointQuad& q) { return cross_ratio(q[0], q[1], q[2], q[3]); }

/// [(A-B)⁻¹ - (A-D)⁻¹] [(A-B)⁻¹ - (A-C)⁻¹]⁻¹ for pairwise distinct finite points.
FieldElement cross_ratio_alt(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                             const FieldElement& d);

/// The unique D with c_r(A,B;C,D) = R, i.e. D = (A·S - B)(S - I)⁻¹ with
/// S = R·r(A,B;C)⁻¹. InvalidRatio when R ∈ {O, I}; InfiniteSolution when
/// S = I (the solution is ∞); InvalidArguments unless A, B, C are distinct.
FieldElement solve_fourth_point(const FieldElement& r, const FieldElement& a, const FieldElement& b,
                                const FieldElement& c);

/// (-A,-B,-C,-D); ∞ is fixed.
PointQuad negate_all(const PointQuad& q);

/// (A⁻¹,B⁻¹,C⁻¹,D⁻¹). All arguments must be finite and nonzero.
PointQuad invert_all(const PointQuad& q);

} // namespace crossratio
