#pragma once

/**
 * The affine plane AG(2,K) over one of the fields in skewfield.hpp.
 *
 * Lines are either vertical {(c, y)} or sloped {(x, x·m + b)}; the slope acts
 * on the right of x. With that convention a line through P in direction
 * (1, m) is P + K·(1, m), i.e. a coset of a left K-submodule, and the usual
 * parallelogram constructions realize field addition and multiplication.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crossratio/skewfield.hpp"

namespace crossratio {

struct PlanePoint {
	FieldElement x, y;

	PlanePoint(FieldElement x_, FieldElement y_);
	const Field& field() const noexcept { return x.field(); }
	friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

struct VerticalLine {
	FieldElement c;
	friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

struct SlopedLine {
	FieldElement m, b;
	friend bool operator==(const SlopedLine&, const SlopedLine&) = default;
};

class PlaneLine {
public:
	using Form = std::variant<VerticalLine, SlopedLine>;

	static PlaneLine vertical(FieldElement c) { return PlaneLine(VerticalLine{std::move(c)}); }
	static PlaneLine sloped(FieldElement m, FieldElement b);

	const Form& form() const noexcept { return form_; }
	bool is_vertical() const noexcept { return std::holds_alternative<VerticalLine>(form_); }
	const Field& field() const;

	bool contains(const PlanePoint& p) const;
	/// Same direction (equal lines are parallel).
	bool parallel_to(const PlaneLine& other) const;

	friend bool operator==(const PlaneLine&, const PlaneLine&) = default;

private:
	explicit PlaneLine(Form form) : form_(std::move(form)) {}
	Form form_;
};

PlaneLine line_through(const PlanePoint& p, const PlanePoint& q);
PlaneLine parallel_through(const PlaneLine& l, const PlanePoint& p);

/// Intersection of two distinct lines; std::monostate when they are parallel.
using Intersection = std::variant<std::monostate, PlanePoint>;
Intersection intersect(const PlaneLine& l1, const PlaneLine& l2);

/// point_at(O, I, t) = O + t·(I - O); coordinatize is its inverse on ℓ^OI.
PlanePoint point_at(const PlanePoint& o, const PlanePoint& i, const FieldElement& t);
FieldElement coordinatize(const PlanePoint& o, const PlanePoint& i, const PlanePoint& p);

/// One step of a ruler construction, kept for tracing and drawing.
struct ConstructionStep {
	std::string description;
	PlaneLine line;
	std::vector<std::string> through; // labels of points the line passes through
};

struct ConstructionTrace {
	PlanePoint p1;     // intermediate point P₁
	PlanePoint result; // C
	std::vector<ConstructionStep> steps;
};

/// Addition on ℓ^OI with auxiliary point B₁ ∉ ℓ^OI:
///   P₁ = ℓ_{OI}^{B₁} ∩ ℓ_{OB₁}^{A},   C = ℓ_{BB₁}^{P₁} ∩ ℓ^{OI}.
ConstructionTrace trace_geometric_add(const PlanePoint& o, const PlanePoint& i, const PlanePoint& a,
                                      const PlanePoint& b, const PlanePoint& aux);

/// Multiplication on ℓ^OI with auxiliary point B₁ ∉ ℓ^OI:
///   P₁ = ℓ_{IB₁}^{A} ∩ ℓ^{OB₁},   C = ℓ_{BB₁}^{P₁} ∩ ℓ^{OI}.
/// Under coordinatize(O, I, ·) the result is A·B (left operand A).
ConstructionTrace trace_geometric_mul(const PlanePoint& o, const PlanePoint& i, const PlanePoint& a,
                                      const PlanePoint& b, const PlanePoint& aux);

inline PlanePoint geometric_add(const PlanePoint& o, const PlanePoint& i, const PlanePoint& a,
                                const PlanePoint& b, const PlanePoint& aux) {
	return trace_geometric_add(o, i, a, b, aux).result;
}

inline PlanePoint geometric_mul(const PlanePoint& o, const PlanePoint& i, const PlanePoint& a,
                                const PlanePoint& b, const PlanePoint& aux) {
	return trace_geometric_mul(o, i, a, b, aux).result;
}

// Desargues

enum class PerspectiveMode { parallel_axis, center_point };

struct DesarguesConfig {
	PlanePoint a, b, c;
	PlanePoint a2, b2, c2; // A', B', C'
	PerspectiveMode mode;
	std::optional<PlanePoint> center; // set iff mode == center_point
};

/// Throws HypothesisViolation naming the first failed clause.
void validate_desargues(const DesarguesConfig& cfg);

/// Validates the hypotheses, then reports whether ℓ^AC ∥ ℓ^A'C'.
bool check_desargues(const DesarguesConfig& cfg);

/// Random configuration satisfying every hypothesis by construction;
/// deterministic in (field, seed, mode). GenerationFailure after 100 retries.
DesarguesConfig generate_desargues_config(const Field& field, std::uint64_t seed, PerspectiveMode mode);

} // namespace crossratio
