#pragma once

/**
 * Exact arithmetic for three concrete division rings behind one value type:
 *
 *   - Q        rationals (GMP, always canonical)
 *   - GF(p)    prime fields, p < 2^31 validated by trial division
 *   - H(Q)     Hamilton quaternions a + bi + cj + dk with rational coefficients
 *
 * Multiplication is never assumed commutative. Elements remember which field
 * instance they belong to and refuse to mix with another one.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "crossratio/errors.hpp"

namespace crossratio {

using Rational = mpq_class;

enum class FieldKind { rational, galois, quaternion };

class FieldElement;

/// Identity of a field instance. Two elements may be combined iff their
/// fields compare equal.
class Field {
public:
	static Field rational() { return Field(FieldKind::rational, 0); }
	static Field galois(std::uint32_t modulus);
	static Field quaternion() { return Field(FieldKind::quaternion, 0); }

	/// "rational" | "gf:P" | "quaternion"
	static Field parse(std::string_view selector);

	FieldKind kind() const noexcept { return kind_; }
	std::uint32_t modulus() const noexcept { return modulus_; }
	bool is_commutative() const noexcept { return kind_ != FieldKind::quaternion; }

	/// Selector string accepted by parse().
	std::string name() const;

	FieldElement zero() const;
	FieldElement one() const;
	FieldElement from_integer(long value) const;
	FieldElement from_rational(const Rational& value) const;

	bool operator==(const Field&) const = default;

private:
	Field(FieldKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

	FieldKind kind_;
	std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

struct GaloisResidue {
	std::uint32_t value = 0;
	bool operator==(const GaloisResidue&) const = default;
};

struct Quaternion {
	Rational a, b, c, d; // 1, i, j, k

	bool operator==(const Quaternion& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
	bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0 && sgn(d) == 0; }
	Quaternion conjugate() const { return {a, -b, -c, -d}; }
	/// a² + b² + c² + d²; zero only for the zero quaternion.
	Rational norm() const { return a * a + b * b + c * c + d * d; }
};

Quaternion operator+(const Quaternion& x, const Quaternion& y);
Quaternion operator-(const Quaternion& x, const Quaternion& y);
Quaternion operator-(const Quaternion& x);
Quaternion operator*(const Quaternion& x, const Quaternion& y);

class FieldElement {
public:
	using Value = std::variant<Rational, GaloisResidue, Quaternion>;

	/// Checks that the value representation matches the field and reduces
	/// residues into [0, p).
	FieldElement(Field field, Value value);

	const Field& field() const noexcept { return field_; }
	const Value& value() const noexcept { return value_; }

	const Rational& as_rational() const { return std::get<Rational>(value_); }
	GaloisResidue as_residue() const { return std::get<GaloisResidue>(value_); }
	const Quaternion& as_quaternion() const { return std::get<Quaternion>(value_); }

	bool is_zero() const;
	bool is_one() const;

	friend bool operator==(const FieldElement& x, const FieldElement& y) {
		return x.field_ == y.field_ && x.value_ == y.value_;
	}

private:
	Field field_;
	Value value_;
};

FieldElement add(const FieldElement& x, const FieldElement& y);
FieldElement neg(const FieldElement& x);
FieldElement sub(const FieldElement& x, const FieldElement& y);
FieldElement mul(const FieldElement& x, const FieldElement& y);
/// Throws DivisionByZero on zero. Quaternions: conjugate / norm.
FieldElement inv(const FieldElement& x);

inline FieldElement operator+(const FieldElement& x, const FieldElement& y) { return add(x, y); }
inline FieldElement operator-(const FieldElement& x, const FieldElement& y) { return sub(x, y); }
inline FieldElement operator-(const FieldElement& x) { return neg(x); }
inline FieldElement operator*(const FieldElement& x, const FieldElement& y) { return mul(x, y); }

/// x·y == y·x
bool commutes(const FieldElement& x, const FieldElement& y);

/// Membership in the center. Decided analytically: every element of Q and
/// GF(p); quaternions with zero vector part.
bool is_central(const FieldElement& x);

/// q⁻¹·p·q
FieldElement conjugate_by(const FieldElement& p, const FieldElement& q);

/// Multiplicative norm: x² for the commutative fields, a²+b²+c²+d² (as a
/// scalar quaternion) for H(Q).
FieldElement norm(const FieldElement& x);

} // namespace crossratio
