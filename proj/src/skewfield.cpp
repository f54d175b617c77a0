#include "crossratio/skewfield.hpp"

#include <charconv>

namespace crossratio {

namespace {

constexpr std::uint64_t kMaxModulus = 1ull << 31;

void require_same_field(const FieldElement& x, const FieldElement& y) {
	if (!(x.field() == y.field()))
		throw FieldMismatch("cannot combine elements of " + x.field().name() + " and " + y.field().name());
}

std::uint32_t mod_add(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
	return static_cast<std::uint32_t>((std::uint64_t{x} + y) % p);
}

std::uint32_t mod_mul(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
	return static_cast<std::uint32_t>((std::uint64_t{x} * y) % p);
}

// x^(p-2) mod p
std::uint32_t mod_inv(std::uint32_t x, std::uint32_t p) {
	std::uint32_t result = 1, base = x;
	for (std::uint64_t e = p - 2; e != 0; e >>= 1) {
		if (e & 1)
			result = mod_mul(result, base, p);
		base = mod_mul(base, base, p);
	}
	return result;
}

std::uint32_t reduce(long value, std::uint32_t p) {
	long r = value % static_cast<long>(p);
	if (r < 0)
		r += p;
	return static_cast<std::uint32_t>(r);
}

} // namespace

bool is_prime(std::uint64_t n) {
	if (n < 2)
		return false;
	for (std::uint64_t d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

Field Field::galois(std::uint32_t modulus) {
	if (modulus >= kMaxModulus || !is_prime(modulus))
		throw InvalidModulus("GF(p) modulus must be a prime below 2^31, got " + std::to_string(modulus));
	return Field(FieldKind::galois, modulus);
}

Field Field::parse(std::string_view selector) {
	if (selector == "rational")
		return rational();
	if (selector == "quaternion")
		return quaternion();
	if (selector.starts_with("gf:")) {
		auto digits = selector.substr(3);
		std::uint64_t p = 0;
		auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
		if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
			throw InvalidModulus("bad GF modulus in field selector '" + std::string(selector) + "'");
		if (p >= kMaxModulus || !is_prime(p))
			throw InvalidModulus("GF(p) modulus must be a prime below 2^31, got " + std::string(digits));
		return galois(static_cast<std::uint32_t>(p));
	}
	throw InvalidModulus("unknown field selector '" + std::string(selector) + "'");
}

std::string Field::name() const {
	switch (kind_) {
	case FieldKind::rational:
		return "rational";
	case FieldKind::galois:
		return "gf:" + std::to_string(modulus_);
	case FieldKind::quaternion:
		return "quaternion";
	}
	return {};
}

FieldElement Field::zero() const { return from_integer(0); }
FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(long value) const {
	switch (kind_) {
	case FieldKind::rational:
		return FieldElement(*this, Rational(value));
	case FieldKind::galois:
		return FieldElement(*this, GaloisResidue{reduce(value, modulus_)});
	case FieldKind::quaternion:
		return FieldElement(*this, Quaternion{Rational(value), 0, 0, 0});
	}
	throw Error("unreachable field kind");
}

FieldElement Field::from_rational(const Rational& value) const {
	switch (kind_) {
	case FieldKind::rational:
		return FieldElement(*this, value);
	case FieldKind::quaternion:
		return FieldElement(*this, Quaternion{value, 0, 0, 0});
	case FieldKind::galois: {
		mpz_class p = modulus_;
		mpz_class num = value.get_num() % p, den = value.get_den() % p;
		if (den == 0)
			throw DivisionByZero("denominator vanishes in " + name());
		auto n = reduce(num.get_si(), modulus_);
		auto d = reduce(den.get_si(), modulus_);
		return FieldElement(*this, GaloisResidue{mod_mul(n, mod_inv(d, modulus_), modulus_)});
	}
	}
	throw Error("unreachable field kind");
}

Quaternion operator+(const Quaternion& x, const Quaternion& y) {
	return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

Quaternion operator-(const Quaternion& x, const Quaternion& y) {
	return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

Quaternion operator-(const Quaternion& x) { return {-x.a, -x.b, -x.c, -x.d}; }

// Hamilton product: i² = j² = k² = ijk = -1.
Quaternion operator*(const Quaternion& x, const Quaternion& y) {
	return {
		x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
		x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
		x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
		x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a,
	};
}

FieldElement::FieldElement(Field field, Value value) : field_(field), value_(std::move(value)) {
	bool ok = false;
	switch (field_.kind()) {
	case FieldKind::rational:
		ok = std::holds_alternative<Rational>(value_);
		break;
	case FieldKind::galois:
		ok = std::holds_alternative<GaloisResidue>(value_);
		if (ok)
			std::get<GaloisResidue>(value_).value %= field_.modulus();
		break;
	case FieldKind::quaternion:
		ok = std::holds_alternative<Quaternion>(value_);
		break;
	}
	if (!ok)
		throw FieldMismatch("value representation does not belong to " + field_.name());
}

bool FieldElement::is_zero() const {
	return std::visit(
		[](const auto& v) {
			using T = std::decay_t<decltype(v)>;
			if constexpr (std::is_same_v<T, Rational>)
				return sgn(v) == 0;
			else if constexpr (std::is_same_v<T, GaloisResidue>)
				return v.value == 0;
			else
				return v.is_zero();
		},
		value_);
}

bool FieldElement::is_one() const { return *this == field_.one(); }

FieldElement add(const FieldElement& x, const FieldElement& y) {
	require_same_field(x, y);
	const Field& f = x.field();
	switch (f.kind()) {
	case FieldKind::rational:
		return FieldElement(f, Rational(x.as_rational() + y.as_rational()));
	case FieldKind::galois:
		return FieldElement(f, GaloisResidue{mod_add(x.as_residue().value, y.as_residue().value, f.modulus())});
	case FieldKind::quaternion:
		return FieldElement(f, x.as_quaternion() + y.as_quaternion());
	}
	throw Error("unreachable field kind");
}

FieldElement neg(const FieldElement& x) {
	const Field& f = x.field();
	switch (f.kind()) {
	case FieldKind::rational:
		return FieldElement(f, Rational(-x.as_rational()));
	case FieldKind::galois: {
		auto r = x.as_residue().value;
		return FieldElement(f, GaloisResidue{r == 0 ? 0 : f.modulus() - r});
	}
	case FieldKind::quaternion:
		return FieldElement(f, -x.as_quaternion());
	}
	throw Error("unreachable field kind");
}

FieldElement sub(const FieldElement& x, const FieldElement& y) {
	require_same_field(x, y);
	return add(x, neg(y));
}

FieldElement mul(const FieldElement& x, const FieldElement& y) {
	require_same_field(x, y);
	const Field& f = x.field();
	switch (f.kind()) {
	case FieldKind::rational:
		return FieldElement(f, Rational(x.as_rational() * y.as_rational()));
	case FieldKind::galois:
		return FieldElement(f, GaloisResidue{mod_mul(x.as_residue().value, y.as_residue().value, f.modulus())});
	case FieldKind::quaternion:
		return FieldElement(f, x.as_quaternion() * y.as_quaternion());
	}
	throw Error("unreachable field kind");
}

FieldElement inv(const FieldElement& x) {
	if (x.is_zero())
		throw DivisionByZero("inverse of zero in " + x.field().name());
	const Field& f = x.field();
	switch (f.kind()) {
	case FieldKind::rational:
		return FieldElement(f, Rational(1 / x.as_rational()));
	case FieldKind::galois:
		return FieldElement(f, GaloisResidue{mod_inv(x.as_residue().value, f.modulus())});
	case FieldKind::quaternion: {
		const Quaternion& q = x.as_quaternion();
		Rational n = q.norm();
		return FieldElement(f, Quaternion{q.a / n, -q.b / n, -q.c / n, -q.d / n});
	}
	}
	throw Error("unreachable field kind");
}

bool commutes(const FieldElement& x, const FieldElement& y) { return mul(x, y) == mul(y, x); }

bool is_central(const FieldElement& x) {
	if (x.field().is_commutative())
		return true;
	const Quaternion& q = x.as_quaternion();
	return sgn(q.b) == 0 && sgn(q.c) == 0 && sgn(q.d) == 0;
}

FieldElement conjugate_by(const FieldElement& p, const FieldElement& q) {
	require_same_field(p, q);
	return mul(mul(inv(q), p), q);
}

FieldElement norm(const FieldElement& x) {
	if (x.field().kind() == FieldKind::quaternion)
		return x.field().from_rational(x.as_quaternion().norm());
	return mul(x, x);
}

} // namespace crossratio
