#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crossratio/errors.hpp"
#include "crossratio/literal.hpp"
#include "crossratio/random.hpp"
#include "crossratio/skewfield.hpp"

#include "oracles.hpp"

using namespace crossratio;

namespace {

FieldElement q(long a, long b, long c, long d) {
	return FieldElement(Field::quaternion(), Quaternion{a, b, c, d});
}

FieldElement from_oracle(const oracle::Quat& x) {
	return FieldElement(Field::quaternion(), Quaternion{x[0], x[1], x[2], x[3]});
}

oracle::Quat to_oracle(const FieldElement& x) {
	const Quaternion& v = x.as_quaternion();
	return {v.a, v.b, v.c, v.d};
}

FieldElement rat(long n, long d = 1) { return Field::rational().from_rational(Rational(n, d)); }
FieldElement gf(std::uint32_t p, long v) { return Field::galois(p).from_integer(v); }

} // namespace

TEST_CASE("field selectors") {
	CHECK(Field::parse("rational") == Field::rational());
	CHECK(Field::parse("quaternion") == Field::quaternion());
	CHECK(Field::parse("gf:101") == Field::galois(101));
	CHECK_FALSE(Field::galois(5) == Field::galois(7));
	CHECK_THROWS_AS(Field::galois(4), InvalidModulus);
	CHECK_THROWS_AS(Field::galois(1), InvalidModulus);
	CHECK_THROWS_AS(Field::galois(2147483648u), InvalidModulus);
	CHECK_THROWS_AS(Field::parse("gf:4"), InvalidModulus);
	CHECK(Field::galois(2147483647u).modulus() == 2147483647u);
	CHECK(Field::quaternion().is_commutative() == false);
	CHECK(Field::galois(3).is_commutative());
}

TEST_CASE("addition, negation, subtraction") {
	CHECK(add(rat(0), rat(7, 3)) == rat(7, 3));
	CHECK(add(rat(1, 2), rat(1, 3)) == rat(5, 6));
	CHECK(add(q(0, 1, 0, 0), q(0, 0, 1, 0)) == q(0, 1, 1, 0));
	CHECK(add(gf(5, 3), gf(5, 4)) == gf(5, 2));
	CHECK(neg(gf(7, 3)) == gf(7, 4));
	CHECK(neg(q(1, -2, 3, 0)) == q(-1, 2, -3, 0));
	CHECK(sub(rat(1), rat(3, 4)) == rat(1, 4));
	CHECK(sub(gf(5, 1), gf(5, 3)) == gf(5, 3));
}

TEST_CASE("Hamilton products") {
	const auto one = q(1, 0, 0, 0), i = q(0, 1, 0, 0), j = q(0, 0, 1, 0), k = q(0, 0, 0, 1);
	CHECK(mul(i, j) == k);
	CHECK(mul(j, i) == -k);
	CHECK(mul(j, k) == i);
	CHECK(mul(k, j) == -i);
	CHECK(mul(k, i) == j);
	CHECK(mul(i, k) == -j);
	for (const auto& u : {i, j, k})
		CHECK(mul(u, u) == -one);
	CHECK(mul(mul(i, j), k) == -one);
	CHECK(mul(gf(5, 3), gf(5, 4)) == gf(5, 2));
	CHECK(mul(rat(2, 3), rat(9, 4)) == rat(3, 2));
}

TEST_CASE("quaternion product agrees with the table-driven oracle") {
	SplitMix64 rng(20261018);
	const Field h = Field::quaternion();
	for (int n = 0; n < 1000; ++n) {
		const FieldElement x = random_element(h, rng), y = random_element(h, rng);
		REQUIRE(to_oracle(mul(x, y)) == oracle::mul(to_oracle(x), to_oracle(y)));
		if (!x.is_zero())
			REQUIRE(inv(x) == from_oracle(oracle::inv(to_oracle(x))));
	}
}

TEST_CASE("inverses") {
	CHECK(inv(rat(-3, 5)) == rat(-5, 3));
	CHECK(inv(gf(7, 3)) == gf(7, 5));
	CHECK(inv(q(0, 1, 0, 0)) == q(0, -1, 0, 0));
	CHECK(inv(q(1, 1, 0, 0)) == FieldElement(Field::quaternion(), Quaternion{Rational(1, 2), Rational(-1, 2), 0, 0}));
	CHECK_THROWS_AS(inv(rat(0)), DivisionByZero);
	CHECK_THROWS_AS(inv(gf(11, 0)), DivisionByZero);
	CHECK_THROWS_AS(inv(q(0, 0, 0, 0)), DivisionByZero);
}

TEST_CASE("every nonzero residue has an inverse and there are no zero divisors in GF(5)") {
	const Field f = Field::galois(5);
	for (long a = 0; a < 5; ++a) {
		if (a != 0)
			CHECK(mul(f.from_integer(a), inv(f.from_integer(a))).is_one());
		for (long b = 0; b < 5; ++b)
			CHECK(mul(f.from_integer(a), f.from_integer(b)).is_zero() == (a == 0 || b == 0));
	}
}

TEST_CASE("mixing fields is rejected") {
	CHECK_THROWS_AS(add(gf(5, 1), gf(7, 1)), FieldMismatch);
	CHECK_THROWS_AS(mul(rat(1), q(1, 0, 0, 0)), FieldMismatch);
	CHECK_THROWS_AS(commutes(rat(1), gf(3, 1)), FieldMismatch);
}

TEST_CASE("commutation, centre, conjugation") {
	const auto i = q(0, 1, 0, 0), j = q(0, 0, 1, 0);
	CHECK_FALSE(commutes(i, j));
	CHECK(commutes(i, q(3, 2, 0, 0)));
	CHECK(is_central(q(5, 0, 0, 0)));
	CHECK_FALSE(is_central(i));
	CHECK(is_central(rat(7)));
	CHECK(conjugate_by(i, j) == -i);
	CHECK(conjugate_by(rat(4), rat(9)) == rat(4));
	CHECK_THROWS_AS(conjugate_by(i, q(0, 0, 0, 0)), DivisionByZero);

	// The analytic centre test agrees with commuting against a sampled set.
	SplitMix64 rng(7);
	const Field h = Field::quaternion();
	for (int n = 0; n < 200; ++n) {
		FieldElement x = random_element(h, rng);
		if (n % 4 == 0)
			x = random_central(h, rng);
		bool commutes_with_all = true;
		for (int m = 0; m < 20; ++m)
			commutes_with_all = commutes_with_all && commutes(x, random_element(h, rng));
		CHECK(is_central(x) == commutes_with_all);
	}
}

TEST_CASE("norm is multiplicative") {
	SplitMix64 rng(99);
	for (const Field& f : {Field::rational(), Field::galois(101), Field::quaternion()})
		for (int n = 0; n < 300; ++n) {
			const FieldElement x = random_element(f, rng), y = random_element(f, rng);
			CHECK(norm(mul(x, y)) == mul(norm(x), norm(y)));
		}
	CHECK(norm(q(1, 2, 3, 4)) == q(30, 0, 0, 0));
}
