#include "crossratio/ratio.hpp"

namespace crossratio {

namespace {

// Product on K ∪ {∞} where X·∞ = ∞·X = ∞ for X ≠ O. O·∞ has no value.
ExtendedPoint ext_mul(const ExtendedPoint& x, const ExtendedPoint& y) {
	if (x.is_finite() && y.is_finite())
		return mul(x.value(), y.value());
	if ((x.is_finite() && x.value().is_zero()) || (y.is_finite() && y.value().is_zero()))
		throw InvalidArguments("O·∞ is undefined");
	return ExtendedPoint::infinity(x.field());
}

ExtendedPoint ext_sub(const FieldElement& x, const FieldElement& y) { return sub(x, y); }

} // namespace

const FieldElement& ExtendedPoint::value() const {
	if (!value_)
		throw InvalidArguments("the point at infinity has no finite value");
	return *value_;
}

ExtendedPoint inv(const ExtendedPoint& x) {
	if (x.is_infinite())
		return x.field().zero();
	if (x.value().is_zero())
		return ExtendedPoint::infinity(x.field());
	return inv(x.value());
}

FieldElement ratio2(const FieldElement& a, const FieldElement& b) { return mul(inv(b), a); }

FieldElement ratio3(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
	return mul(inv(sub(b, c)), sub(a, c));
}

FieldElement ratio2_inverse_law(const FieldElement& a, const FieldElement& b) { return ratio2(b, a); }

FieldElement ratio3_swapped(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
	return ratio3(b, a, c);
}

ExtendedPoint cross_ratio(const ExtendedPoint& a, const ExtendedPoint& b, const ExtendedPoint& c,
                          const ExtendedPoint& d) {
	const PointQuad q{a, b, c, d};
	for (const auto& p : q)
		if (!(p.field() == a.field()))
			throw InvalidArguments("cross-ratio arguments belong to different fields");

	int infinities = 0;
	for (const auto& p : q)
		infinities += p.is_infinite() ? 1 : 0;
	if (infinities > 1)
		throw InvalidArguments("at most one argument may be the point at infinity");

	for (int i = 0; i < 4; ++i)
		for (int j = i + 1; j < 4; ++j)
			for (int k = j + 1; k < 4; ++k)
				if (q[i] == q[j] && q[j] == q[k])
					throw InvalidArguments("no three of the points may be equal");

	const Field& field = a.field();
	const FieldElement one = field.one();

	if (infinities == 1) {
		if (a.is_infinite()) // (B-D)(B-C)⁻¹
			return ext_mul(ext_sub(b.value(), d.value()), inv(ext_sub(b.value(), c.value())));
		if (b.is_infinite()) // (A-D)⁻¹(A-C)
			return ext_mul(inv(ext_sub(a.value(), d.value())), ext_sub(a.value(), c.value()));
		if (c.is_infinite()) // (A-D)⁻¹(B-D)
			return ext_mul(inv(ext_sub(a.value(), d.value())), ext_sub(b.value(), d.value()));
		// (B-C)⁻¹(A-C)
		return ext_mul(inv(ext_sub(b.value(), c.value())), ext_sub(a.value(), c.value()));
	}

	if (a == b)
		return one;
	if (a == c)
		return field.zero();
	if (a == d)
		return ExtendedPoint::infinity(field);
	if (b == c)
		return ExtendedPoint::infinity(field);
	if (b == d)
		return field.zero();
	if (c == d)
		return one;

	const FieldElement &A = a.value(), &B = b.value(), &C = c.value(), &D = d.value();
	return mul(mul(inv(sub(A, D)), sub(B, D)), mul(inv(sub(B, C)), sub(A, C)));
}

FieldElement cross_ratio_alt(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                             const FieldElement& d) {
	const FieldElement inv_ab = inv(sub(a, b));
	return mul(sub(inv_ab, inv(sub(a, d))), inv(sub(inv_ab, inv(sub(a, c)))));
}

FieldElement solve_fourth_point(const FieldElement& r, const FieldElement& a, const FieldElement& b,
                                const FieldElement& c) {
	if (r.is_zero() || r.is_one())
		throw InvalidRatio("R must differ from O and I");
	if (a == b || a == c || b == c)
		throw InvalidArguments("A, B, C must be pairwise distinct");
	const FieldElement one = r.field().one();
	// c_r(A,B;C,D) = r(B,A;D)·r(A,B;C), so r(B,A;D) = S, i.e. B - D = (A - D)·S.
	const FieldElement s = mul(r, inv(ratio3(a, b, c)));
	if (s == one)
		throw InfiniteSolution("the fourth point is the point at infinity");
	return mul(sub(mul(a, s), b), inv(sub(s, one)));
}

PointQuad negate_all(const PointQuad& q) {
	auto negate = [](const ExtendedPoint& p) { return p.is_infinite() ? p : ExtendedPoint(neg(p.value())); };
	return {negate(q[0]), negate(q[1]), negate(q[2]), negate(q[3])};
}

PointQuad invert_all(const PointQuad& q) {
	auto invert = [](const ExtendedPoint& p) {
		if (p.is_infinite())
			throw InvalidArguments("cannot invert the point at infinity componentwise");
		return ExtendedPoint(inv(p.value()));
	};
	return {invert(q[0]), invert(q[1]), invert(q[2]), invert(q[3])};
}

} // namespace crossratio
