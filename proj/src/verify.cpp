#include "crossratio/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <span>

#include "crossratio/literal.hpp"
#include "crossratio/plane.hpp"
#include "crossratio/random.hpp"
#include "crossratio/ratio.hpp"

namespace crossratio {

namespace {

using Elements = std::span<const FieldElement>;

struct Outcome {
	enum class Kind { skip, pass, fail } kind = Kind::pass;
	std::string lhs, rhs;
	std::vector<std::string> inputs; // overrides the drawn elements when set

	static Outcome skip() { return {Kind::skip, {}, {}, {}}; }
	static Outcome pass() { return {}; }
};

/// Accumulates a sequence of equalities; the first mismatch becomes the
/// outcome, labelled with the law it came from.
class Laws {
public:
	template <class T>
	Laws& equal(std::string_view law, const T& lhs, const T& rhs) {
		if (failed_ || lhs == rhs)
			return *this;
		failed_ = true;
		lhs_ = std::string(law) + ": " + format(lhs);
		rhs_ = format(rhs);
		return *this;
	}

	Laws& holds(std::string_view law, bool ok) {
		if (failed_ || ok)
			return *this;
		failed_ = true;
		lhs_ = std::string(law) + ": false";
		rhs_ = "true";
		return *this;
	}

	Laws& inputs(std::vector<std::string> in) {
		inputs_ = std::move(in);
		return *this;
	}

	operator Outcome() const { // NOLINT
		Outcome out;
		if (failed_) {
			out.kind = Outcome::Kind::fail;
			out.lhs = lhs_;
			out.rhs = rhs_;
		}
		out.inputs = inputs_;
		return out;
	}

private:
	bool failed_ = false;
	std::string lhs_, rhs_;
	std::vector<std::string> inputs_;
};

enum class Applies { all, commutative, noncommutative };
enum class CheckKind { equality, witness_search };

using Body = std::function<Outcome(const Field&, Elements, SplitMix64&)>;

struct CheckDef {
	std::string_view name;
	std::size_t arity;
	bool exhaustible; // a pure function of the drawn elements
	Applies applies;
	CheckKind kind;
	Body body;
};

bool pairwise_distinct(Elements xs) {
	for (std::size_t i = 0; i < xs.size(); ++i)
		for (std::size_t j = i + 1; j < xs.size(); ++j)
			if (xs[i] == xs[j])
				return false;
	return true;
}

bool any_zero(Elements xs) {
	for (const auto& x : xs)
		if (x.is_zero())
			return true;
	return false;
}

// Element that commutes with everything, derived deterministically from x:
// x itself in a commutative field, the scalar part of x in H(Q).
FieldElement central_part(const FieldElement& x) {
	if (x.field().is_commutative())
		return x;
	return x.field().from_rational(x.as_quaternion().a);
}

ExtendedPoint cr(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d) {
	return cross_ratio(a, b, c, d);
}

FieldElement conjugation_rhs(ConjugationForm form, const FieldElement& a, const FieldElement& b,
                             const FieldElement& c, const FieldElement& d) {
	ExtendedPoint x = form == ConjugationForm::statement ? cr(a, b, c, d) : cr(a, c, b, d);
	return a * x.value() * inv(a);
}

std::vector<PlanePoint> random_aux_points(const PlaneLine& axis, std::size_t count, SplitMix64& rng) {
	const Field& field = axis.field();
	std::vector<PlanePoint> out;
	for (int guard = 0; out.size() < count && guard < 10000; ++guard) {
		PlanePoint p(random_element(field, rng), random_element(field, rng));
		if (axis.contains(p) || std::find(out.begin(), out.end(), p) != out.end())
			continue;
		out.push_back(std::move(p));
	}
	return out;
}

// ---------------------------------------------------------------- checks

Outcome field_axioms(const Field& f, Elements e, SplitMix64&) {
	const auto &x = e[0], &y = e[1], &z = e[2];
	const auto zero = f.zero(), one = f.one();
	Laws laws;
	laws.equal("(x+y)+z = x+(y+z)", (x + y) + z, x + (y + z))
		.equal("x+y = y+x", x + y, y + x)
		.equal("(xy)z = x(yz)", (x * y) * z, x * (y * z))
		.equal("x(y+z) = xy+xz", x * (y + z), x * y + x * z)
		.equal("(x+y)z = xz+yz", (x + y) * z, x * z + y * z)
		.equal("x+0 = x", x + zero, x)
		.equal("1x = x", one * x, x)
		.equal("x1 = x", x * one, x)
		.equal("x+(-x) = 0", x + neg(x), zero)
		.equal("x-y = x+(-y)", x - y, x + neg(y));
	if (!x.is_zero())
		laws.equal("x x^-1 = 1", x * inv(x), one).equal("x^-1 x = 1", inv(x) * x, one);
	return laws;
}

Outcome no_zero_divisors(const Field&, Elements e, SplitMix64&) {
	const auto &x = e[0], &y = e[1];
	return Laws().holds("xy = 0 implies x = 0 or y = 0", !(x * y).is_zero() || x.is_zero() || y.is_zero());
}

Outcome inverse_laws(const Field&, Elements e, SplitMix64&) {
	if (any_zero(e))
		return Outcome::skip();
	const auto &x = e[0], &y = e[1];
	return Laws().equal("inv(inv(x)) = x", inv(inv(x)), x).equal("inv(xy) = inv(y)inv(x)", inv(x * y), inv(y) * inv(x));
}

Outcome difference_of_inverses(const Field&, Elements e, SplitMix64&) {
	if (any_zero(e))
		return Outcome::skip();
	const auto &x = e[0], &y = e[1];
	return Laws().equal("x^-1 - y^-1 = y^-1(y-x)x^-1", inv(x) - inv(y), inv(y) * (y - x) * inv(x));
}

Outcome norm_multiplicative(const Field&, Elements e, SplitMix64&) {
	const auto &x = e[0], &y = e[1];
	return Laws()
		.equal("N(xy) = N(x)N(y)", norm(x * y), norm(x) * norm(y))
		.holds("N(x) = 0 iff x = 0", norm(x).is_zero() == x.is_zero());
}

Outcome center_by_sampling(const Field& f, Elements e, SplitMix64& rng) {
	// Alternate between arbitrary and central candidates so both verdicts occur.
	const FieldElement x = (rng.next() & 1) ? e[0] : central_part(e[0]);
	std::vector<FieldElement> probes{f.one()};
	if (f.kind() == FieldKind::quaternion) {
		probes.emplace_back(f, Quaternion{0, 1, 0, 0});
		probes.emplace_back(f, Quaternion{0, 0, 1, 0});
		probes.emplace_back(f, Quaternion{0, 0, 0, 1});
	}
	for (int k = 0; k < 50; ++k)
		probes.push_back(random_element(f, rng));
	bool brute = true;
	for (const auto& s : probes)
		brute = brute && commutes(x, s);
	return Laws().holds("is_central(x) iff x commutes with all probes", is_central(x) == brute).inputs({format(x)});
}

Outcome conjugacy(const Field& f, Elements e, SplitMix64&) {
	const auto &p = e[0], &q = e[1];
	if (q.is_zero())
		return Outcome::skip();
	const auto central = central_part(p);
	return Laws()
		.equal("conjugate_by(p, 1) = p", conjugate_by(p, f.one()), p)
		.equal("conjugate_by(central, q) = central", conjugate_by(central, q), central)
		.equal("q conjugate_by(p, q) = p q", q * conjugate_by(p, q), p * q);
}

Outcome degenerate_table(const Field& f, Elements e, SplitMix64&) {
	if (!pairwise_distinct(e))
		return Outcome::skip();
	const auto &x = e[0], &y = e[1], &z = e[2];
	const ExtendedPoint one = f.one(), zero = f.zero(), inf = ExtendedPoint::infinity(f);
	return Laws()
		.equal("A=B", cr(x, x, y, z), one)
		.equal("A=C", cr(x, y, x, z), zero)
		.equal("A=D", cr(x, y, z, x), inf)
		.equal("B=C", cr(y, x, x, z), inf)
		.equal("B=D", cr(y, x, z, x), zero)
		.equal("C=D", cr(y, z, x, x), one);
}

Outcome p1_inverse_law(const Field&, Elements e, SplitMix64&) {
	if (!pairwise_distinct(e))
		return Outcome::skip();
	const auto &A = e[0], &B = e[1], &C = e[2], &D = e[3];
	return Laws().equal("c_r(A,B;D,C) = c_r(A,B;C,D)^-1", cr(A, B, D, C), inv(cr(A, B, C, D)));
}

Outcome p2_negation_law(const Field&, Elements e, SplitMix64&) {
	if (!pairwise_distinct(e))
		return Outcome::skip();
	const auto &A = e[0], &B = e[1], &C = e[2], &D = e[3];
	return Laws().equal("c_r(-A,-B;-C,-D) = c_r(A,B;D,C)", cr(-A, -B, -C, -D), cr(A, B, D, C));
}

// Negating all four points leaves every difference negated, and the signs
// cancel pairwise inside each bracket.
Outcome p2_negation_invariance(const Field&, Elements e, SplitMix64&) {
	if (!pairwise_distinct(e))
		return Outcome::skip();
	const auto &A = e[0], &B = e[1], &C = e[2], &D = e[3];
	return Laws().equal("c_r(-A,-B;-C,-D) = c_r(A,B;C,D)", cr(-A, -B, -C, -D), cr(A, B, C, D));
}

Outcome p3_alternative_formula(const Field&, Elements e, SplitMix64&) {
	if (!pairwise_distinct(e))
		return Outcome::skip();
	const auto &A = e[0], &B = e[1], &C = e[2], &D = e[3];
	return Laws().equal("c_r = alternative formula", cr(A, B, C, D), ExtendedPoint(cross_ratio_alt(A, B, C, D)));
}

Outcome p4_complement(const Field& f, Elements e, SplitMix64&) {
	if (!pairwise_distinct(e))
		return Outcome::skip();
	const auto &A = e[0], &B = e[1], &C = e[2], &D = e[3];
	return Laws().equal("I - c_r(A,B;C,D) = c_r(A,C;B,D)", ExtendedPoint(f.one() - cr(A, B, C, D).value()),
	                    cr(A, C, B, D));
}

Outcome p5_permutations(const Field& f, Elements e, SplitMix64&) {
	if (!pairwise_distinct(e))
		return Outcome::skip();
	const auto &A = e[0], &B = e[1], &C = e[2], &D = e[3];
	const FieldElement R = cr(A, B, C, D).value();
	if (R.is_zero() || R.is_one())
		return Outcome::skip();
	const auto I = f.one();
	return Laws()
		.equal("(a) c_r(A,D;B,C) = I - R^-1", cr(A, D, B, C).value(), I - inv(R))
		.equal("(b) c_r(A,C;D,B) = (I - R)^-1", cr(A, C, D, B).value(), inv(I - R))
		.equal("(c) c_r(A,D;C,B) = (R - I)^-1 R", cr(A, D, C, B).value(), inv(R - I) * R);
}

Outcome p6_conjugation(const Field&, Elements e, SplitMix64&) {
	if (!pairwise_distinct(e) || any_zero(e))
		return Outcome::skip();
	const auto &A = e[0], &B = e[1], &C = e[2], &D = e[3];
	return Laws().equal("c_r(A^-1,B^-1;C^-1,D^-1) = A X A^-1", cr(inv(A), inv(B), inv(C), inv(D)).value(),
	                    conjugation_rhs(kPinnedConjugationForm, A, B, C, D));
}

Outcome p7_central_collapse(const Field&, Elements e, SplitMix64&) {
	const FieldElement A = central_part(e[0]);
	const std::array<FieldElement, 4> q{A, e[1], e[2], e[3]};
	if (!pairwise_distinct(q) || any_zero(q))
		return Outcome::skip();
	const auto &B = q[1], &C = q[2], &D = q[3];
	ExtendedPoint x = kPinnedConjugationForm == ConjugationForm::statement ? cr(A, B, C, D) : cr(A, C, B, D);
	return Laws()
		.holds("A central", is_central(A))
		.equal("c_r(A^-1,B^-1;C^-1,D^-1) = X", cr(inv(A), inv(B), inv(C), inv(D)), x)
		.inputs({format(A), format(B), format(C), format(D)});
}

Outcome p8_commutative_symmetry(const Field&, Elements e, SplitMix64&) {
	if (!pairwise_distinct(e))
		return Outcome::skip();
	const auto &A = e[0], &B = e[1], &C = e[2], &D = e[3];
	return Laws().equal("c_r(A,B;C,D) = c_r(B,A;D,C)", cr(A, B, C, D), cr(B, A, D, C));
}

// Witness search: "fail" here means "found a witness".
Outcome p9_noncommutative_witness(const Field&, Elements e, SplitMix64&) {
	if (!pairwise_distinct(e))
		return Outcome::skip();
	const auto &A = e[0], &B = e[1], &C = e[2], &D = e[3];
	return Laws().equal("c_r(A,B;C,D) != c_r(B,A;D,C)", cr(A, B, C, D), cr(B, A, D, C));
}

// Conditioned samples: pick A, B, C, then choose r(B,A;D) = α + β·r(A,B;C)
// with central α, β (so it lies in the centralizer of r(A,B;C)) and solve for
// D from B - D = (A - D)·r(B,A;D).
Outcome p10_center_conditions(const Field& f, Elements e, SplitMix64&) {
	const auto &A = e[0], &B = e[1], &C = e[2];
	if (!pairwise_distinct(e.first(3)))
		return Outcome::skip();
	const auto I = f.one();
	const FieldElement r_abc = ratio3(A, B, C);
	const FieldElement r_bad = central_part(e[3]) + central_part(e[4]) * r_abc;
	if (r_bad.is_zero() || r_bad == I)
		return Outcome::skip();
	const FieldElement D = (A * r_bad - B) * inv(r_bad - I);
	if (D == C)
		return Outcome::skip();
	return Laws()
		.equal("r(B,A;D) as constructed", ratio3(B, A, D), r_bad)
		.holds("r(B,A;D) commutes with r(A,B;C)", commutes(ratio3(B, A, D), r_abc))
		.equal("c_r(A,B;C,D) = c_r(B,A;D,C)", cr(A, B, C, D), cr(B, A, D, C))
		.inputs({format(A), format(B), format(C), format(D)});
}

Outcome p11_factorization(const Field&, Elements e, SplitMix64&) {
	if (!pairwise_distinct(e))
		return Outcome::skip();
	const auto &A = e[0], &B = e[1], &C = e[2], &D = e[3];
	return Laws().equal("c_r(A,B;C,D) = r(B,A;D) r(A,B;C)", cr(A, B, C, D),
	                    ExtendedPoint(ratio3(B, A, D) * ratio3(A, B, C)));
}

Outcome p12_infinity_reductions(const Field& f, Elements e, SplitMix64&) {
	if (!pairwise_distinct(e))
		return Outcome::skip();
	const auto &x = e[0], &y = e[1], &z = e[2];
	const auto inf = ExtendedPoint::infinity(f);
	return Laws()
		.equal("c_r(A,B;C,inf) = r(A,B;C)", cross_ratio(x, y, z, inf), ExtendedPoint(ratio3(x, y, z)))
		.equal("c_r(A,B;inf,D) = r(B,A;D)", cross_ratio(x, y, inf, z), ExtendedPoint(ratio3(y, x, z)))
		.equal("c_r(A,B;inf,D) = (A-D)^-1(B-D)", cross_ratio(x, y, inf, z), ExtendedPoint(inv(x - z) * (y - z)))
		.equal("c_r(A,inf;C,D) = r(C,D;A)", cross_ratio(x, inf, y, z), ExtendedPoint(ratio3(y, z, x)))
		.equal("c_r(inf,B;C,D) = (B-D)(B-C)^-1", cross_ratio(inf, x, y, z), ExtendedPoint((x - z) * inv(x - y)));
}

Outcome p13_ratio2_laws(const Field&, Elements e, SplitMix64&) {
	const auto &A = e[0], &B = e[1], &C = e[2];
	if (any_zero(e))
		return Outcome::skip();
	return Laws()
		.equal("r(A:B)^-1 = r(B:A)", inv(ratio2(A, B)), ratio2_inverse_law(A, B))
		.equal("r(A+B:C) = r(A:C)+r(B:C)", ratio2(A + B, C), ratio2(A, C) + ratio2(B, C))
		.equal("r(AB:C) = r(A:C)B", ratio2(A * B, C), ratio2(A, C) * B);
}

// Law as stated in the source: r(A:B·C) = C⁻¹·r(A:C).
Outcome p13_product_denominator_as_stated(const Field&, Elements e, SplitMix64&) {
	const auto &A = e[0], &B = e[1], &C = e[2];
	if (any_zero(e))
		return Outcome::skip();
	return Laws().equal("r(A:BC) = C^-1 r(A:C)", ratio2(A, B * C), inv(C) * ratio2(A, C));
}

// r(A:B·C) = (BC)⁻¹A = C⁻¹B⁻¹A = C⁻¹·r(A:B).
Outcome p13_product_denominator(const Field&, Elements e, SplitMix64&) {
	const auto &A = e[0], &B = e[1], &C = e[2];
	if (any_zero(e))
		return Outcome::skip();
	return Laws().equal("r(A:BC) = C^-1 r(A:B)", ratio2(A, B * C), inv(C) * ratio2(A, B));
}

bool ratio2_symmetric(const FieldElement& x, const FieldElement& y) { return ratio2(x, y) == ratio2(y, x); }

// Law as stated in the source: r(A:B) = r(B:A) iff A = B. Probed at (A,B),
// (A,A) and (A,-A) so that both directions are exercised on every sample.
Outcome p13_symmetry_as_stated(const Field&, Elements e, SplitMix64&) {
	const auto &A = e[0], &B = e[1];
	if (any_zero(e))
		return Outcome::skip();
	Laws laws;
	for (const auto& other : {B, A, FieldElement(-A)})
		laws.holds("r(A:B) = r(B:A) iff A = B", ratio2_symmetric(A, other) == (A == other));
	return laws.inputs({format(A), format(B), format(-A)});
}

// B⁻¹A = A⁻¹B means X = B⁻¹A satisfies X² = I, i.e. (X - I)(X + I) = O, so
// X = ±I: the symmetric pairs are exactly A = B and A = -B.
Outcome p13_symmetry(const Field&, Elements e, SplitMix64&) {
	const auto &A = e[0], &B = e[1];
	if (any_zero(e))
		return Outcome::skip();
	Laws laws;
	for (const auto& other : {B, A, FieldElement(-A)})
		laws.holds("r(A:B) = r(B:A) iff A = +-B", ratio2_symmetric(A, other) == (A == other || A == -other));
	return laws.inputs({format(A), format(B), format(-A)});
}

Outcome p14_ratio3_laws(const Field&, Elements e, SplitMix64&) {
	if (!pairwise_distinct(e) || any_zero(e))
		return Outcome::skip();
	const auto &A = e[0], &B = e[1], &C = e[2];
	return Laws()
		.equal("r(-A,-B;-C) = r(A,B;C)", ratio3(-A, -B, -C), ratio3(A, B, C))
		.equal("r(A,B;C)^-1 = r(B,A;C)", inv(ratio3(A, B, C)), ratio3_swapped(A, B, C))
		.equal("r(A^-1,B^-1;C^-1) = B r(A,B;C) A^-1", ratio3(inv(A), inv(B), inv(C)), B * ratio3(A, B, C) * inv(A));
}

Outcome p14_pappus_inverse_law(const Field& f, Elements e, SplitMix64&) {
	if (!pairwise_distinct(e) || any_zero(e))
		return Outcome::skip();
	const auto &A = e[0], &B = e[1], &C = e[2];
	return Laws().equal("r(A^-1,B^-1;C^-1) = r(A,B;C) r(B,A;O)", ratio3(inv(A), inv(B), inv(C)),
	                    ratio3(A, B, C) * ratio3(B, A, f.zero()));
}

Outcome p15_ratio_bijectivity(const Field&, Elements e, SplitMix64&) {
	const auto &X1 = e[0], &X2 = e[1], &B = e[2], &C = e[3], &R = e[4];
	if (X1 == X2 || B.is_zero() || B == C)
		return Outcome::skip();
	return Laws()
		.holds("X -> r(X:B) injective", !(ratio2(X1, B) == ratio2(X2, B)))
		.equal("r(B R : B) = R", ratio2(B * R, B), R)
		.holds("X -> r(X,B;C) injective", !(ratio3(X1, B, C) == ratio3(X2, B, C)))
		.equal("r(C + (B-C)R, B; C) = R", ratio3(C + (B - C) * R, B, C), R);
}

Outcome p16_uniqueness(const Field&, Elements e, SplitMix64&) {
	const auto &R = e[0], &A = e[1], &B = e[2], &C = e[3], &D2 = e[4];
	if (R.is_zero() || R.is_one() || !pairwise_distinct(e.subspan(1, 3)))
		return Outcome::skip();
	FieldElement D = R;
	try {
		D = solve_fourth_point(R, A, B, C);
	} catch (const InfiniteSolution&) {
		return Outcome::skip();
	}
	Laws laws;
	laws.equal("c_r(A,B;C,solve(R)) = R", cr(A, B, C, D), ExtendedPoint(R))
		.equal("solve is deterministic", solve_fourth_point(R, A, B, C), D)
		.inputs({format(R), format(A), format(B), format(C)});
	// Any other finite fourth point with the same value must be D itself.
	if (!(D2 == A) && !(D2 == B) && !(D2 == C)) {
		const FieldElement R2 = cr(A, B, C, D2).value();
		if (!R2.is_zero() && !R2.is_one())
			laws.equal("solve(c_r(A,B;C,D')) = D'", solve_fourth_point(R2, A, B, C), D2)
				.holds("equal cross-ratios force equal D", !(R2 == R) || D2 == D);
	}
	return laws;
}

// ---------------------------------------------------------------- plane

Outcome plane_incidence(const Field& f, Elements e, SplitMix64& rng) {
	const PlanePoint P(e[0], e[1]), Q(e[2], e[3]);
	if (P == Q)
		return Outcome::skip();
	const PlaneLine l = line_through(P, Q);
	const PlanePoint R(random_element(f, rng), random_element(f, rng));
	const PlaneLine par = parallel_through(l, R);
	const auto zero = f.zero(), one = f.one();
	Laws laws;
	laws.holds("P, Q on line PQ", l.contains(P) && l.contains(Q))
		.equal("line QP = line PQ", line_through(Q, P), l)
		.holds("R on parallel through R", par.contains(R))
		.holds("parallel has the same direction", par.parallel_to(l))
		.equal("parallel through R is unique", parallel_through(par, R), par)
		.holds("three non-collinear points", !line_through(PlanePoint(zero, zero), PlanePoint(one, zero))
		                                           .contains(PlanePoint(zero, one)));
	if (l.contains(R))
		laws.equal("parallel through a point of l is l", par, l);
	else
		laws.holds("distinct parallels do not meet", std::holds_alternative<std::monostate>(intersect(l, par)));
	return laws.inputs({format(P), format(Q), format(R)});
}

Outcome plane_coordinatize(const Field& f, Elements e, SplitMix64& rng) {
	const PlanePoint O(e[0], e[1]), I(e[2], e[3]);
	const auto& t = e[4];
	if (O == I)
		return Outcome::skip();
	const PlaneLine axis = line_through(O, I);
	const FieldElement u = random_element(f, rng);
	PlanePoint P = axis.is_vertical() ? PlanePoint(O.x, u)
	                                  : PlanePoint(u, u * std::get<SlopedLine>(axis.form()).m +
	                                                      std::get<SlopedLine>(axis.form()).b);
	return Laws()
		.equal("coordinatize(point_at(t)) = t", coordinatize(O, I, point_at(O, I, t)), t)
		.equal("point_at(coordinatize(P)) = P", point_at(O, I, coordinatize(O, I, P)), P)
		.equal("coordinatize(O) = 0", coordinatize(O, I, O), f.zero())
		.equal("coordinatize(I) = 1", coordinatize(O, I, I), f.one())
		.inputs({format(O), format(I), format(t), format(P)});
}

enum class PlaneOp { add, mul };

Outcome construction_agreement(PlaneOp op, const Field& f, Elements e, SplitMix64& rng) {
	const PlanePoint O(e[0], e[1]), I(e[2], e[3]);
	const auto &a = e[4], &b = e[5];
	if (O == I)
		return Outcome::skip();
	const PlaneLine axis = line_through(O, I);
	auto aux = random_aux_points(axis, 1, rng);
	if (aux.empty())
		return Outcome::skip();
	const PlanePoint A = point_at(O, I, a), B = point_at(O, I, b);
	std::vector<std::string> inputs{format(O), format(I), format(A), format(B), format(aux[0])};
	if (op == PlaneOp::add)
		return Laws()
			.equal("coord(A (+) B) = a + b", coordinatize(O, I, geometric_add(O, I, A, B, aux[0])), a + b)
			.inputs(std::move(inputs));
	(void)f;
	return Laws()
		.equal("coord(A (x) B) = a b", coordinatize(O, I, geometric_mul(O, I, A, B, aux[0])), a * b)
		.inputs(std::move(inputs));
}

Outcome plane_aux_independence(const Field&, Elements e, SplitMix64& rng) {
	const PlanePoint O(e[0], e[1]), I(e[2], e[3]);
	if (O == I)
		return Outcome::skip();
	const PlaneLine axis = line_through(O, I);
	auto aux = random_aux_points(axis, 10, rng);
	if (aux.size() < 10)
		return Outcome::skip();
	const PlanePoint A = point_at(O, I, e[4]), B = point_at(O, I, e[5]);
	const PlanePoint sum = geometric_add(O, I, A, B, aux[0]);
	const PlanePoint product = geometric_mul(O, I, A, B, aux[0]);
	Laws laws;
	for (std::size_t k = 1; k < aux.size(); ++k)
		laws.equal("A (+) B independent of B1", geometric_add(O, I, A, B, aux[k]), sum)
			.equal("A (x) B independent of B1", geometric_mul(O, I, A, B, aux[k]), product);
	return laws.inputs({format(O), format(I), format(A), format(B)});
}

Outcome desargues(PerspectiveMode mode, const Field& f, Elements, SplitMix64& rng) {
	const std::uint64_t seed = rng.next();
	const DesarguesConfig cfg = generate_desargues_config(f, seed, mode);
	std::vector<std::string> inputs{format(cfg.a), format(cfg.b), format(cfg.c),
	                                format(cfg.a2), format(cfg.b2), format(cfg.c2)};
	if (cfg.center)
		inputs.push_back("P=" + format(*cfg.center));
	return Laws().holds("AC || A'C'", check_desargues(cfg)).inputs(std::move(inputs));
}

const std::vector<CheckDef>& registry() {
	using namespace std::placeholders;
	static const std::vector<CheckDef> checks{
		{"field_axioms", 3, true, Applies::all, CheckKind::equality, field_axioms},
		{"no_zero_divisors", 2, true, Applies::all, CheckKind::equality, no_zero_divisors},
		{"inverse_laws", 2, true, Applies::all, CheckKind::equality, inverse_laws},
		{"difference_of_inverses", 2, true, Applies::all, CheckKind::equality, difference_of_inverses},
		{"norm_multiplicative", 2, true, Applies::all, CheckKind::equality, norm_multiplicative},
		{"center_by_sampling", 1, false, Applies::all, CheckKind::equality, center_by_sampling},
		{"conjugacy", 2, true, Applies::all, CheckKind::equality, conjugacy},
		{"degenerate_table", 3, true, Applies::all, CheckKind::equality, degenerate_table},
		{"p1_inverse_law", 4, true, Applies::all, CheckKind::equality, p1_inverse_law},
		{"p2_negation_law", 4, true, Applies::all, CheckKind::equality, p2_negation_law},
		{"p2_negation_invariance", 4, true, Applies::all, CheckKind::equality, p2_negation_invariance},
		{"p3_alternative_formula", 4, true, Applies::all, CheckKind::equality, p3_alternative_formula},
		{"p4_complement", 4, true, Applies::all, CheckKind::equality, p4_complement},
		{"p5_permutations", 4, true, Applies::all, CheckKind::equality, p5_permutations},
		{"p6_conjugation", 4, true, Applies::all, CheckKind::equality, p6_conjugation},
		{"p7_central_collapse", 4, true, Applies::all, CheckKind::equality, p7_central_collapse},
		{"p8_commutative_symmetry", 4, true, Applies::commutative, CheckKind::equality, p8_commutative_symmetry},
		{"p9_noncommutative_witness", 4, false, Applies::noncommutative, CheckKind::witness_search,
		 p9_noncommutative_witness},
		{"p10_center_conditions", 5, true, Applies::all, CheckKind::equality, p10_center_conditions},
		{"p11_factorization", 4, true, Applies::all, CheckKind::equality, p11_factorization},
		{"p12_infinity_reductions", 3, true, Applies::all, CheckKind::equality, p12_infinity_reductions},
		{"p13_ratio2_laws", 3, true, Applies::all, CheckKind::equality, p13_ratio2_laws},
		{"p13_product_denominator_as_stated", 3, true, Applies::all, CheckKind::equality,
		 p13_product_denominator_as_stated},
		{"p13_product_denominator", 3, true, Applies::all, CheckKind::equality, p13_product_denominator},
		{"p13_symmetry_as_stated", 2, true, Applies::all, CheckKind::equality, p13_symmetry_as_stated},
		{"p13_symmetry", 2, true, Applies::all, CheckKind::equality, p13_symmetry},
		{"p14_ratio3_laws", 3, true, Applies::all, CheckKind::equality, p14_ratio3_laws},
		{"p14_pappus_inverse_law", 3, true, Applies::commutative, CheckKind::equality, p14_pappus_inverse_law},
		{"p15_ratio_bijectivity", 5, true, Applies::all, CheckKind::equality, p15_ratio_bijectivity},
		{"p16_uniqueness", 5, true, Applies::all, CheckKind::equality, p16_uniqueness},
		{"plane_incidence", 4, false, Applies::all, CheckKind::equality, plane_incidence},
		{"plane_coordinatize", 5, false, Applies::all, CheckKind::equality, plane_coordinatize},
		{"plane_add_agreement", 6, false, Applies::all, CheckKind::equality,
		 std::bind(construction_agreement, PlaneOp::add, _1, _2, _3)},
		{"plane_mul_agreement", 6, false, Applies::all, CheckKind::equality,
		 std::bind(construction_agreement, PlaneOp::mul, _1, _2, _3)},
		{"plane_aux_independence", 6, false, Applies::all, CheckKind::equality, plane_aux_independence},
		{"desargues_parallel", 0, false, Applies::all, CheckKind::equality,
		 std::bind(desargues, PerspectiveMode::parallel_axis, _1, _2, _3)},
		{"desargues_concurrent", 0, false, Applies::all, CheckKind::equality,
		 std::bind(desargues, PerspectiveMode::center_point, _1, _2, _3)},
	};
	return checks;
}

const CheckDef& lookup(std::string_view name) {
	for (const auto& def : registry())
		if (def.name == name)
			return def;
	throw UnknownCheck("unknown check '" + std::string(name) + "'");
}

constexpr std::uint64_t kMaxRedraws = 1000;
constexpr std::uint64_t kMaxExhaustive = 1'000'000;

std::optional<std::uint64_t> tuple_space(const Field& field, std::size_t arity) {
	if (field.kind() != FieldKind::galois || field.modulus() > 7)
		return std::nullopt;
	std::uint64_t n = 1;
	for (std::size_t k = 0; k < arity; ++k) {
		n *= field.modulus();
		if (n > kMaxExhaustive)
			return std::nullopt;
	}
	return n;
}

// Evaluates one sample; unexpected library errors count as failures.
Outcome evaluate(const CheckDef& def, const Field& field, Elements elems, SplitMix64& rng) {
	try {
		return def.body(field, elems, rng);
	} catch (const Error& err) {
		Outcome out;
		out.kind = Outcome::Kind::fail;
		out.lhs = std::string("error: ") + err.what();
		out.rhs = "no error";
		return out;
	}
}

void record(CheckRecord& rec, Outcome out, Elements elems) {
	++rec.samples_run;
	if (out.kind != Outcome::Kind::fail)
		return;
	++rec.failures;
	if (rec.witnesses.size() >= kMaxWitnesses)
		return;
	Witness w;
	if (!out.inputs.empty())
		w.inputs = std::move(out.inputs);
	else
		for (const auto& x : elems)
			w.inputs.push_back(format(x));
	w.lhs = std::move(out.lhs);
	w.rhs = std::move(out.rhs);
	rec.witnesses.push_back(std::move(w));
}

} // namespace

bool VerificationReport::all_passed() const {
	for (const auto& c : checks)
		if (!c.skipped && !c.passed)
			return false;
	return true;
}

const CheckRecord* VerificationReport::find(std::string_view name) const {
	for (const auto& c : checks)
		if (c.name == name)
			return &c;
	return nullptr;
}

std::vector<std::string> check_names() {
	std::vector<std::string> out;
	for (const auto& def : registry())
		out.emplace_back(def.name);
	return out;
}

bool check_applies(std::string_view name, const Field& field) {
	switch (lookup(name).applies) {
	case Applies::all:
		return true;
	case Applies::commutative:
		return field.is_commutative();
	case Applies::noncommutative:
		return !field.is_commutative();
	}
	return false;
}

CheckRecord run_check(const CheckSpec& spec) {
	const CheckDef& def = lookup(spec.name);
	if (spec.samples == 0)
		throw InvalidArguments("samples must be at least 1");
	const Field& field = spec.field;
	const std::uint64_t stream = hash_name(def.name);

	CheckRecord rec;
	rec.name = std::string(def.name);

	auto space = tuple_space(field, def.arity);
	const bool exhaustive = def.exhaustible && def.kind == CheckKind::equality && space &&
	                        spec.mode != SamplingMode::sampled;
	if (spec.mode == SamplingMode::exhaustive && !exhaustive)
		throw Error("check '" + rec.name + "' cannot be enumerated over " + field.name());

	if (exhaustive) {
		rec.exhaustive = true;
		std::vector<FieldElement> elems(def.arity, field.zero());
		for (std::uint64_t index = 0; index < *space; ++index) {
			std::uint64_t rest = index;
			for (auto& x : elems) {
				x = FieldElement(field, GaloisResidue{static_cast<std::uint32_t>(rest % field.modulus())});
				rest /= field.modulus();
			}
			SplitMix64 rng(derive_seed({spec.seed, stream, index}));
			Outcome out = evaluate(def, field, elems, rng);
			if (out.kind == Outcome::Kind::skip)
				++rec.redraws;
			else
				record(rec, std::move(out), elems);
		}
		rec.passed = rec.failures == 0 && rec.samples_run > 0;
		return rec;
	}

	bool witness_found = false;
	for (std::uint64_t i = 0; i < spec.samples && !witness_found; ++i) {
		bool done = false;
		for (std::uint64_t attempt = 0; attempt < kMaxRedraws && !done; ++attempt) {
			SplitMix64 rng(derive_seed({spec.seed, stream, i, attempt}));
			std::vector<FieldElement> elems;
			elems.reserve(def.arity);
			for (std::size_t k = 0; k < def.arity; ++k)
				elems.push_back(random_element(field, rng));
			Outcome out = evaluate(def, field, elems, rng);
			if (out.kind == Outcome::Kind::skip) {
				++rec.redraws;
				continue;
			}
			done = true;
			witness_found = def.kind == CheckKind::witness_search && out.kind == Outcome::Kind::fail;
			record(rec, std::move(out), elems);
		}
		if (!done) {
			rec.note = "precondition unsatisfied after " + std::to_string(kMaxRedraws) + " redraws";
			++rec.failures;
			break;
		}
	}

	if (def.kind == CheckKind::witness_search) {
		rec.passed = witness_found;
		rec.failures = 0;
		rec.note = witness_found ? "witness found at sample " + std::to_string(rec.samples_run)
		                         : "no witness in " + std::to_string(rec.samples_run) + " samples";
	} else {
		rec.passed = rec.failures == 0;
	}

	if (def.name == "p6_conjugation") {
		auto res = resolve_p6_form(field, spec.seed, spec.samples);
		auto form = res.resolved();
		rec.note = "statement form " + std::to_string(res.statement_matches) + "/" + std::to_string(res.samples) +
		           ", proof form " + std::to_string(res.proof_matches) + "/" + std::to_string(res.samples) +
		           "; resolved: " + (form ? std::string(to_string(*form)) : std::string("none"));
		rec.passed = rec.passed && form == kPinnedConjugationForm;
	}
	return rec;
}

std::optional<ConjugationForm> ConjugationResolution::resolved() const {
	const bool statement = samples > 0 && statement_matches == samples;
	const bool proof = samples > 0 && proof_matches == samples;
	if (statement == proof)
		return std::nullopt;
	return statement ? ConjugationForm::statement : ConjugationForm::proof;
}

std::string_view to_string(ConjugationForm form) {
	return form == ConjugationForm::statement ? "A*c_r(A,B;C,D)*A^-1" : "A*c_r(A,C;B,D)*A^-1";
}

ConjugationResolution resolve_p6_form(const Field& field, std::uint64_t seed, std::uint64_t samples) {
	const std::uint64_t stream = hash_name("p6_conjugation");
	ConjugationResolution res;
	for (std::uint64_t i = 0; i < samples; ++i) {
		for (std::uint64_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
			SplitMix64 rng(derive_seed({seed, stream, i, attempt}));
			std::vector<FieldElement> e;
			for (int k = 0; k < 4; ++k)
				e.push_back(random_element(field, rng));
			if (!pairwise_distinct(e) || any_zero(e))
				continue;
			const FieldElement lhs = cr(inv(e[0]), inv(e[1]), inv(e[2]), inv(e[3])).value();
			++res.samples;
			res.statement_matches += lhs == conjugation_rhs(ConjugationForm::statement, e[0], e[1], e[2], e[3]);
			res.proof_matches += lhs == conjugation_rhs(ConjugationForm::proof, e[0], e[1], e[2], e[3]);
			break;
		}
	}
	return res;
}

VerificationReport run_suite(const Field& field, std::uint64_t seed, std::uint64_t samples) {
	VerificationReport report;
	report.field = field;
	report.seed = seed;
	report.samples = samples;
	{
		auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
		char buf[32];
		std::tm tm{};
		gmtime_r(&now, &tm);
		std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
		report.timestamp = buf;
	}
	for (const auto& def : registry()) {
		if (!check_applies(def.name, field)) {
			CheckRecord rec;
			rec.name = std::string(def.name);
			rec.skipped = true;
			rec.passed = true;
			rec.note = "not applicable to " + field.name();
			report.checks.push_back(std::move(rec));
			continue;
		}
		// The witness search only needs to succeed once; cap it at 100 draws.
		std::uint64_t n = def.kind == CheckKind::witness_search ? std::min<std::uint64_t>(samples, 100) : samples;
		report.checks.push_back(run_check({std::string(def.name), field, n, seed, SamplingMode::automatic}));
	}
	return report;
}

nlohmann::json to_json(const VerificationReport& report) {
	nlohmann::json checks = nlohmann::json::array();
	for (const auto& c : report.checks) {
		nlohmann::json witnesses = nlohmann::json::array();
		for (const auto& w : c.witnesses)
			witnesses.push_back({{"inputs", w.inputs}, {"lhs", w.lhs}, {"rhs", w.rhs}});
		nlohmann::json entry{{"name", c.name},         {"samples_run", c.samples_run}, {"skipped", c.skipped},
		                     {"passed", c.passed},     {"exhaustive", c.exhaustive},   {"failures", c.failures},
		                     {"redraws", c.redraws},   {"witnesses", witnesses}};
		if (!c.note.empty())
			entry["note"] = c.note;
		checks.push_back(std::move(entry));
	}
	return {{"field", report.field.name()}, {"seed", report.seed},           {"samples", report.samples},
	        {"timestamp", report.timestamp}, {"conjugation_form", to_string(kPinnedConjugationForm)},
	        {"checks", checks}};
}

std::string to_text(const VerificationReport& report) {
	std::string out = "field " + report.field.name() + "  seed " + std::to_string(report.seed) + "  samples " +
	                  std::to_string(report.samples) + "\n";
	for (const auto& c : report.checks) {
		std::string status = c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL");
		out += status + "  " + c.name + "  (" + std::to_string(c.samples_run) + " samples";
		if (c.exhaustive)
			out += ", exhaustive";
		if (c.redraws)
			out += ", " + std::to_string(c.redraws) + " redrawn";
		if (c.failures)
			out += ", " + std::to_string(c.failures) + " failures";
		out += ")";
		if (!c.note.empty())
			out += "  " + c.note;
		out += "\n";
		for (const auto& w : c.witnesses) {
			out += "      inputs:";
			for (const auto& in : w.inputs)
				out += " " + in;
			out += "\n      lhs " + w.lhs + "\n      rhs " + w.rhs + "\n";
		}
	}
	out += report.all_passed() ? "all checks passed\n" : "some checks FAILED\n";
	return out;
}

} // namespace crossratio
