#include "crossratio/plane.hpp"

#include "crossratio/random.hpp"

namespace crossratio {

namespace {

void require_same_field(const Field& f, const Field& g) {
	if (!(f == g))
		throw FieldMismatch("plane objects over " + f.name() + " and " + g.name());
}

PlanePoint meet(const PlaneLine& l1, const PlaneLine& l2, const char* what) {
	if (l1 == l2)
		throw DegenerateConfiguration(std::string(what) + ": the two lines coincide");
	auto hit = intersect(l1, l2);
	if (std::holds_alternative<std::monostate>(hit))
		throw DegenerateConfiguration(std::string(what) + ": the two lines are parallel");
	return std::get<PlanePoint>(hit);
}

void require_construction_input(const PlanePoint& o, const PlanePoint& i, const PlanePoint& a,
                                const PlanePoint& b, const PlanePoint& aux, const PlaneLine& axis) {
	for (const auto* p : {&i, &a, &b, &aux})
		require_same_field(o.field(), p->field());
	if (!axis.contains(a))
		throw NotOnLine("A is not on the line OI");
	if (!axis.contains(b))
		throw NotOnLine("B is not on the line OI");
	if (axis.contains(aux))
		throw AuxOnLine("the auxiliary point B1 lies on the line OI");
}

PlanePoint translate(const PlanePoint& p, const FieldElement& dx, const FieldElement& dy) {
	return {p.x + dx, p.y + dy};
}

} // namespace

PlanePoint::PlanePoint(FieldElement x_, FieldElement y_) : x(std::move(x_)), y(std::move(y_)) {
	require_same_field(x.field(), y.field());
}

PlaneLine PlaneLine::sloped(FieldElement m, FieldElement b) {
	require_same_field(m.field(), b.field());
	return PlaneLine(SlopedLine{std::move(m), std::move(b)});
}

const Field& PlaneLine::field() const {
	if (const auto* v = std::get_if<VerticalLine>(&form_))
		return v->c.field();
	return std::get<SlopedLine>(form_).m.field();
}

bool PlaneLine::contains(const PlanePoint& p) const {
	require_same_field(field(), p.field());
	if (const auto* v = std::get_if<VerticalLine>(&form_))
		return p.x == v->c;
	const auto& s = std::get<SlopedLine>(form_);
	return p.y == p.x * s.m + s.b;
}

bool PlaneLine::parallel_to(const PlaneLine& other) const {
	require_same_field(field(), other.field());
	if (is_vertical() || other.is_vertical())
		return is_vertical() && other.is_vertical();
	return std::get<SlopedLine>(form_).m == std::get<SlopedLine>(other.form_).m;
}

PlaneLine line_through(const PlanePoint& p, const PlanePoint& q) {
	require_same_field(p.field(), q.field());
	if (p == q)
		throw IdenticalPoints("a line needs two distinct points");
	if (p.x == q.x)
		return PlaneLine::vertical(p.x);
	FieldElement m = inv(q.x - p.x) * (q.y - p.y);
	FieldElement b = p.y - p.x * m;
	return PlaneLine::sloped(std::move(m), std::move(b));
}

PlaneLine parallel_through(const PlaneLine& l, const PlanePoint& p) {
	require_same_field(l.field(), p.field());
	if (l.is_vertical())
		return PlaneLine::vertical(p.x);
	const auto& m = std::get<SlopedLine>(l.form()).m;
	return PlaneLine::sloped(m, p.y - p.x * m);
}

Intersection intersect(const PlaneLine& l1, const PlaneLine& l2) {
	require_same_field(l1.field(), l2.field());
	if (l1 == l2)
		throw IdenticalLines("intersection of a line with itself");
	if (l1.parallel_to(l2))
		return std::monostate{};
	if (l1.is_vertical() || l2.is_vertical()) {
		const auto& v = l1.is_vertical() ? std::get<VerticalLine>(l1.form()) : std::get<VerticalLine>(l2.form());
		const auto& s = l1.is_vertical() ? std::get<SlopedLine>(l2.form()) : std::get<SlopedLine>(l1.form());
		return PlanePoint(v.c, v.c * s.m + s.b);
	}
	const auto& s1 = std::get<SlopedLine>(l1.form());
	const auto& s2 = std::get<SlopedLine>(l2.form());
	// x·m1 + b1 = x·m2 + b2  ⇒  x = (b2 - b1)(m1 - m2)⁻¹
	FieldElement x = (s2.b - s1.b) * inv(s1.m - s2.m);
	FieldElement y = x * s1.m + s1.b;
	return PlanePoint(std::move(x), std::move(y));
}

PlanePoint point_at(const PlanePoint& o, const PlanePoint& i, const FieldElement& t) {
	require_same_field(o.field(), i.field());
	require_same_field(o.field(), t.field());
	if (o == i)
		throw IdenticalPoints("O and I must differ");
	return {o.x + t * (i.x - o.x), o.y + t * (i.y - o.y)};
}

FieldElement coordinatize(const PlanePoint& o, const PlanePoint& i, const PlanePoint& p) {
	PlaneLine axis = line_through(o, i);
	if (!axis.contains(p))
		throw NotOnLine("point is not on the line OI");
	if (!(i.x == o.x))
		return (p.x - o.x) * inv(i.x - o.x);
	return (p.y - o.y) * inv(i.y - o.y);
}

ConstructionTrace trace_geometric_add(const PlanePoint& o, const PlanePoint& i, const PlanePoint& a,
                                      const PlanePoint& b, const PlanePoint& aux) {
	const PlaneLine axis = line_through(o, i);
	require_construction_input(o, i, a, b, aux, axis);

	const PlaneLine through_aux = parallel_through(axis, aux);
	const PlaneLine through_a = parallel_through(line_through(o, aux), a);
	PlanePoint p1 = meet(through_aux, through_a, "P1");
	const PlaneLine through_p1 = parallel_through(line_through(b, aux), p1);
	PlanePoint c = meet(through_p1, axis, "C");

	std::vector<ConstructionStep> steps{
		{"line OI", axis, {"O", "I"}},
		{"parallel to OI through B1", through_aux, {"B1", "P1"}},
		{"parallel to OB1 through A", through_a, {"A", "P1"}},
		{"parallel to BB1 through P1", through_p1, {"P1", "C"}},
	};
	return {std::move(p1), std::move(c), std::move(steps)};
}

ConstructionTrace trace_geometric_mul(const PlanePoint& o, const PlanePoint& i, const PlanePoint& a,
                                      const PlanePoint& b, const PlanePoint& aux) {
	const PlaneLine axis = line_through(o, i);
	require_construction_input(o, i, a, b, aux, axis);

	const PlaneLine through_a = parallel_through(line_through(i, aux), a);
	const PlaneLine o_aux = line_through(o, aux);
	PlanePoint p1 = meet(through_a, o_aux, "P1");
	const PlaneLine through_p1 = parallel_through(line_through(b, aux), p1);
	PlanePoint c = meet(through_p1, axis, "C");

	std::vector<ConstructionStep> steps{
		{"line OI", axis, {"O", "I"}},
		{"line OB1", o_aux, {"O", "B1", "P1"}},
		{"parallel to IB1 through A", through_a, {"A", "P1"}},
		{"parallel to BB1 through P1", through_p1, {"P1", "C"}},
	};
	return {std::move(p1), std::move(c), std::move(steps)};
}

void validate_desargues(const DesarguesConfig& cfg) {
	const PlanePoint* pts[] = {&cfg.a, &cfg.b, &cfg.c, &cfg.a2, &cfg.b2, &cfg.c2};
	for (const auto* p : pts)
		require_same_field(cfg.a.field(), p->field());

	auto require = [](bool ok, const char* clause) {
		if (!ok)
			throw HypothesisViolation(clause);
	};
	require(!(cfg.a == cfg.b) && !(cfg.b == cfg.c), "A, B, C pairwise distinct");
	require(!(cfg.a == cfg.c), "A != C");
	require(!(cfg.a2 == cfg.b2) && !(cfg.b2 == cfg.c2), "A', B', C' pairwise distinct");
	require(!(cfg.a2 == cfg.c2), "A' != C'");
	require(!(cfg.a == cfg.a2) && !(cfg.b == cfg.b2) && !(cfg.c == cfg.c2), "AA', BB', CC' are lines");

	const PlaneLine aa = line_through(cfg.a, cfg.a2);
	const PlaneLine bb = line_through(cfg.b, cfg.b2);
	const PlaneLine cc = line_through(cfg.c, cfg.c2);
	const PlaneLine ac = line_through(cfg.a, cfg.c);
	const PlaneLine ac2 = line_through(cfg.a2, cfg.c2);
	const PlaneLine* lines[] = {&aa, &bb, &cc, &ac, &ac2};
	for (int i = 0; i < 5; ++i)
		for (int j = i + 1; j < 5; ++j)
			require(!(*lines[i] == *lines[j]), "lines AA', BB', CC', AC, A'C' pairwise distinct");

	if (cfg.mode == PerspectiveMode::parallel_axis) {
		require(aa.parallel_to(bb) && bb.parallel_to(cc), "AA' || BB' || CC'");
	} else {
		require(cfg.center.has_value(), "center point P given");
		const PlanePoint& p = *cfg.center;
		require_same_field(cfg.a.field(), p.field());
		require(aa.contains(p) && bb.contains(p) && cc.contains(p), "AA', BB', CC' meet in P");
	}

	const PlaneLine ab = line_through(cfg.a, cfg.b);
	const PlaneLine ab2 = line_through(cfg.a2, cfg.b2);
	const PlaneLine bc = line_through(cfg.b, cfg.c);
	const PlaneLine bc2 = line_through(cfg.b2, cfg.c2);
	require(ab.parallel_to(ab2), "AB || A'B'");
	require(bc.parallel_to(bc2), "BC || B'C'");
	require(!(ab == ab2), "AB != A'B'");
	require(!(bc == bc2), "BC != B'C'");
}

bool check_desargues(const DesarguesConfig& cfg) {
	validate_desargues(cfg);
	return line_through(cfg.a, cfg.c).parallel_to(line_through(cfg.a2, cfg.c2));
}

DesarguesConfig generate_desargues_config(const Field& field, std::uint64_t seed, PerspectiveMode mode) {
	constexpr int kMaxAttempts = 100;
	const std::uint64_t stream = hash_name(field.name()) ^ (mode == PerspectiveMode::parallel_axis ? 0x70 : 0x63);
	for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
		SplitMix64 rng(derive_seed({seed, stream, static_cast<std::uint64_t>(attempt)}));
		auto point = [&] { return PlanePoint(random_element(field, rng), random_element(field, rng)); };
		try {
			PlanePoint a = point(), b = point(), c = point();
			if (a == b || line_through(a, b).contains(c))
				continue;
			const PlaneLine ab = line_through(a, b);
			const PlaneLine bc = line_through(b, c);

			DesarguesConfig cfg{a, b, c, a, b, c, mode, std::nullopt};
			if (mode == PerspectiveMode::parallel_axis) {
				FieldElement dx = random_element(field, rng), dy = random_element(field, rng);
				if (dx.is_zero() && dy.is_zero())
					continue;
				FieldElement t = random_nonzero(field, rng);
				cfg.a2 = translate(a, t * dx, t * dy);
				cfg.b2 = meet(parallel_through(ab, cfg.a2), line_through(b, translate(b, dx, dy)), "B'");
				cfg.c2 = meet(parallel_through(bc, cfg.b2), line_through(c, translate(c, dx, dy)), "C'");
			} else {
				PlanePoint p = point();
				if (p == a || p == b || p == c)
					continue;
				FieldElement t = random_nonzero(field, rng);
				if (t.is_one())
					continue;
				cfg.center = p;
				cfg.a2 = PlanePoint(p.x + t * (a.x - p.x), p.y + t * (a.y - p.y));
				cfg.b2 = meet(parallel_through(ab, cfg.a2), line_through(p, b), "B'");
				cfg.c2 = meet(parallel_through(bc, cfg.b2), line_through(p, c), "C'");
			}
			validate_desargues(cfg);
			return cfg;
		} catch (const Error&) {
			continue; // degenerate draw
		}
	}
	throw GenerationFailure("no valid Desargues configuration in " + std::to_string(kMaxAttempts) + " attempts over " +
	                        field.name());
}

} // namespace crossratio
