#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crossratio/errors.hpp"
#include "crossratio/verify.hpp"

using namespace crossratio;

namespace {

CheckRecord run(const char* name, const Field& field, std::uint64_t samples = 1000, std::uint64_t seed = 42,
                SamplingMode mode = SamplingMode::automatic) {
	return run_check({name, field, samples, seed, mode});
}

nlohmann::json without_timestamp(const VerificationReport& report) {
	nlohmann::json j = to_json(report);
	j.erase("timestamp");
	return j;
}

} // namespace

TEST_CASE("single checks") {
	const CheckRecord p1 = run("p1_inverse_law", Field::rational());
	CHECK(p1.passed);
	CHECK(p1.samples_run == 1000);
	CHECK(p1.failures == 0);
	CHECK(p1.witnesses.empty());

	const CheckRecord rational_p9 = run("p9_noncommutative_witness", Field::rational(), 100);
	CHECK_FALSE(rational_p9.passed);
	CHECK(rational_p9.witnesses.empty());

	const CheckRecord quaternion_p9 = run("p9_noncommutative_witness", Field::quaternion(), 100);
	CHECK(quaternion_p9.passed);
	REQUIRE(quaternion_p9.witnesses.size() == 1);
	CHECK(quaternion_p9.witnesses[0].inputs.size() == 4);
	CHECK(quaternion_p9.witnesses[0].lhs != quaternion_p9.witnesses[0].rhs);
	CHECK(quaternion_p9.samples_run <= 100);

	CHECK_THROWS_AS(run("p99", Field::rational()), UnknownCheck);
	CHECK_THROWS_AS(run("p1_inverse_law", Field::rational(), 0), InvalidArguments);
	CHECK_THROWS_AS(run("plane_incidence", Field::galois(5), 10, 1, SamplingMode::exhaustive), Error);
}

TEST_CASE("an identity that is false is reported with capped witnesses") {
	const CheckRecord r = run("p2_negation_law", Field::rational(), 200);
	CHECK_FALSE(r.passed);
	CHECK(r.failures > kMaxWitnesses);
	CHECK(r.witnesses.size() == kMaxWitnesses);
	CHECK(run("p2_negation_invariance", Field::rational(), 200).passed);
}

TEST_CASE("preconditions are redrawn, never evaluated") {
	// In GF(11) a random 4-tuple repeats a point about half the time.
	const CheckRecord sampled = run("p1_inverse_law", Field::galois(11), 500, 3, SamplingMode::sampled);
	CHECK(sampled.passed);
	CHECK(sampled.redraws > 0);
	CHECK(sampled.samples_run == 500);
}

TEST_CASE("GF(5): sampled and exhaustive verdicts agree") {
	for (const char* name : {"p1_inverse_law", "p2_negation_law", "p2_negation_invariance", "p3_alternative_formula",
	                         "p4_complement", "p5_permutations", "p8_commutative_symmetry", "p11_factorization"}) {
		CAPTURE(name);
		const CheckRecord all = run(name, Field::galois(5), 1000, 42, SamplingMode::exhaustive);
		const CheckRecord some = run(name, Field::galois(5), 1000, 42, SamplingMode::sampled);
		CHECK(all.exhaustive);
		CHECK_FALSE(some.exhaustive);
		CHECK(all.samples_run == 120); // ordered 4-tuples of distinct residues
		CHECK(all.passed == some.passed);
	}
}

TEST_CASE("conjugation form") {
	const ConjugationResolution h = resolve_p6_form(42, 1000);
	CHECK(h.samples == 1000);
	CHECK(h.statement_matches == 1000);
	CHECK(h.proof_matches < 1000);
	REQUIRE(h.resolved().has_value());
	CHECK(*h.resolved() == kPinnedConjugationForm);
	CHECK(to_string(*h.resolved()) == "A*c_r(A,B;C,D)*A^-1");

	const CheckRecord p6 = run("p6_conjugation", Field::quaternion(), 200);
	CHECK(p6.passed);
	CHECK(p6.note.find("statement form") != std::string::npos);
}

TEST_CASE("suites skip checks that do not apply") {
	CHECK_FALSE(check_applies("p8_commutative_symmetry", Field::quaternion()));
	CHECK(check_applies("p9_noncommutative_witness", Field::quaternion()));
	CHECK_FALSE(check_applies("p9_noncommutative_witness", Field::galois(7)));

	const VerificationReport r = run_suite(Field::galois(7), 1, 50);
	CHECK(r.checks.size() == check_names().size());
	const CheckRecord* p9 = r.find("p9_noncommutative_witness");
	REQUIRE(p9 != nullptr);
	CHECK(p9->skipped);
	CHECK(r.find("p8_commutative_symmetry")->exhaustive);
	CHECK(r.find("nonexistent") == nullptr);
}

TEST_CASE("reports are deterministic and follow the schema") {
	const VerificationReport a = run_suite(Field::galois(101), 9, 100);
	const VerificationReport b = run_suite(Field::galois(101), 9, 100);
	CHECK(without_timestamp(a) == without_timestamp(b));
	CHECK(to_text(a) == to_text(b));
	CHECK_FALSE(without_timestamp(a) == without_timestamp(run_suite(Field::galois(101), 10, 100)));

	const nlohmann::json j = to_json(a);
	CHECK(j.at("field") == "gf:101");
	CHECK(j.at("seed") == 9);
	CHECK(j.at("samples") == 100);
	CHECK(j.at("timestamp").is_string());
	CHECK(j.at("conjugation_form") == "A*c_r(A,B;C,D)*A^-1");
	REQUIRE(j.at("checks").is_array());
	for (const auto& c : j.at("checks")) {
		for (const char* key : {"name", "samples_run", "skipped", "passed", "witnesses"})
			CHECK(c.contains(key));
		for (const auto& w : c.at("witnesses")) {
			CHECK(w.at("inputs").is_array());
			CHECK(w.at("lhs").is_string());
			CHECK(w.at("rhs").is_string());
		}
	}
}
