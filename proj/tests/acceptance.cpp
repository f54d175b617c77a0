// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.
// Sub-lines underneath show the evidence for each verdict. The process exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "crossratio/cli.hpp"
#include "crossratio/errors.hpp"
#include "crossratio/literal.hpp"
#include "crossratio/random.hpp"
#include "crossratio/ratio.hpp"
#include "crossratio/verify.hpp"

using namespace crossratio;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::uint64_t kSamples = 1000;

const std::vector<Field>& main_fields() {
	static const std::vector<Field> fields{Field::rational(), Field::galois(101), Field::quaternion()};
	return fields;
}

/// Collects evidence lines and an overall verdict for one criterion.
class Criterion {
public:
	void expect(bool ok, const std::string& line) {
		ok_ = ok_ && ok;
		lines_.push_back(std::string(ok ? "ok    " : "FAIL  ") + line);
	}
	void info(const std::string& line) { lines_.push_back("      " + line); }

	/// A check passes when it ran `samples` times (or enumerated) with no failure.
	/// A witness search stops early, so it only has to stay within `samples`.
	void record(const CheckRecord& r, const Field& f, std::uint64_t samples, bool search = false) {
		const bool counted = r.exhaustive || (search ? r.samples_run <= samples : r.samples_run == samples);
		std::ostringstream line;
		line << f.name() << "  " << r.name << "  " << (r.samples_run - r.failures) << "/" << r.samples_run
		     << (r.exhaustive ? " exhaustive" : "");
		if (!r.note.empty())
			line << "  (" << r.note << ")";
		if (!r.passed && !r.witnesses.empty()) {
			const Witness& w = r.witnesses.front();
			line << "  witness:";
			for (const auto& x : w.inputs)
				line << " " << x;
			line << "  lhs=" << w.lhs << " rhs=" << w.rhs;
		}
		expect(r.passed && counted, line.str());
	}

	void run(const char* name, const Field& f, std::uint64_t samples = kSamples,
	         SamplingMode mode = SamplingMode::automatic) {
		record(run_check({name, f, samples, kSeed, mode}), f, samples);
	}
	void search(const char* name, const Field& f, std::uint64_t samples) {
		record(run_check({name, f, samples, kSeed}), f, samples, true);
	}

	bool ok() const { return ok_; }
	const std::vector<std::string>& lines() const { return lines_; }

private:
	bool ok_ = true;
	std::vector<std::string> lines_;
};

// Criterion 1, computed directly from the ratio module rather than through the
// verifier: each single coincidence among three distinct values x, y, z.
void degenerate_table(Criterion& c) {
	const char* expected[] = {"1", "0", "inf", "inf", "0", "1"};
	const char* cases[] = {"A=B", "A=C", "A=D", "B=C", "B=D", "C=D"};
	for (const Field& f : main_fields()) {
		SplitMix64 rng(derive_seed({kSeed, hash_name("degenerate"), hash_name(f.name())}));
		int matched[6] = {};
		for (int completion = 0; completion < 20;) {
			const FieldElement x = random_element(f, rng), y = random_element(f, rng), z = random_element(f, rng);
			if (x == y || x == z || y == z)
				continue;
			++completion;
			const PointQuad quads[] = {{x, x, y, z}, {x, y, x, z}, {x, y, z, x},
			                           {y, x, x, z}, {y, x, z, x}, {y, z, x, x}};
			for (int k = 0; k < 6; ++k)
				matched[k] += format(cross_ratio(quads[k])) == expected[k] ? 1 : 0;
		}
		for (int k = 0; k < 6; ++k)
			c.expect(matched[k] == 20, f.name() + "  " + cases[k] + " -> " + expected[k] + "  " +
			                               std::to_string(matched[k]) + "/20");
	}
}

void identity_suites(Criterion& c) {
	const char* names[] = {"p1_inverse_law",    "p2_negation_law",   "p3_alternative_formula", "p4_complement",
	                       "p5_permutations",   "p11_factorization", "p12_infinity_reductions"};
	for (const Field& f : main_fields())
		for (const char* name : names)
			c.run(name, f);
	for (const char* name : names)
		c.run(name, Field::galois(5), kSamples, SamplingMode::exhaustive);
	c.info("the negation law holds in corrected form:");
	for (const Field& f : main_fields()) {
		const CheckRecord r = run_check({"p2_negation_invariance", f, kSamples, kSeed});
		c.info("  " + f.name() + "  p2_negation_invariance  " + (r.passed ? "passes " : "FAILS ") +
		       std::to_string(r.samples_run - r.failures) + "/" + std::to_string(r.samples_run));
	}
}

void conjugation(Criterion& c) {
	const ConjugationResolution res = resolve_p6_form(kSeed, kSamples);
	const bool one_form = (res.statement_matches == kSamples) != (res.proof_matches == kSamples);
	c.expect(one_form && res.resolved() == kPinnedConjugationForm,
	         "quaternion  statement form " + std::to_string(res.statement_matches) + "/" +
	             std::to_string(res.samples) + ", proof form " + std::to_string(res.proof_matches) + "/" +
	             std::to_string(res.samples) + " -> " + std::string(to_string(kPinnedConjugationForm)));
	c.run("p6_conjugation", Field::quaternion());
	c.run("p7_central_collapse", Field::quaternion());
	const nlohmann::json report = to_json(VerificationReport{});
	c.expect(report.value("conjugation_form", "") == to_string(kPinnedConjugationForm),
	         "report records conjugation_form = " + report.value("conjugation_form", std::string("(missing)")));
}

void commutativity(Criterion& c) {
	c.run("p8_commutative_symmetry", Field::galois(5), kSamples, SamplingMode::exhaustive);
	c.run("p8_commutative_symmetry", Field::rational());
	c.search("p9_noncommutative_witness", Field::quaternion(), 100);
	c.run("p10_center_conditions", Field::quaternion());
	c.run("p10_center_conditions", Field::rational());
}

void ratio_laws(Criterion& c) {
	for (const Field& f : main_fields())
		for (const char* name : {"p13_ratio2_laws", "p13_product_denominator_as_stated", "p13_symmetry_as_stated",
		                         "p14_ratio3_laws", "p14_pappus_inverse_law", "p15_ratio_bijectivity"}) {
			if (!check_applies(name, f)) {
				c.info(f.name() + "  " + name + "  skipped (commutative fields only)");
				continue;
			}
			c.run(name, f);
		}
	c.info("the two-point laws hold in corrected form:");
	for (const Field& f : main_fields())
		for (const char* name : {"p13_product_denominator", "p13_symmetry"}) {
			const CheckRecord r = run_check({name, f, kSamples, kSeed});
			c.info("  " + f.name() + "  " + name + "  " + (r.passed ? "passes " : "FAILS ") +
			       std::to_string(r.samples_run - r.failures) + "/" + std::to_string(r.samples_run));
		}
}

void uniqueness(Criterion& c) {
	for (const Field& f : main_fields())
		c.run("p16_uniqueness", f);
}

void plane_agreement(Criterion& c) {
	for (const Field& f : main_fields())
		for (const char* name : {"plane_add_agreement", "plane_mul_agreement", "plane_aux_independence"})
			c.run(name, f, 500);
}

void desargues(Criterion& c) {
	for (const Field& f : main_fields())
		for (const char* name : {"desargues_parallel", "desargues_concurrent"})
			c.run(name, f, 200);
	std::ostringstream out, err;
	const int code = run_cli({"desargues", "--field", "rational", "--count", "20", "--flip-C'"}, out, err);
	c.expect(code == kExitCheckFailed && out.str().starts_with("0/20 pass"),
	         "tampered configurations rejected: " + out.str().substr(0, out.str().find('\n')) + ", exit " +
	             std::to_string(code));
}

void axioms(Criterion& c) {
	for (const Field& f : main_fields())
		for (const char* name :
		     {"field_axioms", "no_zero_divisors", "inverse_laws", "norm_multiplicative", "difference_of_inverses"})
			c.run(name, f);
}

void determinism(Criterion& c) {
	for (const Field& f : main_fields()) {
		const std::vector<std::string> args{"verify",    "--field",  f.name(), "--seed", std::to_string(kSeed),
		                                    "--samples", "1000",     "--format", "json"};
		std::ostringstream out1, out2, err;
		run_cli(args, out1, err);
		run_cli(args, out2, err);
		nlohmann::json a = nlohmann::json::parse(out1.str()), b = nlohmann::json::parse(out2.str());
		const bool stamped = a.contains("timestamp") && b.contains("timestamp");
		a.erase("timestamp");
		b.erase("timestamp");
		c.expect(stamped && a == b && !a.at("checks").empty(),
		         f.name() + "  two verify runs identical modulo timestamp (" + std::to_string(a.dump().size()) +
		             " bytes)");
	}
}

} // namespace

int main() {
	struct Entry {
		int number;
		const char* title;
		std::function<void(Criterion&)> body;
	};
	const std::vector<Entry> entries{
		{1, "degenerate coincidence table in every field", degenerate_table},
		{2, "identity suites P1-P5, P11, P12", identity_suites},
		{3, "P6/P7 conjugation form and central collapse", conjugation},
		{4, "P8 symmetry, P9 witness, P10 centre conditions", commutativity},
		{5, "ratio laws P13-P15", ratio_laws},
		{6, "fourth point round trip P16", uniqueness},
		{7, "ruler constructions match field arithmetic", plane_agreement},
		{8, "Desargues configurations and tamper control", desargues},
		{9, "skew-field axioms and difference of inverses", axioms},
		{10, "verify reports are deterministic", determinism},
	};

	int failed = 0;
	for (const Entry& e : entries) {
		const auto start = std::chrono::steady_clock::now();
		Criterion c;
		try {
			e.body(c);
		} catch (const std::exception& ex) {
			c.expect(false, std::string("unexpected error: ") + ex.what());
		}
		const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		char head[160];
		std::snprintf(head, sizeof head, "criterion %2d  %s  %s  (%.1fs)", e.number, c.ok() ? "PASS" : "FAIL",
		              e.title, seconds);
		std::cout << head << "\n";
		for (const auto& line : c.lines())
			std::cout << "    " << line << "\n";
		std::cout.flush();
		failed += c.ok() ? 0 : 1;
	}
	std::cout << "\n" << (entries.size() - failed) << "/" << entries.size() << " criteria pass\n";
	return failed == 0 ? 0 : 1;
}
