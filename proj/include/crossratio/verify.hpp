#pragma once

/**
 * Randomized exact verification of the cross-ratio identities, the ratio laws,
 * the skew-field axioms and the plane constructions.
 *
 * Each check draws a fixed number of field elements per sample from a stream
 * seeded by (seed, check name, sample index, attempt). Draws that violate the
 * check's precondition are redrawn and counted, never evaluated. Over GF(p)
 * with p <= 7 the algebraic checks enumerate every tuple instead of sampling.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "crossratio/skewfield.hpp"

namespace crossratio {

enum class SamplingMode { automatic, sampled, exhaustive };

struct CheckSpec {
	std::string name;
	Field field = Field::rational();
	std::uint64_t samples = 1000;
	std::uint64_t seed = 0;
	SamplingMode mode = SamplingMode::automatic;
};

struct Witness {
	std::vector<std::string> inputs;
	std::string lhs, rhs;
};

struct CheckRecord {
	std::string name;
	std::uint64_t samples_run = 0;
	bool skipped = false;
	bool passed = false;
	bool exhaustive = false;
	std::uint64_t failures = 0;
	std::uint64_t redraws = 0;   // draws rejected by the precondition
	std::vector<Witness> witnesses; // at most kMaxWitnesses
	std::string note;
};

inline constexpr std::size_t kMaxWitnesses = 10;

struct VerificationReport {
	Field field = Field::rational();
	std::uint64_t seed = 0;
	std::uint64_t samples = 0;
	std::string timestamp;
	std::vector<CheckRecord> checks;

	/// True iff every non-skipped check passed.
	bool all_passed() const;
	const CheckRecord* find(std::string_view name) const;
};

/// Names of every check, in suite order.
std::vector<std::string> check_names();

/// Whether run_suite runs `name` over `field` (commutative-only and
/// noncommutative-only checks are skipped elsewhere).
bool check_applies(std::string_view name, const Field& field);

/// Throws UnknownCheck for an unknown name.
CheckRecord run_check(const CheckSpec& spec);

VerificationReport run_suite(const Field& field, std::uint64_t seed, std::uint64_t samples);

/// Which conjugate form the inverse-points identity takes:
///   c_r(A⁻¹,B⁻¹;C⁻¹,D⁻¹) = A·X·A⁻¹ with X = c_r(A,B;C,D) (statement form)
///   or X = c_r(A,C;B,D) (proof form).
enum class ConjugationForm { statement, proof };

struct ConjugationResolution {
	std::uint64_t samples = 0;
	std::uint64_t statement_matches = 0;
	std::uint64_t proof_matches = 0;
	/// The form matching every sample, when exactly one does.
	std::optional<ConjugationForm> resolved() const;
};

/// The form the verifier asserts; fixed after resolve_p6_form confirmed it.
inline constexpr ConjugationForm kPinnedConjugationForm = ConjugationForm::statement;

std::string_view to_string(ConjugationForm form);

ConjugationResolution resolve_p6_form(const Field& field, std::uint64_t seed, std::uint64_t samples);
inline ConjugationResolution resolve_p6_form(std::uint64_t seed, std::uint64_t samples) {
	return resolve_p6_form(Field::quaternion(), seed, samples);
}

nlohmann::json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

} // namespace crossratio
