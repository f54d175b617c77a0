#pragma once

// Deterministic, platform-independent randomness for the verifier and the
// Desargues generator. Every sample gets its own stream derived from
// (seed, stream id, sample index, attempt), so results never depend on the
// order in which samples are evaluated.

#include <cstdint>
#include <initializer_list>
#include <string_view>

#include "crossratio/skewfield.hpp"

namespace crossratio {

class SplitMix64 {
public:
	explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

	std::uint64_t next() {
		std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
		return z ^ (z >> 31);
	}

	/// Uniform-ish in [0, n); n > 0. Modulo bias is irrelevant at these sizes.
	std::uint64_t below(std::uint64_t n) { return next() % n; }

	/// Uniform-ish in [lo, hi].
	long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
	std::uint64_t state_;
};

/// Counter-based seed derivation: folds each word through SplitMix64.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words);

/// FNV-1a, used to turn names into stream ids.
std::uint64_t hash_name(std::string_view name);

/// Coefficient bound for random rationals: numerator in [-1000, 1000],
/// denominator in [1, 1000].
inline constexpr long kRandomBound = 1000;

FieldElement random_element(const Field& field, SplitMix64& rng);
FieldElement random_nonzero(const Field& field, SplitMix64& rng);
/// A random element of the center (a rational scalar in H(Q)).
FieldElement random_central(const Field& field, SplitMix64& rng);

} // namespace crossratio
