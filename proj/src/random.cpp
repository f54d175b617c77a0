#include "crossratio/random.hpp"

namespace crossratio {

namespace {

Rational random_rational(SplitMix64& rng) {
	Rational q(rng.between(-kRandomBound, kRandomBound), rng.between(1, kRandomBound));
	q.canonicalize();
	return q;
}

} // namespace

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words) {
	std::uint64_t h = 0x6a09e667f3bcc908ull;
	for (auto w : words)
		h = SplitMix64(h ^ w).next();
	return h;
}

std::uint64_t hash_name(std::string_view name) {
	std::uint64_t h = 0xcbf29ce484222325ull;
	for (unsigned char ch : name) {
		h ^= ch;
		h *= 0x100000001b3ull;
	}
	return h;
}

FieldElement random_element(const Field& field, SplitMix64& rng) {
	switch (field.kind()) {
	case FieldKind::rational:
		return FieldElement(field, random_rational(rng));
	case FieldKind::galois:
		return FieldElement(field, GaloisResidue{static_cast<std::uint32_t>(rng.below(field.modulus()))});
	case FieldKind::quaternion:
		return FieldElement(field,
		                    Quaternion{random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)});
	}
	throw Error("unreachable field kind");
}

FieldElement random_nonzero(const Field& field, SplitMix64& rng) {
	for (;;) {
		auto x = random_element(field, rng);
		if (!x.is_zero())
			return x;
	}
}

FieldElement random_central(const Field& field, SplitMix64& rng) {
	if (field.kind() == FieldKind::quaternion)
		return field.from_rational(random_rational(rng));
	return random_element(field, rng);
}

} // namespace crossratio
