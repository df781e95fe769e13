#pragma once

#include <vector>

#include "jbt/moebius.hpp"
#include "jbt/spectral.hpp"

namespace jbt {
inline namespace boundary {

// One random maximal tripotent: U J V* with Haar unitaries and J the
// rectangular identity for matrix factors, a phase vector for commutative
// ones, concatenated maximal tripotents for sums.
Element gamma_point(const Factor& f, Rng& rng);

// One random unitary tripotent; throws EmptyGamma1Error when the factor
// admits none (rectangular matrix factors).
Element gamma1_point(const Factor& f, Rng& rng);

// n samples, reproducible in (n, seed); every sample is re-certified by
// classify_tripotent before being returned.
std::vector<Element> gamma_sample(const Factor& f, int n, std::uint64_t seed);
std::vector<Element> gamma1_sample(const Factor& f, int n, std::uint64_t seed);

} // namespace boundary
} // namespace jbt
