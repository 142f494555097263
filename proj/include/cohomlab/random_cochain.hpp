#pragma once

#include <cstdint>

#include "cohomlab/averaging.hpp"
#include "cohomlab/cochain.hpp"
#include "cohomlab/rng.hpp"

namespace cohomlab {

struct RandomCochainOptions {
  std::size_t terms = 3;   ///< point masses (or dipoles for l1_0) per value
  double spread = 1.0;     ///< masses sit within `spread` of some tuple coordinate
  bool controlled = true;  ///< false: masses anywhere in X (support not controlled)
  bool dyadic = false;     ///< coefficients in (1/64)Z so sums are exact in floating point
};

/// A seeded pseudo-random cochain; its value at (x, y) is a hash of the
/// seed and the tuples, so evaluation is pure and reproducible.
Cochain random_cochain(SpaceRef space, int p, int q, Module module, std::uint64_t seed,
                       const RandomCochainOptions& options = {});

/// `terms` point masses inside `support` (all of X when empty); l1_0 draws
/// dipoles so the result sums to zero.
SupportedVector random_vector(Rng& rng, std::size_t n, Module module, std::size_t terms,
                              bool dyadic = false, std::span<const Point> support = {});

/// Random positive weights on a random nonempty subset of B_S(x), normalized.
ReiterFamily random_probability_family(const SpaceRef& space, double radius, std::uint64_t seed);

/// F(x) with random pair masses in B_R(x) x B_R(x).
PairFamily random_pair_family(const SpaceRef& space, double radius, std::size_t terms,
                              std::uint64_t seed);

}  // namespace cohomlab
