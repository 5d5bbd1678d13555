#pragma once

#include <cstdint>
#include <random>

#include "ordlab/ordset.hpp"

namespace ordlab {

/// Seeded source for generated corpora. Uses plain modular reduction so the
/// output is the same on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// An ordinal below cap whose CNF coefficients are at most max_coeff.
Ordinal random_ordinal(Rng& rng, const Ordinal& cap, unsigned max_coeff = 6);

/// A union/intersection/difference of a few random atoms (singletons,
/// level and valuation ranges, scaled atoms) inside [0, cap).
OrdSet random_set(Rng& rng, const Ordinal& cap, unsigned atoms = 3);

/// A subset of beta that diamond_encode accepts: finite points, whole
/// intervals and successor runs with finitely many limits.
OrdSet random_diamond_set(Rng& rng, const Ordinal& beta);

}  // namespace ordlab
