#pragma once

#include <optional>
#include <vector>

#include "ordlab/ordinal.hpp"

namespace ordlab {

/// Desk universe: ordinals below omega^deg, a finite index range standing in
/// for cf(mu), and strictly increasing order-type thresholds mu_i.
struct UniverseParams {
  unsigned deg = 4;
  Ordinal delta = Ordinal::omega_pow(4);
  std::vector<Ordinal> thresholds;
  unsigned index_bound = 8;
  std::vector<Ordinal> probe;

  /// deg 4, index bound 8, the default thresholds and probe.
  static UniverseParams defaults();

  /// Throws DomainError when thresholds or probe break the invariants.
  void check() const;

  /// Least i with otp < thresholds[i]; nullopt on overflow.
  std::optional<unsigned> index_for(const Ordinal& otp) const;
};

/// Limits w^3*a + w^2*b + w*c (a, b, c < 4, not all zero) and their +w.
std::vector<Ordinal> default_probe();

std::vector<Ordinal> default_thresholds(unsigned index_bound);

}  // namespace ordlab
