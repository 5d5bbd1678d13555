#include "ordlab/universe.hpp"

#include <algorithm>

namespace ordlab {

std::vector<Ordinal> default_probe() {
  std::vector<Ordinal> out;
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b)
      for (std::uint64_t c = 0; c < 5; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        // c == 4 only arises as the +w of a c == 3 point.
        Ordinal x = ord_add(ord_add(Ordinal::omega_pow(3, a), Ordinal::omega_pow(2, b)), Ordinal::omega_pow(1, c));
        out.push_back(x);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ordinal> default_thresholds(unsigned index_bound) {
  // Order types of the generated clubs stay below w^3*4; the top entries
  // leave room for the unions taken by the transform.
  std::vector<Ordinal> t;
  for (unsigned i = 0; i < index_bound; ++i) {
    std::uint64_t k = i + 1;
    if (i + 4 < index_bound)
      t.push_back(Ordinal::omega_pow(2, k));
    else
      t.push_back(Ordinal::omega_pow(3, k + 4 - index_bound));
  }
  return t;
}

UniverseParams UniverseParams::defaults() {
  UniverseParams p;
  p.thresholds = default_thresholds(p.index_bound);
  p.probe = default_probe();
  return p;
}

void UniverseParams::check() const {
  if (delta != Ordinal::omega_pow(deg)) throw DomainError("delta must be w^deg");
  if (index_bound == 0) throw DomainError("index bound must be positive");
  if (thresholds.size() != index_bound) throw DomainError("need one threshold per index");
  for (std::size_t k = 0; k < thresholds.size(); ++k) {
    if (thresholds[k] >= delta) throw DomainError("threshold not below delta");
    if (k > 0 && thresholds[k - 1] >= thresholds[k]) throw DomainError("thresholds must strictly increase");
  }
  for (const Ordinal& x : probe)
    if (x >= delta) throw DomainError("probe point " + x.to_string() + " not below delta");
}

std::optional<unsigned> UniverseParams::index_for(const Ordinal& otp) const {
  for (unsigned i = 0; i < thresholds.size(); ++i)
    if (otp < thresholds[i]) return i;
  return std::nullopt;
}

}  // namespace ordlab
