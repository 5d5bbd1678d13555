#include "ordlab/random.hpp"

#include <algorithm>

namespace ordlab {

Ordinal random_ordinal(Rng& rng, const Ordinal& cap, unsigned max_coeff) {
  if (cap.is_zero()) throw DomainError("random_ordinal needs a positive cap");
  const unsigned top = cap.degree();
  for (;;) {
    std::vector<Term> terms;
    for (unsigned e = top + 1; e-- > 0;) {
      // Sparse terms keep the ordinals varied in valuation.
      if (rng.below(3) == 0) continue;
      std::uint64_t c = rng.below(max_coeff + 1);
      if (c > 0) terms.push_back({e, c});
    }
    Ordinal x(terms);
    if (x < cap) return x;
  }
}

namespace {

std::pair<Ordinal, Ordinal> random_bounds(Rng& rng, const Ordinal& cap) {
  Ordinal a = random_ordinal(rng, cap);
  Ordinal b = random_ordinal(rng, cap);
  if (b < a) std::swap(a, b);
  if (rng.below(4) == 0) b = cap;
  return {a, b};
}

OrdSet random_atom(Rng& rng, const Ordinal& cap) {
  const unsigned top = cap.degree();
  switch (rng.below(5)) {
    case 0: {
      std::vector<Ordinal> pts;
      for (std::uint64_t k = rng.below(4) + 1; k > 0; --k) pts.push_back(random_ordinal(rng, cap));
      return OrdSet::of(pts);
    }
    case 1: {
      auto [a, b] = random_bounds(rng, cap);
      return OrdSet::level_range(static_cast<unsigned>(rng.below(top + 1)), a, b);
    }
    case 2: {
      auto [a, b] = random_bounds(rng, cap);
      return OrdSet::valuation_range(static_cast<unsigned>(rng.below(top + 1)), a, b);
    }
    case 3: {
      auto [a, b] = random_bounds(rng, cap);
      return OrdSet::range(a, b);
    }
    default: {
      // prefix + w^e * x for x in [lo, hi), cut back to cap.
      unsigned e = static_cast<unsigned>(rng.below(top + 1));
      Ordinal prefix = random_ordinal(rng, cap).truncate_below(e + 1);
      std::uint64_t lo = rng.below(3) + 1;
      Ordinal hi = rng.coin() ? Ordinal(lo + 1 + rng.below(6)) : Ordinal::omega_pow(1 + static_cast<unsigned>(rng.below(2)));
      Shape shape = static_cast<Shape>(rng.below(3));
      return OrdSet::scaled(prefix, e, Ordinal(lo), hi, shape).restrict(cap);
    }
  }
}

}  // namespace

OrdSet random_set(Rng& rng, const Ordinal& cap, unsigned atoms) {
  OrdSet s = random_atom(rng, cap);
  for (unsigned k = 1; k < atoms; ++k) {
    OrdSet t = random_atom(rng, cap);
    switch (rng.below(4)) {
      case 0:
      case 1:
        s = s.unite(t);
        break;
      case 2:
        s = s.intersect(t).empty() ? s.unite(t) : s.intersect(t);
        break;
      default:
        s = s.minus(t).empty() ? s.unite(t) : s.minus(t);
        break;
    }
  }
  return s.restrict(cap);
}

OrdSet random_diamond_set(Rng& rng, const Ordinal& beta) {
  OrdSet out;
  for (std::uint64_t k = rng.below(4) + 1; k > 0; --k) {
    Ordinal a = random_ordinal(rng, beta);
    Ordinal b = rng.coin() ? beta : random_ordinal(rng, beta);
    if (b < a) std::swap(a, b);
    switch (rng.below(3)) {
      case 0:
        out = out.unite(OrdSet::singleton(a));
        break;
      case 1:
        out = out.unite(OrdSet::range(a, b));
        break;
      default: {
        // Successors of [a, b) with at most a few limits inside.
        Ordinal stop = b;
        if (OrdSet::valuation_range(1, a, b).otp() >= literals::omega)
          stop = std::min(b, ord_add(a.truncate_below(1), ord_mul_nat(literals::omega, rng.below(3) + 1)));
        out = out.unite(OrdSet::level_range(0, a, stop));
        break;
      }
    }
  }
  return out;
}

}  // namespace ordlab
