#include "ordlab/posets.hpp"

#include <algorithm>

namespace ordlab {

namespace {

std::string str(const Ordinal& x) { return x.to_string(); }

const PatchedRule* as_patched(const IndexedSeq& seq) { return dynamic_cast<const PatchedRule*>(&seq.rule()); }

bool malformed(const std::optional<Ordinal>& gamma, const UniverseParams& p, Report& r) {
  if (!gamma) {
    r.fail("malformed", "gamma", "defined", "missing");
    return true;
  }
  if (gamma->is_zero() || *gamma >= p.delta) {
    r.fail("malformed", "gamma", "0 < gamma < " + str(p.delta), str(*gamma));
    return true;
  }
  return false;
}

void require_valid(const Report& r, const char* what) {
  if (!r.ok()) throw DomainError(std::string(what) + " is not a valid condition: " + r.violations.front().check);
}

// Every limit point <= gamma either condition pins down.
std::vector<Ordinal> shared_points(const IndexedSeq& a, const IndexedSeq& b, const Ordinal& gamma,
                                   const std::vector<Ordinal>& probe) {
  std::vector<Ordinal> pts = condition_points(a, gamma, probe);
  std::vector<Ordinal> more = condition_points(b, gamma, probe);
  pts.insert(pts.end(), more.begin(), more.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

PatchedRule::PatchedRule(IndexedSeq base, std::map<Ordinal, Patch> patches)
    : base_(std::move(base)), patches_(std::move(patches)) {
  const unsigned bound = base_.params().index_bound;
  for (const auto& [alpha, p] : patches_) {
    if (!alpha.is_limit()) throw DomainError("patch at non-limit " + str(alpha));
    if (p.index >= bound || p.clubs.size() != bound - p.index)
      throw DomainError("patch at " + str(alpha) + " must list one club per admissible index");
  }
}

unsigned PatchedRule::index_of(const Ordinal& alpha) const {
  auto it = patches_.find(alpha);
  return it == patches_.end() ? base_.i_of(alpha) : it->second.index;
}

OrdSet PatchedRule::club_at(const Ordinal& alpha, unsigned i) const {
  auto it = patches_.find(alpha);
  if (it == patches_.end()) return base_.club(alpha, i);
  if (i < it->second.index || i - it->second.index >= it->second.clubs.size())
    throw DomainError("index " + std::to_string(i) + " not admissible at " + str(alpha));
  return it->second.clubs[i - it->second.index];
}

std::vector<Ordinal> condition_points(const IndexedSeq& seq, const Ordinal& gamma, const std::vector<Ordinal>& probe) {
  std::vector<Ordinal> pts;
  for (const Ordinal& x : probe)
    if (x <= gamma) pts.push_back(x);
  pts.push_back(gamma);
  // Patched rules carry every earlier patch, so one level suffices.
  if (const PatchedRule* p = as_patched(seq))
    for (const auto& [alpha, _] : p->patches())
      if (alpha <= gamma) pts.push_back(alpha);
  return probe_limits(seq.params(), pts);
}

Report validate_ind(const IndCondition& s, const std::vector<Ordinal>& probe) {
  Report r;
  if (malformed(s.gamma, s.seq.params(), r)) return r;
  return validate_indexed(s.seq, condition_points(s.seq, *s.gamma, probe));
}

Report validate_plain_cond(const PlainCondition& s, const std::vector<Ordinal>& probe) {
  Report r;
  if (malformed(s.gamma, s.seq.params(), r)) return r;
  return validate_plain(PlainSeq::single(s.seq), condition_points(s.seq, *s.gamma, probe));
}

bool extends(const IndCondition& s1, const IndCondition& s0, const std::vector<Ordinal>& probe) {
  require_valid(validate_ind(s1, probe), "s1");
  require_valid(validate_ind(s0, probe), "s0");
  if (*s1.gamma < *s0.gamma) return false;
  const unsigned bound = s0.seq.params().index_bound;
  if (s1.seq.params().index_bound != bound) return false;
  for (const Ordinal& alpha : shared_points(s1.seq, s0.seq, *s0.gamma, probe)) {
    unsigned i = s0.seq.i_of(alpha);
    if (s1.seq.i_of(alpha) != i) return false;
    for (; i < bound; ++i)
      if (s1.seq.club(alpha, i) != s0.seq.club(alpha, i)) return false;
  }
  return true;
}

bool extends(const PlainCondition& s1, const PlainCondition& s0, const std::vector<Ordinal>& probe) {
  require_valid(validate_plain_cond(s1, probe), "s1");
  require_valid(validate_plain_cond(s0, probe), "s0");
  if (*s1.gamma < *s0.gamma) return false;
  for (const Ordinal& alpha : shared_points(s1.seq, s0.seq, *s0.gamma, probe))
    if (s1.club(alpha) != s0.club(alpha)) return false;
  return true;
}

IndCondition glue_extension(const IndCondition& s, const Ordinal& gamma_star, const GlueAnchors& anchors) {
  if (!s.gamma) throw DomainError("glue_extension needs a condition with a top");
  const UniverseParams& p = s.seq.params();
  const unsigned bound = p.index_bound;
  const unsigned m = anchors.merge_index;
  const Ordinal& top = *s.gamma;
  const Ordinal& g0 = anchors.earlier_top;
  if (gamma_star != ord_add(top, literals::omega)) throw DomainError("gamma* must be the top plus w");
  if (gamma_star >= p.delta) throw DomainError("gamma* must lie below delta");
  if (!top.is_limit()) throw DomainError("the condition's top must be a limit");
  if (m + 1 >= bound) throw DomainError("merge index must leave an index above it");
  if (m < s.seq.i_of(top)) throw DomainError("merge index below i(top)");
  if (!g0.is_limit() || g0 >= top) throw DomainError("earlier top must be a limit below the top");
  if (!s.seq.club(top, m).acc().contains(g0))
    throw DomainError("earlier top " + str(g0) + " is not an accumulation point of C_(top, m)");
  OrdSet extras = OrdSet::of(anchors.extra_points);
  for (const Ordinal& x : anchors.extra_points) {
    if (x <= g0 || x >= top) throw DomainError("extra point " + str(x) + " outside (earlier top, top)");
    if (!s.seq.club(top, m + 1).contains(x))
      throw DomainError("extra point " + str(x) + " missing from C_(top, m+1); the low clubs would not nest");
  }

  const OrdSet tail = OrdSet::range(top, gamma_star);
  PatchedRule::Patch patch;
  patch.index = 0;
  for (unsigned i = 0; i < bound; ++i) {
    if (i > m) {
      patch.clubs.push_back(s.seq.club(top, i).unite(tail));
      continue;
    }
    OrdSet c = OrdSet::singleton(g0).unite(extras).unite(tail);
    if (s.seq.i_of(g0) <= i) c = c.unite(s.seq.club(g0, i));
    patch.clubs.push_back(std::move(c));
  }
  std::map<Ordinal, PatchedRule::Patch> patches;
  if (const PatchedRule* prev = as_patched(s.seq)) patches = prev->patches();
  patches[gamma_star] = std::move(patch);
  return IndCondition{IndexedSeq(p, std::make_shared<PatchedRule>(s.seq, std::move(patches))), gamma_star};
}

PlainCondition seal_chain(const std::vector<PlainCondition>& chain, const Ordinal& gamma, const OrdSet& ladder_points,
                          const std::vector<Ordinal>& probe) {
  if (chain.empty()) throw DomainError("seal_chain needs a nonempty chain");
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    if (!extends(chain[k + 1], chain[k], probe))
      throw DomainError("chain element " + std::to_string(k + 1) + " does not extend element " + std::to_string(k));
  const PlainCondition& last = chain.back();
  const UniverseParams& p = last.seq.params();
  if (!gamma.is_limit() || gamma > *chain.front().gamma)
    throw DomainError("gamma must be a limit no larger than the first condition's top");
  OrdSet etas = ladder_points.above(succ(gamma));
  if (etas.empty() || etas.otp() != literals::omega) throw DomainError("ladder points above gamma must have order type w");
  const Ordinal delta = etas.sup();
  if (delta >= p.delta) throw DomainError("delta must lie below the universe bound");
  if (delta <= *last.gamma) throw DomainError("delta must exceed the last condition's top");

  OrdSet top_club = last.club(gamma).unite(OrdSet::singleton(gamma)).unite(etas);
  const unsigned bound = p.index_bound;
  PatchedRule::Patch patch{0, std::vector<OrdSet>(bound, top_club)};
  std::map<Ordinal, PatchedRule::Patch> patches;
  if (const PatchedRule* prev = as_patched(last.seq)) patches = prev->patches();
  patches[delta] = std::move(patch);
  return PlainCondition{IndexedSeq(p, std::make_shared<PatchedRule>(last.seq, std::move(patches))), delta};
}

OrdSet diamond_encode(const Ordinal& beta, const OrdSet& b) {
  if (b.restrict(beta) != b) throw DomainError("diamond_encode: B must lie below beta");
  std::vector<Ordinal> cuts{Ordinal(0), beta};
  for (unsigned e = 0; e < b.level_count(); ++e)
    for (const Interval& iv : b.level(e)) {
      cuts.push_back(iv.lo);
      cuts.push_back(iv.hi);
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  auto image = [&](const Ordinal& a) { return succ(ord_add(beta, a)); };

  OrdSet out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Ordinal& lo = cuts[k];
    const Ordinal& hi = cuts[k + 1];
    if (lo >= beta) break;
    OrdSet piece = b.restrict(hi).above(lo);
    if (piece.empty()) continue;
    if (piece.otp().is_finite()) {
      for (const Ordinal& a : piece.first_elements(piece.otp().finite_part()))
        out = out.unite(OrdSet::singleton(image(a)));
      continue;
    }
    OrdSet run = OrdSet::level_range(0, image(lo), image(hi));
    if (piece == OrdSet::range(lo, hi)) {
      out = out.unite(run);
      continue;
    }
    OrdSet limits = OrdSet::valuation_range(1, lo, hi);
    if (piece == OrdSet::level_range(0, lo, hi) && limits.otp().is_finite()) {
      std::vector<Ordinal> holes;
      for (const Ordinal& l : limits.first_elements(limits.otp().finite_part())) holes.push_back(image(l));
      if (lo.is_zero()) holes.push_back(image(lo));
      out = out.unite(run.minus(OrdSet::of(holes)));
      continue;
    }
    throw DomainError("diamond_encode: " + piece.to_literal() + " has no finite encoding");
  }
  return out.closure();
}

OrdSet diamond_decode(const OrdSet& club, const Ordinal& beta) {
  const Ordinal twice = ord_mul_nat(beta, 2);
  OrdSet succs = club.intersect(OrdSet::level_range(0, succ(beta), succ(twice)));
  OrdSet out;
  for (const Interval& iv : succs.level(0)) {
    // y = beta + a + 1 ranges over the successors of [lo, hi), so a ranges
    // over [lo - 1, top) shifted down by beta.
    Ordinal first = iv.lo.predecessor();
    Ordinal stop = iv.hi.is_successor() ? iv.hi.predecessor() : iv.hi;
    out = out.unite(OrdSet::range(ord_sub(beta, first), ord_sub(beta, stop)));
  }
  return out.restrict(beta);
}

}  // namespace ordlab
