#include <algorithm>

#include "ordlab/sequences.hpp"

namespace ordlab {

namespace {

// Accumulation points examined for coherence beyond the probe itself.
constexpr std::size_t kAccSample = 6;

std::string str(const Ordinal& x) { return x.to_string(); }

std::string pair(const Ordinal& a, const Ordinal& b) { return "(" + str(a) + ", " + str(b) + ")"; }

std::string with_index(const Ordinal& b, unsigned i) { return "(" + str(b) + ", i=" + std::to_string(i) + ")"; }

// Probe points below beta in acc(c) together with the first few elements of acc(c).
std::vector<Ordinal> coherence_points(const OrdSet& acc, const Ordinal& beta, const std::vector<Ordinal>& probe) {
  std::vector<Ordinal> pts = acc.first_elements(kAccSample);
  for (const Ordinal& a : probe)
    if (a < beta && acc.contains(a)) pts.push_back(a);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

Report validate_plain(const PlainSeq& seq, const std::vector<Ordinal>& probe, std::optional<Ordinal> otp_bound) {
  Report r;
  for (const Ordinal& beta : probe_limits(seq.params(), probe)) {
    std::vector<OrdSet> family = seq.clubs(beta);
    ++r.checked;
    if (family.empty() || family.size() >= seq.width_bound())
      r.fail("width", str(beta), "0 < |C_beta| < " + std::to_string(seq.width_bound()), std::to_string(family.size()));
    for (const OrdSet& c : family) {
      if (!c.is_club_in(beta)) r.fail("club", str(beta), "club in " + str(beta), c.to_literal());
      if (otp_bound && c.otp() > *otp_bound)
        r.fail("otp", str(beta), "otp <= " + str(*otp_bound), str(c.otp()));
      for (const Ordinal& alpha : coherence_points(c.acc(), beta, probe)) {
        ++r.checked;
        std::vector<OrdSet> below = seq.clubs(alpha);
        OrdSet cut = c.restrict(alpha);
        if (std::find(below.begin(), below.end(), cut) == below.end())
          r.fail("coherence", pair(alpha, beta), "C cap alpha in C_alpha", cut.to_literal());
      }
    }
  }
  return r;
}

Report validate_indexed(const IndexedSeq& seq, const std::vector<Ordinal>& probe) {
  Report r;
  const UniverseParams& p = seq.params();
  const unsigned bound = p.index_bound;
  std::vector<Ordinal> limits = probe_limits(p, probe);
  for (const Ordinal& beta : limits) {
    const unsigned ib = seq.i_of(beta);
    ++r.checked;
    if (ib >= bound) {
      r.fail("clause1", str(beta), "i(beta) < " + std::to_string(bound), std::to_string(ib));
      continue;
    }
    std::vector<OrdSet> clubs;
    for (unsigned i = ib; i < bound; ++i) clubs.push_back(seq.club(beta, i));
    for (unsigned i = ib; i < bound; ++i) {
      const OrdSet& c = clubs[i - ib];
      ++r.checked;
      if (!c.is_club_in(beta)) r.fail("clause2", with_index(beta, i), "club in beta", c.to_literal());
      if (i < p.thresholds.size() && c.otp() >= p.thresholds[i])
        r.fail("clause3", with_index(beta, i), "otp < " + str(p.thresholds[i]), str(c.otp()));
      OrdSet acc = c.acc();
      if (i + 1 < bound) {
        const OrdSet& next = clubs[i + 1 - ib];
        if (!c.subset_of(next)) r.fail("clause4", with_index(beta, i), "C_i subset C_(i+1)", c.minus(next).to_literal());
        if (!acc.subset_of(next.acc()))
          r.fail("monotone-acc", with_index(beta, i), "acc(C_i) subset acc(C_(i+1))", acc.minus(next.acc()).to_literal());
      }
      for (const Ordinal& alpha : coherence_points(acc, beta, probe)) {
        ++r.checked;
        if (seq.i_of(alpha) > i) {
          r.fail("clause5", pair(alpha, beta) + " i=" + std::to_string(i), "i(alpha) <= i", std::to_string(seq.i_of(alpha)));
          continue;
        }
        OrdSet cut = c.restrict(alpha);
        OrdSet want = seq.club(alpha, i);
        if (cut != want)
          r.fail("clause5", pair(alpha, beta) + " i=" + std::to_string(i), want.to_literal(), cut.to_literal());
      }
    }
    for (const Ordinal& alpha : limits) {
      if (alpha >= beta) break;
      ++r.checked;
      unsigned from = std::max(ib, seq.i_of(alpha));
      bool found = false;
      for (unsigned i = from; i < bound && !found; ++i) found = clubs[i - ib].acc().contains(alpha);
      if (!found) r.fail("clause6", pair(alpha, beta), "witness i < " + std::to_string(bound), "none");
    }
  }
  return r;
}

Report check_transform_hypotheses(const IndexedSeq& seq, const std::vector<Ordinal>& probe) {
  Report r;
  const TransformRule* t = as_transform(seq);
  if (t == nullptr) {
    r.fail("hypotheses", seq.name(), "a transform output", "other rule");
    return r;
  }
  for (const Ordinal& alpha : probe_limits(seq.params(), probe)) {
    ++r.checked;
    OrdSet d = t->base_club(alpha);
    auto least = seq.params().index_for(d.otp());
    unsigned ia = seq.i_of(alpha);
    if (!least || *least != ia)
      r.fail("least-index", str(alpha), least ? std::to_string(*least) : "overflow", std::to_string(ia));
    OrdSet missing = d.acc().minus(seq.club(alpha, ia).acc());
    if (!missing.empty()) r.fail("acc-inclusion", str(alpha), "acc(D) subset acc(C_(alpha,i(alpha)))", missing.to_literal());
  }
  return r;
}

std::vector<Ordinal> check_guessing_minus(const PlainSeq& seq, const OrdSet& a, const std::vector<Ordinal>& probe) {
  if (a.sup() != seq.params().delta) throw DomainError("guessing set must be cofinal in delta");
  std::vector<Ordinal> out;
  for (const Ordinal& beta : probe_limits(seq.params(), probe)) {
    bool all = true;
    for (const OrdSet& c : seq.clubs(beta))
      if (c.nacc().intersect(a).sup() != beta) all = false;
    if (all) out.push_back(beta);
  }
  return out;
}

std::vector<Ordinal> check_guessing_full(const PlainSeq& seq, const std::vector<OrdSet>& as,
                                         const std::vector<Ordinal>& probe, const std::vector<Ordinal>& alpha_probe) {
  for (const OrdSet& a : as)
    if (a.sup() != seq.params().delta) throw DomainError("guessing set must be cofinal in delta");
  std::vector<Ordinal> out;
  for (const Ordinal& beta : probe_limits(seq.params(), probe)) {
    std::optional<Ordinal> last;
    for (const Ordinal& x : alpha_probe)
      if (x < beta && (!last || x > *last)) last = x;
    if (!last) continue;
    bool all = true;
    for (const OrdSet& c : seq.clubs(beta)) {
      OrdSet guessed = c.above(*last).succ_sigma(std::nullopt);
      for (const OrdSet& a : as)
        if (!guessed.subset_of(a)) all = false;
    }
    if (all) out.push_back(beta);
  }
  return out;
}

std::vector<Ordinal> compute_nonreflecting_T(const PlainSeq& seq, const std::vector<Ordinal>& probe) {
  std::vector<Ordinal> out;
  for (const Ordinal& alpha : probe_limits(seq.params(), probe)) {
    std::vector<OrdSet> family = seq.clubs(alpha);
    if (family.empty()) continue;
    if (family.front().acc().sup() < alpha) out.push_back(alpha);
  }
  return out;
}

Report check_incon(const PlainSeq& seq, const OrdSet& e, const std::vector<Ordinal>& probe,
                   const std::vector<Ordinal>& alpha_probe) {
  Report r;
  if (!e.is_club_in(seq.params().delta)) r.fail("precondition", "E", "club in delta", e.to_literal());
  for (const Ordinal& t : compute_nonreflecting_T(seq, probe))
    if (e.contains(t)) r.fail("precondition", str(t), "E disjoint from T", "member of E");
  for (const Ordinal& beta : probe_limits(seq.params(), probe)) {
    for (const OrdSet& c : seq.clubs(beta)) {
      for (const Ordinal& alpha : alpha_probe) {
        if (alpha >= beta) continue;
        ++r.checked;
        OrdSet guessed = c.above(alpha).succ_sigma(std::nullopt);
        if (guessed.subset_of(e)) r.fail("conclusion", pair(alpha, beta), "succ_w(C \\ alpha) not subset E", guessed.to_literal());
      }
    }
  }
  return r;
}

std::vector<Ordinal> thread_check(const PlainSeq& seq, const OrdSet& d, const std::vector<Ordinal>& probe) {
  if (!d.is_club_in(seq.params().delta)) throw DomainError("thread candidate must be club in delta");
  std::vector<Ordinal> out;
  OrdSet acc = d.acc();
  for (const Ordinal& alpha : probe_limits(seq.params(), probe)) {
    if (!acc.contains(alpha)) continue;
    std::vector<OrdSet> family = seq.clubs(alpha);
    if (std::find(family.begin(), family.end(), d.restrict(alpha)) == family.end()) out.push_back(alpha);
  }
  return out;
}

}  // namespace ordlab
