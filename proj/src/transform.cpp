#include <algorithm>

#include "ordlab/sequences.hpp"

namespace ordlab {

namespace {

// How far chain_limit looks for a stable periodic tail before giving up.
constexpr std::uint64_t kMaxTailStart = 20;
constexpr std::uint64_t kStableSlices = 3;
constexpr std::uint64_t kExtraChecks = 4;

std::string at(const Ordinal& beta, unsigned i) {
  return "(" + beta.to_string() + ", " + std::to_string(i) + ")";
}

}  // namespace

TransformRule::TransformRule(IndexedSeq base, UniverseParams params)
    : base_(std::move(base)), params_(std::move(params)) {
  params_.check();
}

OrdSet TransformRule::base_club(const Ordinal& alpha) const { return base_.club(alpha, base_.i_of(alpha)); }

unsigned TransformRule::index_of(const Ordinal& alpha) const { return entry(alpha).index; }

OrdSet TransformRule::club_at(const Ordinal& alpha, unsigned i) const { return club(alpha, i); }

int TransformRule::case_of(const Ordinal& alpha) const { return entry(alpha).which; }

std::array<std::size_t, 4> TransformRule::case_counts() const {
  std::lock_guard lock(mutex_);
  std::array<std::size_t, 4> counts{};
  for (const auto& [_, e] : memo_) ++counts[static_cast<std::size_t>(e.which)];
  return counts;
}

const TransformRule::Entry& TransformRule::entry(const Ordinal& beta) const {
  if (!beta.is_limit()) throw DomainError("transform entry needs a limit, got " + beta.to_string());
  std::lock_guard lock(mutex_);
  auto it = memo_.find(beta);
  if (it != memo_.end()) return it->second;
  Entry e = compute(beta);
  return memo_.emplace(beta, std::move(e)).first->second;
}

OrdSet TransformRule::club(const Ordinal& alpha, unsigned i) const {
  if (alpha.is_successor()) return OrdSet::singleton(alpha.predecessor());
  const Entry& e = entry(alpha);
  if (i < e.index || i >= params_.index_bound)
    throw DomainError("transform: index " + std::to_string(i) + " not admissible at " + alpha.to_string());
  return e.clubs[i - e.index];
}

TransformRule::Entry TransformRule::compute(const Ordinal& beta) const {
  OrdSet d = base_club(beta);
  auto index = params_.index_for(d.otp());
  if (!index)
    throw DomainError("threshold overflow: otp(D) = " + d.otp().to_string() + " at " + beta.to_string());
  Entry out;
  out.index = *index;
  if (beta == literals::omega) {
    out.which = 0;
    for (unsigned i = out.index; i < params_.index_bound; ++i)
      out.clubs.push_back(OrdSet::level_range(0, Ordinal(1), beta));
    return out;
  }
  OrdSet acc_d = d.acc();
  if (beta.valuation() == 1) {
    case3(beta, d, acc_d, out);
  } else if (!acc_d.empty() && acc_d.sup() == beta) {
    case1(beta, acc_d, out);
  } else {
    case2(beta, acc_d, out);
  }
  return out;
}

// Union of C_{a,i} over an increasing chain of anchors a cofinal in beta.
// Below each ladder point p_n = fundamental_step(beta, n) the union agrees
// with C_{a(n),i}, a(n) the least anchor >= p_n. The tail is guessed from
// slices [p_n, p_{n+1}) that consist of whole valuation levels and then
// confirmed against further slices.
OrdSet TransformRule::chain_limit(const Ordinal& beta, unsigned i, const OrdSet& anchors) const {
  const unsigned width = beta.valuation() - 1;
  auto point = [&](std::uint64_t n) { return fundamental_step(beta, n); };
  auto below = [&](std::uint64_t n) {
    Ordinal p = point(n);
    return club(anchors.min_above(p), i).restrict(p);
  };
  // Levels fully present in [p_n, p_{n+1}), or nullopt if the slice has
  // any other shape.
  auto slice_levels = [&](std::uint64_t n) -> std::optional<std::vector<unsigned>> {
    Ordinal lo = point(n);
    Ordinal hi = point(n + 1);
    OrdSet slice = below(n + 1).above(lo);
    OrdSet rebuilt;
    std::vector<unsigned> levels;
    for (unsigned e = 0; e <= width; ++e) {
      OrdSet full = OrdSet::level_range(e, lo, hi);
      if (full.subset_of(slice)) {
        levels.push_back(e);
        rebuilt = rebuilt.unite(full);
      }
    }
    if (rebuilt != slice) return std::nullopt;
    return levels;
  };

  for (std::uint64_t start = 1; start <= kMaxTailStart; ++start) {
    auto levels = slice_levels(start);
    if (!levels) continue;
    bool stable = true;
    for (std::uint64_t k = 1; k < kStableSlices && stable; ++k) stable = slice_levels(start + k) == levels;
    if (!stable) continue;
    OrdSet guess = below(start);
    for (unsigned e : *levels) guess = guess.unite(OrdSet::level_range(e, point(start), beta));
    bool confirmed = true;
    for (std::uint64_t m = 1; m <= start + kStableSlices + kExtraChecks && confirmed; ++m)
      confirmed = guess.restrict(point(m)) == below(m);
    if (confirmed) return guess;
  }
  throw DomainError("recursion escapes SINF: no periodic tail for the union at " + at(beta, i));
}

void TransformRule::case1(const Ordinal& beta, const OrdSet& acc_d, Entry& out) const {
  out.which = 1;
  for (unsigned i = out.index; i < params_.index_bound; ++i) out.clubs.push_back(chain_limit(beta, i, acc_d));
}

void TransformRule::case2(const Ordinal& beta, const OrdSet& acc_d, Entry& out) const {
  out.which = 2;
  const unsigned e = beta.valuation();
  const unsigned top = params_.index_bound - 1;

  // alpha_0 = sup(acc D) when acc D is nonempty, followed by the ladder
  // points of beta above it; otherwise the ladder itself.
  std::vector<Ordinal> alphas;
  std::uint64_t first_step = 1;
  if (!acc_d.empty()) {
    alphas.push_back(acc_d.sup());
    while (fundamental_step(beta, first_step) <= alphas.front()) ++first_step;
  }
  auto alpha_at = [&](std::size_t n) {
    while (alphas.size() <= n) {
      std::uint64_t k = first_step + alphas.size() - (acc_d.empty() ? 0 : 1);
      alphas.push_back(fundamental_step(beta, k));
    }
    return alphas[n];
  };
  auto ladder_from = [&](std::size_t n) {
    OrdSet tail = OrdSet::level_range(e - 1, alpha_at(std::max<std::size_t>(n, 1)), beta);
    if (n == 0) tail = tail.unite(OrdSet::singleton(alpha_at(0)));
    return tail;
  };

  // Below the top index every club is C_{alpha_0,i} plus the ladder. The
  // top index takes the union of the chain; a longer run of strictly
  // increasing block indices would leave partial successor runs in each
  // ladder slice, which no finite interval list can describe.
  const Ordinal a0 = alpha_at(0);
  const OrdSet ladder = ladder_from(0);
  for (unsigned i = out.index; i < top; ++i) {
    OrdSet c = ladder;
    if (index_of(a0) <= i) c = c.unite(club(a0, i));
    out.clubs.push_back(std::move(c));
  }
  if (out.index <= top) out.clubs.push_back(chain_limit(beta, top, ladder));
}

void TransformRule::case3(const Ordinal& beta, const OrdSet& d, const OrdSet& acc_d, Entry& out) const {
  out.which = 3;
  const Ordinal alpha = beta.drop_least();
  const unsigned i_alpha = index_of(alpha);
  const OrdSet tail = OrdSet::singleton(alpha).unite(OrdSet::level_range(0, succ(alpha), beta));

  // alpha_0 = sup(acc D_beta); when D_beta has order type w (or no
  // accumulation points) alpha itself, falling back to w when alpha's index
  // is too large to be reused at i(beta).
  Ordinal alpha0;
  if (d.otp() == literals::omega || acc_d.empty())
    alpha0 = i_alpha <= out.index ? alpha : literals::omega;
  else
    alpha0 = acc_d.sup();

  unsigned i_star = out.index;
  if (alpha0 != alpha) {
    i_star = params_.index_bound;
    for (unsigned i = std::max(out.index, i_alpha); i < params_.index_bound; ++i)
      if (club(alpha, i).acc().contains(alpha0)) {
        i_star = i;
        break;
      }
  }
  for (unsigned i = out.index; i < params_.index_bound; ++i) {
    if (i >= i_star) {
      out.clubs.push_back(club(alpha, i).unite(tail));
      continue;
    }
    OrdSet c = OrdSet::singleton(alpha0).unite(tail);
    if (index_of(alpha0) <= i) c = c.unite(club(alpha0, i));
    out.clubs.push_back(std::move(c));
  }
}

IndexedSeq transform_square_to_indexed(const IndexedSeq& base, const UniverseParams& params) {
  return IndexedSeq(params, std::make_shared<TransformRule>(base, params));
}

const TransformRule* as_transform(const IndexedSeq& seq) {
  return dynamic_cast<const TransformRule*>(&seq.rule());
}

}  // namespace ordlab
