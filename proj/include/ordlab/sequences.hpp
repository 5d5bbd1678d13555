#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordlab/ordset.hpp"
#include "ordlab/report.hpp"
#include "ordlab/universe.hpp"

namespace ordlab {

/// Club assignment at limit ordinals. Implementations are pure: the same
/// (alpha, i) always yields the same set.
class ClubRule {
 public:
  virtual ~ClubRule() = default;
  virtual std::string name() const = 0;
  /// i(alpha) for a limit alpha.
  virtual unsigned index_of(const Ordinal& alpha) const = 0;
  /// C_{alpha,i} for a limit alpha and index_of(alpha) <= i < index bound.
  virtual OrdSet club_at(const Ordinal& alpha, unsigned i) const = 0;
};

using OverrideKey = std::pair<Ordinal, unsigned>;

/// A rule-backed matrix <C_{alpha,i} | i(alpha) <= i < indexBound> with
/// explicit overrides. Successors follow the convention i(a+1) = 0 and
/// C_{a+1,i} = {a}.
class IndexedSeq {
 public:
  IndexedSeq(UniverseParams params, std::shared_ptr<const ClubRule> rule,
             std::map<OverrideKey, OrdSet> overrides = {});

  const UniverseParams& params() const { return params_; }
  const ClubRule& rule() const { return *rule_; }
  std::shared_ptr<const ClubRule> rule_ptr() const { return rule_; }
  const std::map<OverrideKey, OrdSet>& overrides() const { return overrides_; }
  std::string name() const { return rule_->name(); }

  unsigned i_of(const Ordinal& alpha) const;
  bool admissible(const Ordinal& alpha, unsigned i) const;
  /// Throws DomainError for alpha == 0 or an index outside [i(alpha), bound).
  OrdSet club(const Ordinal& alpha, unsigned i) const;

 private:
  UniverseParams params_;
  std::shared_ptr<const ClubRule> rule_;
  std::map<OverrideKey, OrdSet> overrides_;
};

/// A family of clubs per limit (the sets script-C_alpha), rule-backed.
class PlainSeq {
 public:
  using Family = std::function<std::vector<OrdSet>(const Ordinal&)>;

  PlainSeq(UniverseParams params, std::string name, Family family, std::size_t width_bound = 2);

  /// script-C_alpha = {C_{alpha, i(alpha)}}.
  static PlainSeq single(const IndexedSeq& seq);
  /// script-C_alpha = {C_{alpha,i} : i(alpha) <= i < bound}, deduplicated.
  static PlainSeq all_indices(const IndexedSeq& seq);

  const UniverseParams& params() const { return params_; }
  const std::string& name() const { return name_; }
  std::size_t width_bound() const { return width_bound_; }
  std::vector<OrdSet> clubs(const Ordinal& alpha) const { return family_(alpha); }

 private:
  UniverseParams params_;
  std::string name_;
  Family family_;
  std::size_t width_bound_;
};

/// Ladder generator: C_alpha = {xi' + w^(e-1) * n : n >= 1} for alpha = xi' + w^e.
IndexedSeq gen_ladder(const UniverseParams& params);
/// Coherent generator whose clubs consist of limit ordinals where possible.
IndexedSeq gen_limits(const UniverseParams& params);

/// The rule behind transform_square_to_indexed. Exposed for its case counters.
class TransformRule : public ClubRule {
 public:
  TransformRule(IndexedSeq base, UniverseParams params);

  std::string name() const override { return "transform(" + base_.name() + ")"; }
  unsigned index_of(const Ordinal& alpha) const override;
  OrdSet club_at(const Ordinal& alpha, unsigned i) const override;

  const IndexedSeq& base() const { return base_; }
  /// D_alpha, the single base club.
  OrdSet base_club(const Ordinal& alpha) const;
  /// Number of limits handled by the base case and Cases 1-3, in that order.
  std::array<std::size_t, 4> case_counts() const;
  /// Case used at a limit alpha (0 for alpha == w).
  int case_of(const Ordinal& alpha) const;

 private:
  struct Entry {
    unsigned index = 0;
    int which = 0;
    std::vector<OrdSet> clubs;  // clubs[k] is C_{alpha, index + k}
  };

  const Entry& entry(const Ordinal& beta) const;
  Entry compute(const Ordinal& beta) const;
  OrdSet club(const Ordinal& alpha, unsigned i) const;
  OrdSet chain_limit(const Ordinal& beta, unsigned i, const OrdSet& anchors) const;
  void case1(const Ordinal& beta, const OrdSet& acc_d, Entry& out) const;
  void case2(const Ordinal& beta, const OrdSet& acc_d, Entry& out) const;
  void case3(const Ordinal& beta, const OrdSet& d, const OrdSet& acc_d, Entry& out) const;

  IndexedSeq base_;
  UniverseParams params_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<Ordinal, Entry> memo_;
};

/// The square-to-indexed-square construction, evaluated lazily and memoized.
/// The base is read as a single-club sequence D_alpha = C_{alpha, i(alpha)}.
IndexedSeq transform_square_to_indexed(const IndexedSeq& base, const UniverseParams& params);

/// The TransformRule behind seq, or nullptr.
const TransformRule* as_transform(const IndexedSeq& seq);

Report validate_plain(const PlainSeq& seq, const std::vector<Ordinal>& probe,
                      std::optional<Ordinal> otp_bound = std::nullopt);
Report validate_indexed(const IndexedSeq& seq, const std::vector<Ordinal>& probe);
/// Both inductive hypotheses of the transform at every probe limit.
Report check_transform_hypotheses(const IndexedSeq& seq, const std::vector<Ordinal>& probe);

/// Probe limits beta where sup(nacc(C) cap A) = beta for every club C at beta.
/// Requires sup(A) = delta.
std::vector<Ordinal> check_guessing_minus(const PlainSeq& seq, const OrdSet& a, const std::vector<Ordinal>& probe);
/// Probe limits beta where, for every club C at beta and every A in as, the
/// largest alphaProbe point below beta satisfies succ_w(C \ alpha) subset A.
std::vector<Ordinal> check_guessing_full(const PlainSeq& seq, const std::vector<OrdSet>& as,
                                         const std::vector<Ordinal>& probe, const std::vector<Ordinal>& alpha_probe);

/// {alpha in probe : sup(acc(C_alpha)) < alpha}, C_alpha the first listed club.
std::vector<Ordinal> compute_nonreflecting_T(const PlainSeq& seq, const std::vector<Ordinal>& probe);
/// Violations: E not club in delta, E meeting T, and any (alpha, beta, C) with
/// succ_w(C \ alpha) subset E.
Report check_incon(const PlainSeq& seq, const OrdSet& e, const std::vector<Ordinal>& probe,
                   const std::vector<Ordinal>& alpha_probe);
/// Points alpha in acc(D) cap probe with D cap alpha not among the clubs at alpha.
std::vector<Ordinal> thread_check(const PlainSeq& seq, const OrdSet& d, const std::vector<Ordinal>& probe);

/// Limit ordinals of the probe that lie below delta.
std::vector<Ordinal> probe_limits(const UniverseParams& params, const std::vector<Ordinal>& probe);

}  // namespace ordlab
