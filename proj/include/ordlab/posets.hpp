#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "ordlab/sequences.hpp"

namespace ordlab {

/// A sequence with i(alpha) and every C_{alpha,i} replaced at finitely many
/// limits. Used to extend conditions past their top.
class PatchedRule : public ClubRule {
 public:
  struct Patch {
    unsigned index = 0;
    std::vector<OrdSet> clubs;  // clubs[k] is C_{alpha, index + k}
  };

  PatchedRule(IndexedSeq base, std::map<Ordinal, Patch> patches);

  std::string name() const override { return base_.name() + "+patched"; }
  unsigned index_of(const Ordinal& alpha) const override;
  OrdSet club_at(const Ordinal& alpha, unsigned i) const override;

  const std::map<Ordinal, Patch>& patches() const { return patches_; }

 private:
  IndexedSeq base_;
  std::map<Ordinal, Patch> patches_;
};

/// A condition of the indexed square poset: the sequence up to and
/// including gamma. An unset gamma is a malformed condition.
struct IndCondition {
  IndexedSeq seq;
  std::optional<Ordinal> gamma;
};

/// A condition of the plain square poset, reading D_alpha = C_{alpha,i(alpha)}
/// from seq for every limit alpha <= gamma.
struct PlainCondition {
  IndexedSeq seq;
  std::optional<Ordinal> gamma;

  OrdSet club(const Ordinal& alpha) const { return seq.club(alpha, seq.i_of(alpha)); }
};

/// Probe points <= gamma, gamma itself and any patched limits <= gamma.
std::vector<Ordinal> condition_points(const IndexedSeq& seq, const Ordinal& gamma, const std::vector<Ordinal>& probe);

Report validate_ind(const IndCondition& s, const std::vector<Ordinal>& probe);
Report validate_plain_cond(const PlainCondition& s, const std::vector<Ordinal>& probe);

/// s1 end-extends s0: gamma grows and every probe limit <= gamma(s0) carries
/// the same index and clubs. Throws DomainError when either is invalid.
bool extends(const IndCondition& s1, const IndCondition& s0, const std::vector<Ordinal>& probe);
bool extends(const PlainCondition& s1, const PlainCondition& s0, const std::vector<Ordinal>& probe);

struct GlueAnchors {
  /// Below and at this index the new clubs merge the earlier top in.
  unsigned merge_index = 0;
  /// The earlier top gamma_0, an accumulation point of C_{gamma*, m}.
  Ordinal earlier_top;
  /// Points strictly between earlier_top and gamma* kept as non-accumulation
  /// points of the low clubs.
  std::vector<Ordinal> extra_points;
};

/// Extends s (top gamma*) to gamma* + w with i = 0: for i <= m,
/// C = C_{gamma_0,i} + {gamma_0} + extras + [gamma*, gamma* + w); above m,
/// C = C_{gamma*,i} + [gamma*, gamma* + w). Throws DomainError on
/// inconsistent anchors.
IndCondition glue_extension(const IndCondition& s, const Ordinal& gamma_star, const GlueAnchors& anchors);

/// Seals an end-extending chain at delta = sup(ladder points above gamma):
/// limits below delta follow the last condition and
/// C_delta = C_gamma + {gamma} + (ladder points above gamma).
PlainCondition seal_chain(const std::vector<PlainCondition>& chain, const Ordinal& gamma, const OrdSet& ladder_points,
                          const std::vector<Ordinal>& probe);

/// Closure of {beta + a + 1 : a in B}. B must lie below beta and split into
/// finitely many segments, each finite, a full interval, or the successors of
/// an interval with finitely many limits; otherwise DomainError.
OrdSet diamond_encode(const Ordinal& beta, const OrdSet& b);
/// {a < beta : beta + a + 1 in club}.
OrdSet diamond_decode(const OrdSet& club, const Ordinal& beta);

}  // namespace ordlab
