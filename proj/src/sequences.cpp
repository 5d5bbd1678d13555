#include "ordlab/sequences.hpp"

#include <algorithm>

namespace ordlab {

IndexedSeq::IndexedSeq(UniverseParams params, std::shared_ptr<const ClubRule> rule,
                       std::map<OverrideKey, OrdSet> overrides)
    : params_(std::move(params)), rule_(std::move(rule)), overrides_(std::move(overrides)) {
  if (!rule_) throw DomainError("sequence needs a rule");
}

unsigned IndexedSeq::i_of(const Ordinal& alpha) const {
  if (alpha.is_zero()) throw DomainError("i(0) is undefined");
  if (alpha.is_successor()) return 0;
  return rule_->index_of(alpha);
}

bool IndexedSeq::admissible(const Ordinal& alpha, unsigned i) const {
  return !alpha.is_zero() && i < params_.index_bound && i_of(alpha) <= i;
}

OrdSet IndexedSeq::club(const Ordinal& alpha, unsigned i) const {
  if (!admissible(alpha, i))
    throw DomainError("index " + std::to_string(i) + " not admissible at " + alpha.to_string());
  if (alpha.is_successor()) return OrdSet::singleton(alpha.predecessor());
  auto it = overrides_.find({alpha, i});
  if (it != overrides_.end()) return it->second;
  return rule_->club_at(alpha, i);
}

PlainSeq::PlainSeq(UniverseParams params, std::string name, Family family, std::size_t width_bound)
    : params_(std::move(params)), name_(std::move(name)), family_(std::move(family)), width_bound_(width_bound) {}

PlainSeq PlainSeq::single(const IndexedSeq& seq) {
  return PlainSeq(seq.params(), seq.name(), [seq](const Ordinal& a) {
    return std::vector<OrdSet>{seq.club(a, seq.i_of(a))};
  });
}

PlainSeq PlainSeq::all_indices(const IndexedSeq& seq) {
  return PlainSeq(
      seq.params(), seq.name(),
      [seq](const Ordinal& a) {
        std::vector<OrdSet> out;
        for (unsigned i = seq.i_of(a); i < seq.params().index_bound; ++i) {
          OrdSet c = seq.club(a, i);
          if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
        }
        return out;
      },
      seq.params().index_bound + 1);
}

namespace {

class LadderRule : public ClubRule {
 public:
  std::string name() const override { return "ladder"; }
  unsigned index_of(const Ordinal&) const override { return 0; }
  OrdSet club_at(const Ordinal& alpha, unsigned) const override {
    return OrdSet::level_range(alpha.valuation() - 1, fundamental_step(alpha, 1), alpha);
  }
};

class LimitsRule : public ClubRule {
 public:
  std::string name() const override { return "limits"; }
  unsigned index_of(const Ordinal&) const override { return 0; }
  OrdSet club_at(const Ordinal& alpha, unsigned) const override {
    if (alpha.valuation() >= 2) return OrdSet::valuation_range(1, Ordinal(), alpha);
    Ordinal xi = alpha.drop_least();
    OrdSet out = OrdSet::valuation_range(1, Ordinal(), xi);
    if (!xi.is_zero()) out = out.unite(OrdSet::singleton(xi));
    return out.unite(OrdSet::level_range(0, succ(xi), alpha));
  }
};

}  // namespace

IndexedSeq gen_ladder(const UniverseParams& params) { return IndexedSeq(params, std::make_shared<LadderRule>()); }

IndexedSeq gen_limits(const UniverseParams& params) { return IndexedSeq(params, std::make_shared<LimitsRule>()); }

std::vector<Ordinal> probe_limits(const UniverseParams& params, const std::vector<Ordinal>& probe) {
  std::vector<Ordinal> out;
  for (const Ordinal& x : probe)
    if (x.is_limit() && x < params.delta) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ordlab
