#pragma once

#include <string>
#include <vector>

#include "ordlab/sequences.hpp"

namespace ordlab {

struct WalkStep {
  Ordinal beta;
  unsigned index = 0;

  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

/// The i-th minimal walk from beta down to alpha.
struct WalkResult {
  std::vector<WalkStep> steps;
  /// pr_i(alpha, beta): C_{beta_m, i_m} cap alpha for each step.
  std::vector<OrdSet> projection;
  /// tr_i(alpha, beta): order types of the projection entries.
  std::vector<Ordinal> trace;

  std::size_t length() const { return steps.size(); }
  friend bool operator==(const WalkResult&, const WalkResult&) = default;
};

using Projection = std::vector<OrdSet>;

/// Requires alpha <= beta and i admissible at beta. alpha == beta gives the
/// empty walk.
WalkResult walk(const IndexedSeq& seq, const Ordinal& alpha, const Ordinal& beta, unsigned i);

/// Kleene-Brouwer order: sigma properly end-extends tau, or sigma is smaller
/// at the first difference.
bool kb_less(const std::vector<Ordinal>& sigma, const std::vector<Ordinal>& tau);

/// pr_i(lower, beta) rebuilt from upper_proj = pr_i(upper, beta) and direct
/// walks below upper only, following the composition identity for walks.
Projection restrict_projection(const IndexedSeq& seq, const Projection& upper_proj, const Ordinal& upper,
                               const Ordinal& lower);

std::vector<unsigned> all_indices(const UniverseParams& params);

/// Both parts of the first walk lemma over all probe triples.
Report check_lemma1(const IndexedSeq& seq, const std::vector<Ordinal>& probe, const std::vector<unsigned>& index_probe);
/// The second walk lemma over all probe quadruples, plus the composition
/// identity wherever its hypothesis holds.
Report check_lemma2(const IndexedSeq& seq, const std::vector<Ordinal>& probe, const std::vector<unsigned>& index_probe);

struct DAlpha {
  std::vector<OrdSet> members;
  /// One line per member: how it decomposes (C_{alpha,i}, C_{gamma,i} plus
  /// a finite set, or finite).
  std::vector<std::string> witnesses;
  Report report;
};

/// {C_{beta,i} cap alpha : beta in probe, i in index_probe admissible}.
DAlpha collect_D_alpha(const IndexedSeq& seq, const Ordinal& alpha, const std::vector<Ordinal>& probe,
                       const std::vector<unsigned>& index_probe);

/// How d, a subset of alpha, decomposes: "C_(alpha,i)", "C_(gamma,i) + finite"
/// with gamma = max acc(d), or "finite". Empty when no decomposition exists.
std::string size_witness(const IndexedSeq& seq, const Ordinal& alpha, const OrdSet& d);

std::string format_walk(const WalkResult& w);
std::string format_trace(const std::vector<Ordinal>& trace);

}  // namespace ordlab
