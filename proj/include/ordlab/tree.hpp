#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordlab/walks.hpp"

namespace ordlab {

/// An element of the trace tree, stored as pr_i(level, originBeta). Equality
/// ignores the origin fields.
struct TreeNode {
  Ordinal level;
  Ordinal origin_beta;
  unsigned origin_index = 0;
  Projection proj;

  /// tr_i(level, originBeta), recomputed from proj.
  std::vector<Ordinal> last_trace() const;
  std::string to_string() const;

  friend bool operator==(const TreeNode& a, const TreeNode& b) { return a.level == b.level && a.proj == b.proj; }
};

TreeNode node(const IndexedSeq& seq, const Ordinal& level, const Ordinal& beta, unsigned i);
/// The node below n at lower, from n.proj alone.
TreeNode restrict_node(const IndexedSeq& seq, const TreeNode& n, const Ordinal& lower);
bool tree_less(const IndexedSeq& seq, const TreeNode& s, const TreeNode& t);

struct LevelResult {
  std::vector<TreeNode> nodes;
  Report report;
};

/// Distinct nodes node(level, beta, i) over the probes. Each projection entry
/// is also checked for a size decomposition.
LevelResult build_level(const IndexedSeq& seq, const Ordinal& level, const std::vector<Ordinal>& betas,
                        const std::vector<unsigned>& indices);

/// lastTrace strictly KB-increasing along every comparable pair, plus
/// irreflexivity and transitivity of tree_less on the given nodes.
Report check_special(const IndexedSeq& seq, const std::vector<std::vector<TreeNode>>& levels);

struct AscentPath {
  /// b_level(i) for i < width.
  std::map<Ordinal, std::vector<TreeNode>> per_level;
  unsigned width = 0;
};

/// b_a(i) = node(a, a + w, i) where admissible, otherwise the least node of
/// the level in (trace, literal) order.
AscentPath build_ascent_path(const IndexedSeq& seq, const std::vector<Ordinal>& levels);

struct AscentRow {
  Ordinal lower;
  Ordinal upper;
  std::optional<unsigned> i_star;
  std::vector<unsigned> checked_indices;
  bool weak = false;
  bool pass = false;
};

struct AscentReport {
  std::vector<AscentRow> rows;
  Report report;
};

/// For each pair lower < upper of path levels: the witness i* and
/// b_lower(i) <_T b_upper(i) for every i in [i*, width); also the weak
/// form (some pair of indices compares).
AscentReport verify_ascent(const IndexedSeq& seq, const AscentPath& path);

}  // namespace ordlab
