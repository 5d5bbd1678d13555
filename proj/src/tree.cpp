#include "ordlab/tree.hpp"

#include <algorithm>
#include <set>

namespace ordlab {

std::vector<Ordinal> TreeNode::last_trace() const {
  std::vector<Ordinal> out;
  out.reserve(proj.size());
  for (const OrdSet& s : proj) out.push_back(s.otp());
  return out;
}

std::string TreeNode::to_string() const {
  std::string s = "node(" + level.to_string() + ": [";
  for (std::size_t k = 0; k < proj.size(); ++k) s += (k ? "," : "") + proj[k].to_literal();
  return s + "])";
}

TreeNode node(const IndexedSeq& seq, const Ordinal& level, const Ordinal& beta, unsigned i) {
  if (level >= beta) throw DomainError("node needs level < beta");
  return TreeNode{level, beta, i, walk(seq, level, beta, i).projection};
}

TreeNode restrict_node(const IndexedSeq& seq, const TreeNode& n, const Ordinal& lower) {
  if (lower > n.level) throw DomainError("restrict_node needs lower <= level");
  return TreeNode{lower, n.origin_beta, n.origin_index, restrict_projection(seq, n.proj, n.level, lower)};
}

bool tree_less(const IndexedSeq& seq, const TreeNode& s, const TreeNode& t) {
  return s.level < t.level && restrict_node(seq, t, s.level) == s;
}

namespace {

bool node_order(const TreeNode& a, const TreeNode& b) {
  auto ta = a.last_trace();
  auto tb = b.last_trace();
  if (ta != tb) return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
  std::vector<std::string> la, lb;
  for (const OrdSet& s : a.proj) la.push_back(s.to_literal());
  for (const OrdSet& s : b.proj) lb.push_back(s.to_literal());
  return la < lb;
}

void add_unique(std::vector<TreeNode>& nodes, TreeNode n) {
  if (std::find(nodes.begin(), nodes.end(), n) == nodes.end()) nodes.push_back(std::move(n));
}

}  // namespace

LevelResult build_level(const IndexedSeq& seq, const Ordinal& level, const std::vector<Ordinal>& betas,
                        const std::vector<unsigned>& indices) {
  LevelResult out;
  for (const Ordinal& beta : betas) {
    if (beta <= level) continue;
    for (unsigned i : indices) {
      if (!seq.admissible(beta, i)) continue;
      ++out.report.checked;
      add_unique(out.nodes, node(seq, level, beta, i));
    }
  }
  std::sort(out.nodes.begin(), out.nodes.end(), node_order);
  for (const TreeNode& n : out.nodes)
    for (const OrdSet& entry : n.proj) {
      ++out.report.checked;
      if (size_witness(seq, level, entry).empty())
        out.report.fail("size-decomposition", n.to_string(), "club restriction plus finite set", entry.to_literal());
    }
  return out;
}

Report check_special(const IndexedSeq& seq, const std::vector<std::vector<TreeNode>>& levels) {
  Report r;
  std::vector<const TreeNode*> all;
  for (const auto& lv : levels)
    for (const TreeNode& n : lv) all.push_back(&n);
  std::sort(all.begin(), all.end(), [](const TreeNode* a, const TreeNode* b) { return a->level < b->level; });

  // below[t] = indices of built nodes s with s <_T t, found by restricting t
  // to each lower level once.
  std::vector<std::set<std::size_t>> below(all.size());
  for (std::size_t t = 0; t < all.size(); ++t) {
    ++r.checked;
    if (tree_less(seq, *all[t], *all[t])) r.fail("irreflexive", all[t]->to_string(), "not t < t", "t < t");
    std::optional<Ordinal> last_level;
    TreeNode cut;
    for (std::size_t s = 0; s < all.size() && all[s]->level < all[t]->level; ++s) {
      if (!last_level || *last_level != all[s]->level) {
        last_level = all[s]->level;
        cut = restrict_node(seq, *all[t], all[s]->level);
      }
      if (cut == *all[s]) below[t].insert(s);
    }
  }
  for (std::size_t t = 0; t < all.size(); ++t) {
    auto tr_t = all[t]->last_trace();
    for (std::size_t s : below[t]) {
      ++r.checked;
      if (!kb_less(all[s]->last_trace(), tr_t))
        r.fail("special", all[s]->to_string() + " < " + all[t]->to_string(),
               format_trace(all[s]->last_trace()) + " <KB " + format_trace(tr_t), "not KB-below");
      for (std::size_t u : below[s])
        if (!below[t].count(u))
          r.fail("transitive", all[u]->to_string() + " < " + all[s]->to_string() + " < " + all[t]->to_string(),
                 "u < t", "not comparable");
    }
  }
  return r;
}

AscentPath build_ascent_path(const IndexedSeq& seq, const std::vector<Ordinal>& levels) {
  AscentPath path;
  path.width = seq.params().index_bound;
  for (const Ordinal& a : levels) {
    Ordinal beta = ord_add(a, literals::omega);
    if (beta >= seq.params().delta) throw DomainError("level " + a.to_string() + " too close to delta");
    std::vector<std::optional<TreeNode>> b(path.width);
    std::optional<TreeNode> filler;
    for (unsigned i = seq.i_of(beta); i < path.width; ++i) {
      b[i] = node(seq, a, beta, i);
      if (!filler || node_order(*b[i], *filler)) filler = b[i];
    }
    if (!filler) throw DomainError("no admissible index at " + beta.to_string());
    auto& row = path.per_level[a];
    for (auto& n : b) row.push_back(n ? std::move(*n) : *filler);
  }
  return path;
}

AscentReport verify_ascent(const IndexedSeq& seq, const AscentPath& path) {
  AscentReport out;
  for (auto lo = path.per_level.begin(); lo != path.per_level.end(); ++lo) {
    const Ordinal b0 = ord_add(lo->first, literals::omega);
    for (auto hi = std::next(lo); hi != path.per_level.end(); ++hi) {
      const Ordinal b1 = ord_add(hi->first, literals::omega);
      AscentRow row{lo->first, hi->first, std::nullopt, {}, false, false};
      if (b0 == b1) {
        row.i_star = seq.i_of(b1);
      } else {
        for (unsigned i = std::max(seq.i_of(b0), seq.i_of(b1)); i < path.width && !row.i_star; ++i)
          if (seq.club(b1, i).acc().contains(b0)) row.i_star = i;
      }
      bool strong = row.i_star.has_value();
      if (row.i_star) {
        for (unsigned i = *row.i_star; i < path.width; ++i) {
          row.checked_indices.push_back(i);
          ++out.report.checked;
          if (!tree_less(seq, lo->second[i], hi->second[i])) strong = false;
        }
      }
      for (unsigned x = 0; x < path.width && !row.weak; ++x)
        for (unsigned y = 0; y < path.width && !row.weak; ++y) row.weak = tree_less(seq, lo->second[x], hi->second[y]);
      row.pass = strong && row.weak;
      std::string pair = "(" + lo->first.to_string() + ", " + hi->first.to_string() + ")";
      if (!row.i_star)
        out.report.fail("ascent", pair, "i* < " + std::to_string(path.width), "no witness");
      else if (!strong)
        out.report.fail("ascent", pair, "b0(i) <_T b1(i) for i >= " + std::to_string(*row.i_star), "fails");
      if (!row.weak) out.report.fail("ascent-weak", pair, "some b0(x) <_T b1(y)", "none");
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace ordlab
