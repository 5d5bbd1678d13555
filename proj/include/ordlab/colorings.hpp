#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordlab/report.hpp"

namespace ordlab {

/// Subsets of {0..N-1} as bit masks; N <= 64 throughout this module.
using Mask = std::uint64_t;

/// c : [N]^2 -> L, stored as a strict upper triangle.
class Coloring {
 public:
  Coloring(unsigned n, unsigned l);
  Coloring(unsigned n, unsigned l, std::vector<unsigned> upper);

  unsigned n() const { return n_; }
  unsigned l() const { return l_; }
  /// c(a, b) for a < b.
  unsigned at(unsigned a, unsigned b) const;
  void set(unsigned a, unsigned b, unsigned v);
  const std::vector<unsigned>& values() const { return table_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::size_t slot(unsigned a, unsigned b) const;

  unsigned n_;
  unsigned l_;
  std::vector<unsigned> table_;
};

/// D(i, beta) for i < L, beta < N.
struct CoveringMatrix {
  unsigned n = 0;
  unsigned l = 0;
  std::vector<Mask> d;  // d[i * n + beta]

  Mask at(unsigned i, unsigned beta) const { return d[i * n + beta]; }
};

/// A finite tree given by levels and parent links: parent[k][v] is the node
/// of level k-1 below node v of level k.
struct FiniteTree {
  std::vector<unsigned> widths;
  std::vector<std::vector<unsigned>> parent;

  /// Node u of level a lies strictly below node v of level b.
  bool less(unsigned a, unsigned u, unsigned b, unsigned v) const;
};

/// path[level][xi] is the node b_level(xi).
using FinitePath = std::vector<std::vector<unsigned>>;

/// c(a, b) = least eta with b_a(xi) < b_b(xi) for every xi >= eta. Throws
/// DomainError when some pair has no such eta below the path width.
Coloring coloring_from_ascent(const FiniteTree& tree, const FinitePath& path);

Report check_subadditive(const Coloring& c);
CoveringMatrix matrix_from_coloring(const Coloring& c);

/// Clauses 1-3 and local downward coherence for every X with |X| <= max_x.
Report validate_matrix(const CoveringMatrix& m, unsigned max_x);

/// Checks max c on [A]^2 <= i, after checking A subset D(i, beta) of the
/// derived matrix and subadditivity of c.
Report cover_bound_check(const Coloring& c, Mask a, unsigned i, unsigned beta);

/// max c on [A]^2 == L - 1. Throws DomainError when |A| < 2.
bool check_unbounded(const Coloring& c, Mask a);

struct CpResult {
  std::optional<Mask> witness;
  bool exhaustive = true;
  /// The top point N-1 is exempt from its own covering requirement.
  bool top_boundary = true;
};

/// A subset A with |A| >= min_frac * N all of whose subsets of size <= max_x
/// are covered by a single D(i, beta). Exhaustive for N <= 16, greedy above.
CpResult cp_search(const CoveringMatrix& m, double min_frac, unsigned max_x);

/// Every coloring with n points and l colors, in lexicographic order of the
/// upper triangle.
void for_each_coloring(unsigned n, unsigned l, const std::function<void(const Coloring&)>& fn);

/// Every (tree, path) pair with at most max_levels levels of width at most
/// max_width and path width at most max_l, up to the column relations the
/// extracted coloring depends on: one representative path per distinct
/// tuple of column relations per tree.
struct CorpusStats {
  std::size_t trees = 0;
  std::size_t paths = 0;
  std::size_t ascent_paths = 0;
};
CorpusStats for_each_ascent_tree(unsigned max_levels, unsigned max_width, unsigned max_l,
                                 const std::function<void(const FiniteTree&, const FinitePath&)>& fn);

struct LabResult {
  CorpusStats corpus;
  std::size_t colorings = 0;
  std::size_t subadditive = 0;
  Report report;
};

/// Subadditivity of the coloring of every corpus (tree, path) pair, then
/// validate_matrix and cover_bound_check over every (A, i, beta) with
/// A subset D(i, beta), for every subadditive coloring with n <= max_n
/// points and at most max_l colors.
LabResult coloring_lab(unsigned max_levels, unsigned max_width, unsigned max_l, unsigned max_n);

/// Seeded random subadditive-or-not colorings for larger N.
Coloring random_coloring(unsigned n, unsigned l, std::uint64_t seed);

/// Rows "beta: c(0,beta) ... c(beta-1,beta)"; an optional "L: n" line sets
/// the range, otherwise L = max value + 1.
Coloring parse_coloring(const std::string& text);
std::string format_coloring(const Coloring& c);
std::string format_mask(Mask m);

}  // namespace ordlab
