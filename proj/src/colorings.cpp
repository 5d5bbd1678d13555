#include "ordlab/colorings.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ordlab/ordinal.hpp"

namespace ordlab {

namespace {

constexpr unsigned kMaxPoints = 64;
constexpr unsigned kExhaustiveLimit = 16;

Mask bit(unsigned k) { return Mask{1} << k; }
Mask below(unsigned beta) { return beta >= 64 ? ~Mask{0} : bit(beta) - 1; }
bool has(Mask m, unsigned k) { return (m >> k) & 1U; }
unsigned popcount(Mask m) { return static_cast<unsigned>(std::popcount(m)); }

std::string pair_str(unsigned a, unsigned b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string triple_str(unsigned a, unsigned b, unsigned g) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(g) + ")";
}

// Subsets of m with at most k elements, including the empty set.
void for_each_small_subset(Mask m, unsigned k, const std::function<void(Mask)>& fn) {
  std::vector<unsigned> elems;
  for (unsigned x = 0; x < 64; ++x)
    if (has(m, x)) elems.push_back(x);
  std::function<void(std::size_t, Mask, unsigned)> rec = [&](std::size_t from, Mask acc, unsigned size) {
    fn(acc);
    if (size == k) return;
    for (std::size_t j = from; j < elems.size(); ++j) rec(j + 1, acc | bit(elems[j]), size + 1);
  };
  rec(0, 0, 0);
}

}  // namespace

Coloring::Coloring(unsigned n, unsigned l) : Coloring(n, l, std::vector<unsigned>(n < 2 ? 0 : n * (n - 1) / 2, 0)) {}

Coloring::Coloring(unsigned n, unsigned l, std::vector<unsigned> upper) : n_(n), l_(l), table_(std::move(upper)) {
  if (n > kMaxPoints) throw DomainError("coloring domain larger than 64");
  if (l == 0) throw DomainError("coloring needs at least one color");
  if (table_.size() != (n < 2 ? 0 : n * (n - 1) / 2)) throw DomainError("coloring table has the wrong size");
  for (unsigned v : table_)
    if (v >= l) throw DomainError("color " + std::to_string(v) + " out of range " + std::to_string(l));
}

std::size_t Coloring::slot(unsigned a, unsigned b) const {
  if (a >= b || b >= n_) throw DomainError("coloring index " + pair_str(a, b) + " out of range");
  return static_cast<std::size_t>(b) * (b - 1) / 2 + a;
}

unsigned Coloring::at(unsigned a, unsigned b) const { return table_[slot(a, b)]; }

void Coloring::set(unsigned a, unsigned b, unsigned v) {
  if (v >= l_) throw DomainError("color out of range");
  table_[slot(a, b)] = v;
}

bool FiniteTree::less(unsigned a, unsigned u, unsigned b, unsigned v) const {
  if (a >= b) return false;
  for (unsigned k = b; k > a; --k) v = parent[k][v];
  return u == v;
}

Coloring coloring_from_ascent(const FiniteTree& tree, const FinitePath& path) {
  const unsigned n = static_cast<unsigned>(path.size());
  if (n != tree.widths.size()) throw DomainError("path must have one row per tree level");
  const unsigned l = n == 0 ? 1 : static_cast<unsigned>(path.front().size());
  if (l == 0) throw DomainError("path width must be positive");
  for (unsigned a = 0; a < n; ++a) {
    if (path[a].size() != l) throw DomainError("path rows differ in width");
    for (unsigned v : path[a])
      if (v >= tree.widths[a]) throw DomainError("path node outside its level");
  }
  Coloring c(n, l);
  for (unsigned b = 1; b < n; ++b)
    for (unsigned a = 0; a < b; ++a) {
      unsigned eta = l;
      while (eta > 0 && tree.less(a, path[a][eta - 1], b, path[b][eta - 1])) --eta;
      if (eta == l) throw DomainError("not an ascent path: no eta at pair " + pair_str(a, b));
      c.set(a, b, eta);
    }
  return c;
}

Report check_subadditive(const Coloring& c) {
  Report r;
  const unsigned n = c.n();
  for (unsigned g = 2; g < n; ++g)
    for (unsigned b = 1; b < g; ++b)
      for (unsigned a = 0; a < b; ++a) {
        ++r.checked;
        unsigned ab = c.at(a, b), ag = c.at(a, g), bg = c.at(b, g);
        if (ag > std::max(ab, bg))
          r.fail("subadditive-a", triple_str(a, b, g), "c(a,g) <= " + std::to_string(std::max(ab, bg)), std::to_string(ag));
        if (ab > std::max(ag, bg))
          r.fail("subadditive-b", triple_str(a, b, g), "c(a,b) <= " + std::to_string(std::max(ag, bg)), std::to_string(ab));
      }
  return r;
}

CoveringMatrix matrix_from_coloring(const Coloring& c) {
  CoveringMatrix m{c.n(), c.l(), std::vector<Mask>(static_cast<std::size_t>(c.n()) * c.l(), 0)};
  for (unsigned i = 0; i < c.l(); ++i)
    for (unsigned b = 0; b < c.n(); ++b) {
      Mask d = 0;
      for (unsigned a = 0; a < b; ++a)
        if (c.at(a, b) <= i) d |= bit(a);
      m.d[i * m.n + b] = d;
    }
  return m;
}

Report validate_matrix(const CoveringMatrix& m, unsigned max_x) {
  Report r;
  if (max_x > m.n) throw DomainError("maxX exceeds N");
  for (unsigned b = 0; b < m.n; ++b) {
    Mask all = 0;
    for (unsigned i = 0; i < m.l; ++i) {
      ++r.checked;
      if (m.at(i, b) & ~below(b))
        r.fail("subset", "D(" + std::to_string(i) + "," + std::to_string(b) + ")", "subset of beta", format_mask(m.at(i, b)));
      all |= m.at(i, b);
      if (i + 1 < m.l && (m.at(i, b) & ~m.at(i + 1, b)))
        r.fail("clause2", "D(" + std::to_string(i) + "," + std::to_string(b) + ")", "subset of D(i+1,beta)",
               format_mask(m.at(i, b) & ~m.at(i + 1, b)));
    }
    if (all != below(b)) r.fail("clause1", "beta=" + std::to_string(b), format_mask(below(b)), format_mask(all));
  }
  // Clause 3 and coherence ask for some j with D(i,beta) cap X subset D(j,g);
  // by clause 2 the largest j is the best candidate, but monotonicity is
  // itself under test, so every j is tried.
  auto some_j = [&](Mask part, unsigned g) {
    for (unsigned j = 0; j < m.l; ++j)
      if ((part & ~m.at(j, g)) == 0) return true;
    return false;
  };
  for (unsigned g = 1; g < m.n; ++g)
    for (unsigned b = 0; b < g; ++b)
      for (unsigned i = 0; i < m.l; ++i) {
        ++r.checked;
        if (!some_j(m.at(i, b), g))
          r.fail("clause3", "i=" + std::to_string(i) + " beta=" + std::to_string(b) + " gamma=" + std::to_string(g),
                 "D(i,beta) subset some D(j,gamma)", "none");
      }
  for_each_small_subset(below(m.n), max_x, [&](Mask x) {
    ++r.checked;
    for (unsigned g = 0; g < m.n; ++g) {
      bool good = true;
      for (unsigned b = 0; b < m.n && good; ++b)
        for (unsigned i = 0; i < m.l && good; ++i) good = some_j(m.at(i, b) & x, g);
      if (good) return;
    }
    r.fail("coherence", format_mask(x), "some gamma_X", "none");
  });
  return r;
}

Report cover_bound_check(const Coloring& c, Mask a, unsigned i, unsigned beta) {
  Report r;
  if (beta >= c.n() || i >= c.l()) {
    r.fail("precondition", "i=" + std::to_string(i) + " beta=" + std::to_string(beta), "in range", "out of range");
    return r;
  }
  CoveringMatrix m = matrix_from_coloring(c);
  if (a & ~m.at(i, beta)) {
    r.fail("precondition", format_mask(a), "A subset D(i,beta) = " + format_mask(m.at(i, beta)), "not a subset");
    return r;
  }
  if (!check_subadditive(c).ok()) {
    r.fail("precondition", "c", "subadditive", "not subadditive");
    return r;
  }
  for (unsigned y = 1; y < c.n(); ++y)
    for (unsigned x = 0; x < y; ++x) {
      if (!has(a, x) || !has(a, y)) continue;
      ++r.checked;
      if (c.at(x, y) > i) r.fail("bound", pair_str(x, y), "c <= " + std::to_string(i), std::to_string(c.at(x, y)));
    }
  return r;
}

bool check_unbounded(const Coloring& c, Mask a) {
  if (popcount(a) < 2) throw DomainError("check_unbounded needs |A| >= 2");
  for (unsigned y = 1; y < c.n(); ++y)
    for (unsigned x = 0; x < y; ++x)
      if (has(a, x) && has(a, y) && c.at(x, y) == c.l() - 1) return true;
  return false;
}

CpResult cp_search(const CoveringMatrix& m, double min_frac, unsigned max_x) {
  CpResult out;
  out.exhaustive = m.n <= kExhaustiveLimit;
  if (min_frac > 1.0 || m.n == 0) return out;
  const unsigned need = static_cast<unsigned>(std::ceil(std::max(0.0, min_frac) * m.n - 1e-9));
  const Mask full = below(m.n);
  const unsigned top = m.n - 1;
  auto covered = [&](Mask x) {
    Mask rest = x & ~bit(top);
    for (unsigned b = 0; b < m.n; ++b)
      for (unsigned i = 0; i < m.l; ++i) {
        if ((x & ~m.at(i, b)) == 0) return true;
        if (b == top && (rest & ~m.at(i, b)) == 0) return true;
      }
    return false;
  };
  std::vector<Mask> bad;
  for_each_small_subset(full, max_x, [&](Mask x) {
    if (!covered(x)) bad.push_back(x);
  });
  auto clean = [&](Mask a) {
    for (Mask x : bad)
      if ((x & ~a) == 0) return false;
    return true;
  };
  if (out.exhaustive) {
    for (unsigned size = m.n; size >= need && size <= m.n; --size) {
      for (Mask a = 0; a <= full; ++a)
        if (popcount(a) == size && clean(a)) {
          out.witness = a;
          return out;
        }
      if (size == 0) break;
    }
    return out;
  }
  // Greedy: drop the point lying in the most uncovered subsets until none remain.
  Mask a = full;
  for (;;) {
    std::vector<unsigned> hits(m.n, 0);
    bool any = false;
    for (Mask x : bad)
      if ((x & ~a) == 0) {
        any = true;
        for (unsigned k = 0; k < m.n; ++k)
          if (has(x, k)) ++hits[k];
      }
    if (!any) break;
    unsigned worst = static_cast<unsigned>(std::max_element(hits.begin(), hits.end()) - hits.begin());
    a &= ~bit(worst);
  }
  if (popcount(a) >= need) out.witness = a;
  return out;
}

void for_each_coloring(unsigned n, unsigned l, const std::function<void(const Coloring&)>& fn) {
  const std::size_t slots = n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<unsigned> vals(slots, 0);
  for (;;) {
    fn(Coloring(n, l, vals));
    std::size_t k = 0;
    while (k < slots && ++vals[k] == l) vals[k++] = 0;
    if (k == slots) return;
  }
}

namespace {

// Pairs (a<b) of levels on which a column of nodes is increasing in the tree.
using Relation = std::uint32_t;

Relation column_relation(const FiniteTree& t, const std::vector<unsigned>& col) {
  Relation rel = 0;
  unsigned k = 0;
  for (unsigned b = 1; b < col.size(); ++b)
    for (unsigned a = 0; a < b; ++a, ++k)
      if (t.less(a, col[a], b, col[b])) rel |= Relation{1} << k;
  return rel;
}

bool next_tuple(std::vector<unsigned>& v, const std::vector<unsigned>& radix) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (++v[k] < radix[k]) return true;
    v[k] = 0;
  }
  return false;
}

}  // namespace

CorpusStats for_each_ascent_tree(unsigned max_levels, unsigned max_width, unsigned max_l,
                                 const std::function<void(const FiniteTree&, const FinitePath&)>& fn) {
  CorpusStats stats;
  if (max_levels > 7) throw DomainError("tree corpus limited to 7 levels");
  // Trees with the same set of realizable column relations yield the same
  // colorings, so each such set is expanded once, with its first tree.
  std::set<std::pair<unsigned, std::vector<Relation>>> seen;
  for (unsigned h = 2; h <= max_levels; ++h) {
    const unsigned all_pairs = h * (h - 1) / 2;
    const Relation chain = all_pairs == 32 ? ~Relation{0} : (Relation{1} << all_pairs) - 1;
    std::vector<unsigned> widths(h, 1);
    do {
      std::vector<unsigned> radix;
      for (unsigned k = 1; k < h; ++k)
        for (unsigned v = 0; v < widths[k]; ++v) radix.push_back(widths[k - 1]);
      std::vector<unsigned> choice(radix.size(), 0);
      do {
        FiniteTree t{widths, std::vector<std::vector<unsigned>>(h)};
        std::size_t pos = 0;
        for (unsigned k = 1; k < h; ++k)
          for (unsigned v = 0; v < widths[k]; ++v) t.parent[k].push_back(choice[pos++]);
        ++stats.trees;

        std::map<Relation, std::vector<unsigned>> reps;
        std::vector<unsigned> col(h, 0);
        do {
          reps.emplace(column_relation(t, col), col);
        } while (next_tuple(col, widths));
        std::vector<Relation> rels;
        for (const auto& [rel, _] : reps) rels.push_back(rel);
        if (!seen.emplace(h, rels).second) continue;

        for (unsigned l = 1; l <= max_l; ++l) {
          std::vector<unsigned> pick(l, 0);
          std::vector<unsigned> pick_radix(l, static_cast<unsigned>(rels.size()));
          do {
            ++stats.paths;
            if (rels[pick[l - 1]] != chain) continue;
            ++stats.ascent_paths;
            FinitePath path(h, std::vector<unsigned>(l));
            for (unsigned xi = 0; xi < l; ++xi) {
              const auto& c = reps[rels[pick[xi]]];
              for (unsigned a = 0; a < h; ++a) path[a][xi] = c[a];
            }
            fn(t, path);
          } while (next_tuple(pick, pick_radix));
        }
      } while (next_tuple(choice, radix));
    } while ([&] {
      for (auto& w : widths) {
        if (++w <= max_width) return true;
        w = 1;
      }
      return false;
    }());
  }
  return stats;
}

LabResult coloring_lab(unsigned max_levels, unsigned max_width, unsigned max_l, unsigned max_n) {
  LabResult out;
  out.corpus = for_each_ascent_tree(max_levels, max_width, max_l, [&](const FiniteTree& t, const FinitePath& p) {
    Report r = check_subadditive(coloring_from_ascent(t, p));
    out.report.merge(r);
  });
  for (unsigned n = 1; n <= max_n; ++n)
    for (unsigned l = 1; l <= max_l; ++l)
      for_each_coloring(n, l, [&](const Coloring& c) {
        ++out.colorings;
        if (!check_subadditive(c).ok()) return;
        ++out.subadditive;
        CoveringMatrix m = matrix_from_coloring(c);
        out.report.merge(validate_matrix(m, std::min(l, n)));
        for (unsigned i = 0; i < l; ++i)
          for (unsigned b = 0; b < n; ++b) {
            const Mask d = m.at(i, b);
            // Every submask of d, including the empty one.
            for (Mask a = d;; a = (a - 1) & d) {
              out.report.merge(cover_bound_check(c, a, i, b));
              if (a == 0) break;
            }
          }
      });
  return out;
}

Coloring random_coloring(unsigned n, unsigned l, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> dist(0, l - 1);
  Coloring c(n, l);
  for (unsigned b = 1; b < n; ++b)
    for (unsigned a = 0; a < b; ++a) c.set(a, b, dist(rng));
  return c;
}

Coloring parse_coloring(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::map<unsigned, std::vector<unsigned>> rows;
  std::optional<unsigned> l;
  unsigned line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto colon = line.find(':');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (colon == std::string::npos) throw ParseError("coloring line " + std::to_string(line_no) + ": missing ':'");
    std::string head = line.substr(0, colon);
    head.erase(0, head.find_first_not_of(" \t"));
    head.erase(head.find_last_not_of(" \t") + 1);
    std::istringstream body(line.substr(colon + 1));
    if (head == "L") {
      unsigned v;
      if (!(body >> v)) throw ParseError("coloring line " + std::to_string(line_no) + ": bad L");
      l = v;
      continue;
    }
    unsigned beta;
    try {
      std::size_t used = 0;
      beta = static_cast<unsigned>(std::stoul(head, &used));
      if (used != head.size()) throw std::invalid_argument(head);
    } catch (const std::exception&) {
      throw ParseError("coloring line " + std::to_string(line_no) + ": bad row label '" + head + "'");
    }
    std::vector<unsigned> vals;
    long v;
    while (body >> v) {
      if (v < 0) throw ParseError("coloring line " + std::to_string(line_no) + ": negative color");
      vals.push_back(static_cast<unsigned>(v));
    }
    if (!body.eof()) throw ParseError("coloring line " + std::to_string(line_no) + ": bad value");
    if (vals.size() != beta)
      throw ParseError("coloring row " + std::to_string(beta) + " needs " + std::to_string(beta) + " values");
    if (!rows.emplace(beta, std::move(vals)).second) throw ParseError("duplicate coloring row " + std::to_string(beta));
  }
  unsigned n = rows.empty() ? 0 : rows.rbegin()->first + 1;
  for (unsigned b = 1; b < n; ++b)
    if (!rows.count(b)) throw ParseError("coloring row " + std::to_string(b) + " missing");
  unsigned top = 0;
  std::vector<unsigned> upper;
  for (unsigned b = 1; b < n; ++b)
    for (unsigned v : rows[b]) {
      upper.push_back(v);
      top = std::max(top, v);
    }
  unsigned range = l.value_or(top + 1);
  if (top >= range) throw ParseError("color " + std::to_string(top) + " not below L = " + std::to_string(range));
  return Coloring(n, range, std::move(upper));
}

std::string format_coloring(const Coloring& c) {
  std::string s = "L: " + std::to_string(c.l()) + "\n";
  for (unsigned b = 1; b < c.n(); ++b) {
    s += std::to_string(b) + ":";
    for (unsigned a = 0; a < b; ++a) s += " " + std::to_string(c.at(a, b));
    s += "\n";
  }
  return s;
}

std::string format_mask(Mask m) {
  std::string s = "{";
  bool first = true;
  for (unsigned k = 0; k < 64; ++k)
    if (has(m, k)) {
      s += (first ? "" : ",") + std::to_string(k);
      first = false;
    }
  return s + "}";
}

}  // namespace ordlab
