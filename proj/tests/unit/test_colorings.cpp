#include <bit>
#include <cmath>

#include "doctest.h"
#include "ordlab/colorings.hpp"
#include "ordlab/ordinal.hpp"

using namespace ordlab;

namespace {

// c(0,1)=1, c(0,2)=1, c(1,2)=0.
Coloring example() {
  Coloring c(3, 2);
  c.set(0, 1, 1);
  c.set(0, 2, 1);
  c.set(1, 2, 0);
  return c;
}

bool has(Mask m, unsigned x) { return (m >> x) & 1U; }

// Brute-force CP oracle with the top-boundary convention: X is covered by
// D(i, beta) when X is inside it, or when beta is the top point and X minus
// the top point is inside it.
bool covered(const CoveringMatrix& m, Mask x) {
  const unsigned top = m.n - 1;
  for (unsigned b = 0; b < m.n; ++b)
    for (unsigned i = 0; i < m.l; ++i) {
      Mask need = b == top ? x & ~(Mask{1} << top) : x;
      if ((need & ~m.at(i, b)) == 0) return true;
    }
  return false;
}

bool cp_holds(const CoveringMatrix& m, Mask a, unsigned max_x) {
  for (Mask x = a;; x = (x - 1) & a) {
    if (x && std::popcount(x) <= static_cast<int>(max_x) && !covered(m, x)) return false;
    if (x == 0) break;
  }
  return true;
}

}  // namespace

TEST_CASE("coloring from an ascent path") {
  // Three levels of width 2; node v of each level sits above node v.
  FiniteTree t{{2, 2, 2}, {{}, {0, 1}, {0, 1}}};
  FinitePath p{{0, 1}, {0, 1}, {1, 1}};
  const Coloring c = coloring_from_ascent(t, p);
  CHECK(c.at(0, 1) == 0);
  CHECK(c.at(1, 2) == 1);
  CHECK(c.at(0, 2) == 1);

  FiniteTree line{{1, 1, 1}, {{}, {0}, {0}}};
  const Coloring z = coloring_from_ascent(line, {{0, 0}, {0, 0}, {0, 0}});
  for (unsigned v : z.values()) CHECK(v == 0);

  CHECK_THROWS_AS(coloring_from_ascent(t, {{0, 0}, {1, 1}, {1, 1}}), DomainError);
}

TEST_CASE("subadditivity") {
  CHECK(check_subadditive(example()).ok());
  const Report r = check_subadditive(Coloring(3, 2, {0, 1, 0}));
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().check == "subadditive-a");
  CHECK(check_subadditive(Coloring(5, 3, std::vector<unsigned>(10, 2))).ok());
}

TEST_CASE("matrices") {
  const CoveringMatrix m = matrix_from_coloring(example());
  CHECK(m.at(0, 2) == 0b10);
  CHECK(m.at(1, 2) == 0b11);
  CHECK(validate_matrix(m, 3).ok());

  const CoveringMatrix zero = matrix_from_coloring(Coloring(4, 3));
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned b = 0; b < 4; ++b) CHECK(zero.at(i, b) == (Mask{1} << b) - 1);
  CHECK(validate_matrix(zero, 4).ok());

  CoveringMatrix gap{3, 2, {0, 0b1, 0b10, 0, 0b1, 0b10}};
  const Report r = validate_matrix(gap, 2);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().check == "clause1");

  // D(L-1, gamma) is all of gamma, so clause 3 always has a witness and
  // even non-subadditive colorings give valid finite matrices.
  for (unsigned l : {2U, 3U})
    for_each_coloring(4, l, [&](const Coloring& c) { CHECK(validate_matrix(matrix_from_coloring(c), 4).ok()); });
}

TEST_CASE("cover bound and unboundedness") {
  const Coloring c = example();
  CHECK(cover_bound_check(c, 0b011, 1, 2).ok());
  CHECK(cover_bound_check(c, 0b010, 0, 2).ok());
  CHECK_FALSE(cover_bound_check(c, 0b011, 0, 2).ok());
  CHECK(check_unbounded(c, 0b111));
  CHECK_FALSE(check_unbounded(Coloring(3, 2), 0b111));
  CHECK(check_unbounded(c, 0b011));
  CHECK_THROWS_AS(check_unbounded(c, 0b001), DomainError);
}

TEST_CASE("CP search agrees with brute force") {
  const CpResult full = cp_search(matrix_from_coloring(Coloring(5, 2)), 1.0, 3);
  REQUIRE(full.witness);
  CHECK(*full.witness == 0b11111);
  CHECK(full.exhaustive);
  CHECK_FALSE(cp_search(matrix_from_coloring(example()), 1.5, 2).witness);

  // Over every subadditive coloring with 4 points and 2 colors: the search
  // returns a largest clean set, and none exists when it reports none.
  for_each_coloring(4, 2, [&](const Coloring& c) {
    if (!check_subadditive(c).ok()) return;
    const CoveringMatrix m = matrix_from_coloring(c);
    const CpResult r = cp_search(m, 0.5, 2);
    int best = -1;
    for (Mask a = 0; a < 16; ++a)
      if (std::popcount(a) >= 2 && cp_holds(m, a, 2)) best = std::max(best, std::popcount(a));
    if (best < 0) {
      CHECK_FALSE(r.witness);
    } else {
      REQUIRE(r.witness);
      CHECK(std::popcount(*r.witness) == best);
      CHECK(cp_holds(m, *r.witness, 2));
    }
  });
}

TEST_CASE("enumeration counts") {
  std::size_t n = 0;
  for_each_coloring(3, 2, [&](const Coloring&) { ++n; });
  CHECK(n == 8);
  // Every extracted coloring of a small corpus is subadditive.
  std::size_t paths = 0;
  const CorpusStats st = for_each_ascent_tree(3, 2, 2, [&](const FiniteTree& t, const FinitePath& p) {
    ++paths;
    CHECK(check_subadditive(coloring_from_ascent(t, p)).ok());
  });
  CHECK(st.ascent_paths == paths);
  CHECK(paths > 0);
}

TEST_CASE("coloring files") {
  const Coloring c = parse_coloring("# example\nL: 2\n1: 1\n2: 1 0\n");
  CHECK(c == example());
  CHECK(parse_coloring(format_coloring(c)) == c);
  CHECK(parse_coloring("1: 0\n2: 2 1\n").l() == 3);
  CHECK_THROWS_AS(parse_coloring("1: 0\n2: x\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring("1: 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring("L: 1\n1: 1\n"), ParseError);
  CHECK(format_mask(0b101) == "{0,2}");
  CHECK(random_coloring(7, 3, 9) == random_coloring(7, 3, 9));
}
