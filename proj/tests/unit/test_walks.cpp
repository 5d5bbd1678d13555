#include "doctest.h"
#include "ordlab/walks.hpp"
#include "support.hpp"

using namespace ordlab;
using ordlab::testing::O;
using ordlab::testing::S;

namespace {

const UniverseParams P = UniverseParams::defaults();

std::vector<Ordinal> ords(std::initializer_list<const char*> xs) {
  std::vector<Ordinal> out;
  for (const char* x : xs) out.push_back(O(x));
  return out;
}

}  // namespace

TEST_CASE("walks along the ladder") {
  const IndexedSeq s = gen_ladder(P);
  const WalkResult a = walk(s, O("w*2"), O("w^2"), 0);
  CHECK(a.steps == std::vector<WalkStep>{{O("w^2"), 0}});
  CHECK(a.projection == std::vector<OrdSet>{S("{w}")});
  CHECK(a.trace == ords({"1"}));

  const WalkResult b = walk(s, O("w*2+3"), O("w^2"), 0);
  CHECK(b.steps == std::vector<WalkStep>{{O("w^2"), 0}, {O("w*3"), 0}});
  CHECK(b.projection == std::vector<OrdSet>{S("{w, w*2}"), S("{w*2+1, w*2+2}")});
  CHECK(b.trace == ords({"2", "2"}));

  CHECK(walk(s, O("w^2"), O("w^2"), 0).length() == 0);
  // Indices below i(beta) are not admissible.
  const IndexedSeq tl = transform_square_to_indexed(gen_limits(P), P);
  REQUIRE(tl.i_of(O("w^3")) == 1);
  CHECK_THROWS_AS(walk(tl, O("w"), O("w^3"), 0), DomainError);
  CHECK_THROWS_AS(walk(s, O("w^2"), O("w"), 0), DomainError);
}

TEST_CASE("walk invariants") {
  for (const IndexedSeq& s : {gen_limits(P), transform_square_to_indexed(gen_ladder(P), P)}) {
    for (std::size_t x = 0; x < P.probe.size(); x += 5)
      for (std::size_t y = x; y < P.probe.size(); y += 3) {
        const Ordinal& alpha = P.probe[x];
        const Ordinal& beta = P.probe[y];
        if (!(alpha < beta)) continue;
        const WalkResult r = walk(s, alpha, beta, s.i_of(beta));
        REQUIRE(r.length() > 0);
        CHECK(r.steps.front().beta == beta);
        for (std::size_t m = 0; m < r.length(); ++m) {
          CHECK(alpha < r.steps[m].beta);
          if (m + 1 < r.length()) CHECK(r.steps[m + 1].beta < r.steps[m].beta);
          CHECK(r.trace[m] == r.projection[m].otp());
        }
        const WalkStep& last = r.steps.back();
        CHECK(s.club(last.beta, last.index).contains(alpha));
        CHECK(walk(s, alpha, beta, s.i_of(beta)) == r);
      }
  }
}

TEST_CASE("Kleene-Brouwer order") {
  CHECK(kb_less(ords({"1"}), ords({"2", "2"})));
  CHECK(kb_less(ords({"2", "2", "0"}), ords({"2", "2"})));
  CHECK_FALSE(kb_less(ords({"2", "2"}), ords({"2", "2"})));
  CHECK_FALSE(kb_less(ords({"2", "2"}), ords({"2", "2", "0"})));
  CHECK(kb_less(ords({"w", "5"}), ords({"w+1"})));
}

TEST_CASE("lemma checkers on small probes") {
  const std::vector<Ordinal> probe = ords({"w", "w*2", "w*2+3", "w^2", "w^2+w", "w^2*2", "w^3", "w^3+w^2"});
  const std::vector<unsigned> idx = all_indices(P);
  for (const IndexedSeq& s : {gen_ladder(P), gen_limits(P), transform_square_to_indexed(gen_limits(P), P)}) {
    CHECK(check_lemma1(s, probe, idx).ok());
    CHECK(check_lemma2(s, probe, idx).ok());
  }
  CHECK(check_lemma1(gen_ladder(P), {}, idx).checked == 0);
  // The pair from the walk examples.
  const IndexedSeq s = gen_ladder(P);
  CHECK(kb_less(walk(s, O("w*2"), O("w^2"), 0).trace, walk(s, O("w*2+3"), O("w^2"), 0).trace));
}

TEST_CASE("projection restriction matches direct walks") {
  const IndexedSeq s = transform_square_to_indexed(gen_ladder(P), P);
  const Ordinal beta = O("w^3+w^2");
  for (const Ordinal& upper : ords({"w^3", "w^2*2+w", "w^2"}))
    for (const Ordinal& lower : ords({"w*2", "w^2", "w+5"})) {
      if (lower > upper) continue;
      for (unsigned i = s.i_of(beta); i < P.index_bound; ++i)
        CHECK(restrict_projection(s, walk(s, upper, beta, i).projection, upper, lower) ==
              walk(s, lower, beta, i).projection);
    }
}

TEST_CASE("size lemma family") {
  const IndexedSeq s = gen_ladder(P);
  const std::vector<unsigned> idx = all_indices(P);
  const DAlpha d = collect_D_alpha(s, O("w"), ords({"w", "w*2", "w^2"}), idx);
  CHECK(d.report.ok());
  // {} from w*2 and w^2, {n : n >= 1} from w itself.
  CHECK(d.members.size() == 2);
  const DAlpha z = collect_D_alpha(s, Ordinal(), P.probe, idx);
  CHECK(z.members == std::vector<OrdSet>{OrdSet()});
  const DAlpha big = collect_D_alpha(gen_limits(P), O("w^2*2"), P.probe, idx);
  CHECK(big.report.ok());
  CHECK(big.members.size() <= P.probe.size() * idx.size());
  CHECK(size_witness(gen_limits(P), O("w^3"), gen_limits(P).club(O("w^3"), 0)) == "C_(w^3,0)");
  CHECK(size_witness(s, O("w^2"), S("{3, 8}")) == "finite");
}
