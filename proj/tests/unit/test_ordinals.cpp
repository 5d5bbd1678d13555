#include <random>

#include "doctest.h"
#include "ordlab/ordinal.hpp"
#include "support.hpp"

using namespace ordlab;
using ordlab::testing::O;

TEST_CASE("parse and format") {
  CHECK(O("0").is_zero());
  CHECK(O("w^2*2+w+1") == Ordinal({{2, 2}, {1, 1}, {0, 1}}));
  CHECK(format_ordinal(O("w^3*2+w+1")) == "w^3*2+w+1");
  CHECK(format_ordinal(O(" w * 3 + 2 ")) == "w*3+2");
  CHECK_THROWS_AS(O("w^4"), ParseError);
  CHECK_THROWS_AS(O("w+w^2"), ParseError);
  CHECK_THROWS_AS(O("w+"), ParseError);
  CHECK_THROWS_AS(O("3+w"), ParseError);
}

TEST_CASE("comparison") {
  CHECK(ord_cmp(O("w"), O("w")) == Order::equal);
  CHECK(ord_cmp(O("w*2+3"), O("w^2")) == Order::less);
  CHECK(ord_cmp(O("w^2+1"), O("w^2")) == Order::greater);
}

TEST_CASE("addition and left subtraction") {
  CHECK(ord_add(O("w+3"), O("w")) == O("w*2"));
  CHECK(ord_add(O("w^2+5"), Ordinal()) == O("w^2+5"));
  CHECK(ord_add(Ordinal(3), O("w")) == O("w"));
  CHECK(ord_sub(O("w"), O("w*2")) == O("w"));
  CHECK(ord_sub(O("w^2+w"), O("w^2+w")).is_zero());
  CHECK_THROWS_AS(ord_sub(O("w^2"), O("w")), DomainError);
  CHECK_THROWS_AS(ord_add_bounded(O("w^3"), O("w^3*5"), 3), DomainError);
}

TEST_CASE("fundamental steps") {
  CHECK(fundamental_step(O("w"), 3) == Ordinal(3));
  CHECK(fundamental_step(O("w^2"), 2) == O("w*2"));
  CHECK(fundamental_step(O("w*2"), 5) == O("w+5"));
  CHECK_THROWS_AS(fundamental_step(O("w+1"), 1), DomainError);
  CHECK_THROWS_AS(fundamental_step(Ordinal(), 1), DomainError);
}

namespace {

Ordinal random_ord(std::mt19937_64& rng) {
  std::vector<Term> t;
  for (unsigned e = 4; e-- > 0;)
    if (rng() % 2) t.push_back({e, rng() % 5 + 1});
  return Ordinal(t);
}

}  // namespace

TEST_CASE("properties over a random corpus") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 400; ++k) {
    const Ordinal a = random_ord(rng), b = random_ord(rng), c = random_ord(rng);
    CHECK(parse_ordinal(format_ordinal(a)) == a);
    CHECK(ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c)));
    const Ordinal& lo = std::min(a, b);
    const Ordinal& hi = std::max(a, b);
    CHECK(ord_add(lo, ord_sub(lo, hi)) == hi);
    // Strict monotonicity in the right argument.
    if (b < c) CHECK(ord_add(a, b) < ord_add(a, c));
    if (a.is_limit())
      for (std::uint64_t n = 1; n < 6; ++n) {
        CHECK(fundamental_step(a, n) < fundamental_step(a, n + 1));
        CHECK(fundamental_step(a, n + 1) < a);
      }
  }
}
