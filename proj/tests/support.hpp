#pragma once

// Test-side generators and an enumeration oracle for sets below w^2*4.
// The oracle never calls OrdSet: it evaluates an expression tree by the
// defining formulas on triples (a, b, c) = w^2*a + w*b + c.

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string_view>
#include <variant>
#include <vector>

#include "ordlab/ordset.hpp"

namespace ordlab::testing {

inline Ordinal O(std::string_view text) { return parse_ordinal(text); }
inline OrdSet S(std::string_view text) { return parse_set(text); }

struct Tri {
  std::uint64_t a = 0, b = 0, c = 0;

  friend auto operator<=>(const Tri&, const Tri&) = default;

  Ordinal ord() const {
    std::vector<Term> t;
    if (a) t.push_back({2, a});
    if (b) t.push_back({1, b});
    if (c) t.push_back({0, c});
    return Ordinal(t);
  }
  bool zero() const { return a == 0 && b == 0 && c == 0; }
  // Exponent of the least nonzero coordinate; -1 for zero.
  int valuation() const { return c ? 0 : b ? 1 : a ? 2 : -1; }
};

inline Tri tri_add(const Tri& p, const Tri& q) {
  if (q.a) return {p.a + q.a, q.b, q.c};
  if (q.b) return {p.a, p.b + q.b, q.c};
  return {p.a, p.b, p.c + q.c};
}

// The d with p + d == y; requires p <= y.
inline Tri tri_sub(const Tri& p, const Tri& y) {
  if (p.a < y.a) return {y.a - p.a, y.b, y.c};
  if (p.b < y.b) return {0, y.b - p.b, y.c};
  return {0, 0, y.c - p.c};
}

// w^e * x as a triple; x below w^(3 - e).
inline Tri tri_scale(unsigned e, const Tri& x) {
  if (e == 0) return x;
  if (e == 1) return {x.b, x.c, 0};
  return {x.c, 0, 0};
}

// The x with w^e * x == d, when d has valuation >= e.
inline Tri tri_unscale(unsigned e, const Tri& d) {
  if (e == 0) return d;
  if (e == 1) return {0, d.a, d.b};
  return {0, 0, d.a};
}

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Point { Tri x; };
struct Level { unsigned e; Tri lo, hi; };
struct Valuation { unsigned e; Tri lo, hi; };
struct Range { Tri lo, hi; };
struct Scaled { Tri prefix; unsigned e; Tri lo, hi; Shape shape; };
struct Combine { char op; ExprPtr l, r; };

struct Expr {
  std::variant<Point, Level, Valuation, Range, Scaled, Combine> node;
};

inline bool member(const Expr& ex, const Tri& y) {
  struct Visit {
    const Tri& y;
    bool operator()(const Point& p) const { return y == p.x; }
    bool operator()(const Level& l) const {
      return !y.zero() && y.valuation() == static_cast<int>(l.e) && l.lo <= y && y < l.hi;
    }
    bool operator()(const Valuation& v) const {
      return !y.zero() && y.valuation() >= static_cast<int>(v.e) && v.lo <= y && y < v.hi;
    }
    bool operator()(const Range& r) const { return r.lo <= y && y < r.hi; }
    bool operator()(const Scaled& s) const {
      if (y < s.prefix) return false;
      const Tri d = tri_sub(s.prefix, y);
      if (d.zero() || d.valuation() < static_cast<int>(s.e)) return false;
      const Tri x = tri_unscale(s.e, d);
      if (x < s.lo || !(x < s.hi)) return false;
      if (s.shape == Shape::succ) return x.valuation() == 0;
      if (s.shape == Shape::lim) return x.valuation() > 0;
      return true;
    }
    bool operator()(const Combine& c) const {
      const bool l = member(*c.l, y), r = member(*c.r, y);
      return c.op == '|' ? (l || r) : c.op == '&' ? (l && r) : (l && !r);
    }
  };
  return std::visit(Visit{y}, ex.node);
}

// Coordinates b, c range over [0, kGrid); from kTail on, every generated set
// is constant in each coordinate (all generator constants stay below 16).
inline constexpr std::uint64_t kGrid = 24;
inline constexpr std::uint64_t kTail = 20;
inline constexpr std::uint64_t kGroups = 4;

// Membership table of one set on the grid below w^2*4.
class GridSet {
 public:
  explicit GridSet(const Expr& ex) {
    for (std::uint64_t a = 0; a < kGroups; ++a)
      for (std::uint64_t b = 0; b < kGrid; ++b)
        for (std::uint64_t c = 0; c < kGrid; ++c) bits_[idx(a, b, c)] = member(ex, {a, b, c});
  }

  bool at(const Tri& t) const { return bits_[idx(t.a, t.b, t.c)]; }

  // False when the eventual constancy the oracle relies on fails.
  bool tail_constant() const {
    for (std::uint64_t a = 0; a < kGroups; ++a)
      for (std::uint64_t b = 0; b < kGrid; ++b)
        for (std::uint64_t c = 0; c < kGrid; ++c) {
          if (c >= kTail && at({a, b, c}) != at({a, b, kTail})) return false;
          if (b >= kTail && at({a, b, c}) != at({a, kTail, c})) return false;
        }
    return true;
  }

  // Order type of the set below bound (bound.a == kGroups means no bound).
  Ordinal otp_below(const Tri& bound) const {
    Ordinal total;
    const Ordinal w = literals::omega;
    for (std::uint64_t a = 0; a < kGroups && a <= bound.a; ++a) {
      const bool full_group = a < bound.a;
      const std::uint64_t rows = full_group ? kTail : bound.b + 1;
      for (std::uint64_t b = 0; b < rows; ++b) {
        const bool full_row = full_group || b < bound.b;
        total = ord_add(total, full_row ? row_otp(a, b) : Ordinal(count(a, b, bound.c)));
      }
      if (!full_group) continue;
      // Rows b >= kTail repeat row kTail infinitely often.
      const Ordinal tail_row = row_otp(a, kTail);
      if (tail_row == w) total = ord_add(total, Ordinal::omega_pow(2));
      else if (!tail_row.is_zero()) total = ord_add(total, w);
    }
    return total;
  }

  // sup(S cap y) == y for y > 0.
  bool sup_reaches(const Tri& y) const {
    if (y.zero() || y.c) return false;
    if (y.b) return at({y.a, y.b - 1, kTail});
    return count(y.a - 1, kTail, kGrid) > 0;
  }

  bool acc(const Tri& y) const { return at(y) && sup_reaches(y); }

  // Elements at positions 1..sigma; sigma 0 stands for omega.
  bool succ_sigma(const Tri& y, std::uint64_t sigma) const {
    if (!at(y)) return false;
    const Ordinal pos = otp_below(y);
    if (!pos.is_finite() || pos.is_zero()) return false;
    return sigma == 0 || pos.finite_part() <= sigma;
  }

 private:
  static std::size_t idx(std::uint64_t a, std::uint64_t b, std::uint64_t c) { return (a * kGrid + b) * kGrid + c; }

  std::uint64_t count(std::uint64_t a, std::uint64_t b, std::uint64_t below) const {
    std::uint64_t n = 0;
    for (std::uint64_t c = 0; c < below && c < kGrid; ++c) n += at({a, b, c});
    return n;
  }

  Ordinal row_otp(std::uint64_t a, std::uint64_t b) const {
    if (at({a, b, kTail})) return literals::omega;
    return Ordinal(count(a, b, kTail));
  }

  std::vector<bool> bits_ = std::vector<bool>(kGroups * kGrid * kGrid);
};

inline const Tri kCap{kGroups, 0, 0};

// A random expression together with the OrdSet built from the public
// constructors and algebra.
struct GenSet {
  ExprPtr expr;
  OrdSet set;
};

class SetGen {
 public:
  explicit SetGen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  Tri tri(std::uint64_t max_coeff = 6) {
    return {below(kGroups), below(3) ? below(max_coeff + 1) : 0, below(3) ? below(max_coeff + 1) : 0};
  }

  GenSet atom() {
    auto make = [](auto node, OrdSet s) { return GenSet{std::make_shared<const Expr>(Expr{node}), std::move(s)}; };
    auto bounds = [&] {
      Tri lo = tri(), hi = below(4) == 0 ? kCap : tri();
      if (hi < lo) std::swap(lo, hi);
      return std::pair{lo, hi};
    };
    switch (below(5)) {
      case 0: {
        Tri x = tri();
        return make(Point{x}, OrdSet::singleton(x.ord()));
      }
      case 1: {
        auto [lo, hi] = bounds();
        unsigned e = static_cast<unsigned>(below(3));
        return make(Level{e, lo, hi}, OrdSet::level_range(e, lo.ord(), hi.ord()));
      }
      case 2: {
        auto [lo, hi] = bounds();
        unsigned e = static_cast<unsigned>(below(3));
        return make(Valuation{e, lo, hi}, OrdSet::valuation_range(e, lo.ord(), hi.ord()));
      }
      case 3: {
        auto [lo, hi] = bounds();
        return make(Range{lo, hi}, OrdSet::range(lo.ord(), hi.ord()));
      }
      default: {
        unsigned e = static_cast<unsigned>(below(3));
        // Prefix terms below w^e would be absorbed; keep only terms >= e.
        Tri prefix = tri();
        if (e >= 1) prefix.c = 0;
        if (e >= 2) prefix.b = 0;
        // x ranges below w^(3 - e) so that every element stays below w^3.
        Tri lo{0, 0, below(3) + 1};
        Tri hi;
        switch (below(4)) {
          case 0: hi = {0, 0, lo.c + 1 + below(6)}; break;
          case 1: hi = {0, 1, 0}; break;
          case 2: hi = {0, below(3) + 1, below(4)}; break;
          default: hi = e == 0 ? Tri{1, 0, 0} : Tri{0, 2, 0}; break;
        }
        if (e == 2 && Tri{0, 1, 0} < hi) hi = {0, 1, 0};
        Shape shape = static_cast<Shape>(below(3));
        return make(Scaled{prefix, e, lo, hi, shape}, OrdSet::scaled(prefix.ord(), e, lo.ord(), hi.ord(), shape));
      }
    }
  }

  GenSet set(unsigned atoms = 3) {
    GenSet s = atom();
    for (unsigned k = 1; k < atoms; ++k) {
      GenSet t = atom();
      const char op = "||&-"[below(4)];
      OrdSet v = op == '|' ? s.set.unite(t.set) : op == '&' ? s.set.intersect(t.set) : s.set.minus(t.set);
      s = GenSet{std::make_shared<const Expr>(Expr{Combine{op, s.expr, t.expr}}), std::move(v)};
    }
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

// Every grid triple below w^2*4, in increasing order.
inline std::vector<Tri> grid_points() {
  std::vector<Tri> out;
  for (std::uint64_t a = 0; a < kGroups; ++a)
    for (std::uint64_t b = 0; b < kGrid; ++b)
      for (std::uint64_t c = 0; c < kGrid; ++c) out.push_back({a, b, c});
  return out;
}

}  // namespace ordlab::testing
