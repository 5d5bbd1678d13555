#include "ordlab/ordset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ordlab/parse_util.hpp"

namespace ordlab {

namespace {

using Ranges = std::vector<Interval>;

const Ranges kNoIntervals;

// Sorted, disjoint, non-touching union of arbitrary ranges.
Ranges normalize_ranges(Ranges r) {
  r.erase(std::remove_if(r.begin(), r.end(), [](const Interval& i) { return i.lo >= i.hi; }), r.end());
  std::sort(r.begin(), r.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  Ranges out;
  for (Interval& i : r) {
    if (!out.empty() && i.lo <= out.back().hi) {
      if (i.hi > out.back().hi) out.back().hi = std::move(i.hi);
    } else {
      out.push_back(std::move(i));
    }
  }
  return out;
}

Ranges intersect_ranges(const Ranges& a, const Ranges& b) {
  Ranges out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const Ordinal& lo = std::max(a[i].lo, b[j].lo);
    const Ordinal& hi = std::min(a[i].hi, b[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi)
      ++i;
    else
      ++j;
  }
  return out;
}

Ranges subtract_ranges(const Ranges& a, const Ranges& b) {
  Ranges out;
  for (const Interval& x : a) {
    Ordinal lo = x.lo;
    for (const Interval& y : b) {
      if (y.hi <= lo || y.lo >= x.hi) continue;
      if (y.lo > lo) out.push_back({lo, y.lo});
      lo = std::max(lo, y.hi);
      if (lo >= x.hi) break;
    }
    if (lo < x.hi) out.push_back({lo, x.hi});
  }
  return out;
}

// Canonical form of [a, b) at valuation e, or nullopt when it has no content.
std::optional<Interval> canon_interval(unsigned e, const Ordinal& a, const Ordinal& b) {
  Ordinal lo = next_of_valuation(e, a);
  if (lo >= b) return std::nullopt;
  // u: every valuation-e ordinal below b is <= u (and < u unless u itself has valuation e).
  Ordinal u;
  Ordinal t = b.truncate_below(e);
  if (t < b)
    u = std::move(t);
  else if (b.valuation() == e)
    u = b.drop_least();
  else
    u = b;
  if (!u.is_zero() && u.valuation() == e) {
    if (lo > u) return std::nullopt;
    return Interval{std::move(lo), succ(u)};
  }
  if (lo >= u) return std::nullopt;
  return Interval{std::move(lo), std::move(u)};
}

Ranges canon_level(unsigned e, const Ranges& raw) {
  Ranges out;
  for (const Interval& r : normalize_ranges(raw)) {
    auto c = canon_interval(e, r.lo, r.hi);
    if (!c) continue;
    if (!out.empty() && next_of_valuation(e, out.back().hi) >= c->lo)
      out.back().hi = std::move(c->hi);
    else
      out.push_back(std::move(*c));
  }
  return out;
}

// Supremum of the content of a canonical level interval.
Ordinal interval_sup(const Interval& i) { return i.hi.is_successor() ? i.hi.predecessor() : i.hi; }

// Order type of {g in (0, b) : valuation(g) in levels}; levels is a bitmask.
Ordinal count_below(std::uint64_t levels, const Ordinal& b) {
  auto in = [&](unsigned e) { return e < 64 && ((levels >> e) & 1u) != 0; };
  unsigned top = b.degree();
  // full[k] = count_below(omega^k)
  std::vector<Ordinal> full(top + 1);
  for (unsigned k = 1; k <= top; ++k) {
    Ordinal block = ord_add(Ordinal(in(k - 1) ? 1 : 0), full[k - 1]);
    full[k] = ord_add(full[k - 1], ord_mul_omega(block));
  }
  Ordinal result;
  Ordinal prefix;
  for (const Term& t : b.terms()) {
    if (!prefix.is_zero() && in(prefix.valuation())) result = ord_add(result, Ordinal(1));
    Ordinal block = ord_add(Ordinal(in(t.exponent) ? 1 : 0), full[t.exponent]);
    Ordinal part = ord_add(full[t.exponent], ord_mul_nat(block, t.coefficient - 1));
    result = ord_add(result, part);
    prefix = ord_add(prefix, Ordinal::omega_pow(t.exponent, t.coefficient));
  }
  return result;
}

}  // namespace

Ordinal next_of_valuation(unsigned e, const Ordinal& a) {
  if (a.is_zero()) return Ordinal::omega_pow(e);
  unsigned v = a.valuation();
  if (v == e) return a;
  if (v > e) return ord_add(a, Ordinal::omega_pow(e));
  return ord_add(a.truncate_below(e), Ordinal::omega_pow(e));
}

// ---------------------------------------------------------------------------

void OrdSet::set_level(unsigned e, std::vector<Interval> raw) {
  if (levels_.size() <= e) levels_.resize(e + 1);
  levels_[e] = canon_level(e, raw);
}

void OrdSet::trim() {
  while (!levels_.empty() && levels_.back().empty()) levels_.pop_back();
}

const std::vector<Interval>& OrdSet::level(unsigned e) const {
  return e < levels_.size() ? levels_[e] : kNoIntervals;
}

OrdSet OrdSet::singleton(const Ordinal& x) {
  OrdSet s;
  if (x.is_zero()) {
    s.zero_ = true;
    return s;
  }
  s.set_level(x.valuation(), {{x, succ(x)}});
  return s;
}

OrdSet OrdSet::of(const std::vector<Ordinal>& xs) {
  OrdSet s;
  for (const Ordinal& x : xs) s = s.unite(singleton(x));
  return s;
}

OrdSet OrdSet::level_range(unsigned e, const Ordinal& a, const Ordinal& b) {
  OrdSet s;
  if (a < b) s.set_level(e, {{a, b}});
  s.trim();
  return s;
}

OrdSet OrdSet::valuation_range(unsigned e, const Ordinal& a, const Ordinal& b) {
  OrdSet s;
  if (a >= b) return s;
  for (unsigned k = e; k <= b.degree(); ++k) s.set_level(k, {{a, b}});
  s.trim();
  return s;
}

OrdSet OrdSet::range(const Ordinal& a, const Ordinal& b) {
  OrdSet s = valuation_range(0, a, b);
  if (a.is_zero() && !b.is_zero()) s.zero_ = true;
  return s;
}

OrdSet OrdSet::scaled(const Ordinal& prefix, unsigned e, const Ordinal& lo, const Ordinal& hi, Shape shape) {
  if (lo.is_zero()) throw DomainError("scaled atom needs lo >= 1");
  Ordinal a = ord_add(prefix, lo.shift_up(e));
  Ordinal b = ord_add(prefix, hi.shift_up(e));
  switch (shape) {
    case Shape::succ:
      return level_range(e, a, b);
    case Shape::lim:
      return valuation_range(e + 1, a, b);
    case Shape::all:
      break;
  }
  return valuation_range(e, a, b);
}

bool OrdSet::contains(const Ordinal& x) const {
  if (x.is_zero()) return zero_;
  for (const Interval& i : level(x.valuation()))
    if (i.lo <= x && x < i.hi) return true;
  return false;
}

std::optional<Ordinal> OrdSet::min() const {
  if (zero_) return Ordinal();
  std::optional<Ordinal> best;
  for (const auto& lv : levels_)
    if (!lv.empty() && (!best || lv.front().lo < *best)) best = lv.front().lo;
  return best;
}

Ordinal OrdSet::sup() const {
  Ordinal best;
  for (const auto& lv : levels_)
    if (!lv.empty()) best = std::max(best, interval_sup(lv.back()));
  return best;
}

std::optional<Ordinal> OrdSet::max() const {
  if (empty()) return std::nullopt;
  Ordinal s = sup();
  if (contains(s)) return s;
  return std::nullopt;
}

Ordinal OrdSet::min_above(const Ordinal& x) const {
  auto m = above(x).min();
  if (!m) throw DomainError("no element >= " + x.to_string() + " in " + to_literal());
  return *m;
}

OrdSet OrdSet::restrict(const Ordinal& x) const {
  if (x.is_zero()) return OrdSet();
  OrdSet s;
  s.zero_ = zero_;
  Ranges cap{{Ordinal(), x}};
  for (unsigned e = 0; e < levels_.size(); ++e) s.set_level(e, intersect_ranges(levels_[e], cap));
  s.trim();
  return s;
}

OrdSet OrdSet::above(const Ordinal& x) const {
  if (x.is_zero()) return *this;
  OrdSet s;
  Ranges low{{Ordinal(), x}};
  for (unsigned e = 0; e < levels_.size(); ++e) s.set_level(e, subtract_ranges(levels_[e], low));
  s.trim();
  return s;
}

OrdSet OrdSet::unite(const OrdSet& other) const {
  OrdSet s;
  s.zero_ = zero_ || other.zero_;
  unsigned n = std::max(level_count(), other.level_count());
  for (unsigned e = 0; e < n; ++e) {
    Ranges r = level(e);
    const Ranges& o = other.level(e);
    r.insert(r.end(), o.begin(), o.end());
    s.set_level(e, std::move(r));
  }
  s.trim();
  return s;
}

OrdSet OrdSet::intersect(const OrdSet& other) const {
  OrdSet s;
  s.zero_ = zero_ && other.zero_;
  unsigned n = std::min(level_count(), other.level_count());
  for (unsigned e = 0; e < n; ++e) s.set_level(e, intersect_ranges(level(e), other.level(e)));
  s.trim();
  return s;
}

OrdSet OrdSet::minus(const OrdSet& other) const {
  OrdSet s;
  s.zero_ = zero_ && !other.zero_;
  for (unsigned e = 0; e < level_count(); ++e) s.set_level(e, subtract_ranges(level(e), other.level(e)));
  s.trim();
  return s;
}

bool OrdSet::subset_of(const OrdSet& other) const { return minus(other).empty(); }

Ordinal OrdSet::otp() const {
  std::vector<Ordinal> cuts;
  for (const auto& lv : levels_)
    for (const Interval& i : lv) {
      cuts.push_back(i.lo);
      cuts.push_back(i.hi);
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Ordinal total(zero_ ? 1 : 0);
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    const Ordinal& a = cuts[j];
    const Ordinal& b = cuts[j + 1];
    std::uint64_t mask = 0;
    for (unsigned e = 0; e < levels_.size(); ++e)
      for (const Interval& i : levels_[e])
        if (i.lo <= a && b <= i.hi) mask |= (std::uint64_t{1} << e);
    if (mask == 0) continue;
    total = ord_add(total, ord_sub(count_below(mask, a), count_below(mask, b)));
  }
  return total;
}

OrdSet OrdSet::limit_points() const {
  OrdSet s;
  unsigned top = 0;
  for (const auto& lv : levels_)
    for (const Interval& i : lv) top = std::max(top, i.hi.degree());
  // A point of valuation e is a limit of S exactly when some level e' < e
  // interval [L, H) has L < b <= H.
  Ranges reach;
  for (unsigned e = 1; e <= top + 1; ++e) {
    for (const Interval& i : level(e - 1)) reach.push_back({succ(i.lo), succ(i.hi)});
    if (!reach.empty()) s.set_level(e, reach);
  }
  s.trim();
  return s;
}

OrdSet OrdSet::acc() const { return intersect(limit_points()); }

OrdSet OrdSet::nacc() const { return minus(acc()); }

OrdSet OrdSet::closure() const { return unite(limit_points().restrict(sup())); }

OrdSet OrdSet::succ_sigma(std::optional<std::uint64_t> sigma) const {
  auto first = min();
  if (!first) return OrdSet();
  OrdSet rest = minus(singleton(*first));
  if (!sigma) {
    auto lp = limit_points().min();
    return lp ? rest.restrict(*lp) : rest;
  }
  OrdSet out;
  Ordinal cursor = succ(*first);
  for (std::uint64_t j = 0; j < *sigma; ++j) {
    auto next = rest.above(cursor).min();
    if (!next) break;
    out = out.unite(singleton(*next));
    cursor = succ(*next);
  }
  return out;
}

bool OrdSet::is_club_in(const Ordinal& alpha) const {
  if (!alpha.is_limit() || empty()) return false;
  // sup == alpha with alpha missing already forces S to lie below alpha.
  if (sup() != alpha || contains(alpha)) return false;
  return limit_points().restrict(alpha).subset_of(*this);
}

OrdSet OrdSet::translate(const Ordinal& shift) const {
  OrdSet s;
  for (unsigned e = 0; e < levels_.size(); ++e) {
    Ranges r;
    for (const Interval& i : levels_[e]) r.push_back({ord_add(shift, i.lo), ord_add(shift, i.hi)});
    s.set_level(e, std::move(r));
  }
  s.trim();
  if (zero_) s = s.unite(singleton(shift));
  return s;
}

std::vector<Ordinal> OrdSet::first_elements(std::size_t n) const {
  std::vector<Ordinal> out;
  OrdSet rest = *this;
  while (out.size() < n) {
    auto m = rest.min();
    if (!m) break;
    out.push_back(*m);
    rest = rest.above(succ(*m));
  }
  return out;
}

std::string OrdSet::to_literal() const {
  struct Item {
    Ordinal key;
    std::string text;
  };
  std::vector<Item> items;
  if (zero_) items.push_back({Ordinal(), "0"});
  for (unsigned e = 0; e < levels_.size(); ++e) {
    for (const Interval& i : levels_[e]) {
      if (i.hi == succ(i.lo)) {
        items.push_back({i.lo, format_ordinal(i.lo)});
        continue;
      }
      Ordinal lo = i.lo.shift_down(e);
      Ordinal hi = i.hi.is_successor() ? succ(i.hi.predecessor().shift_down(e)) : i.hi.shift_down(e);
      items.push_back({i.lo, "scaled(0," + std::to_string(e) + "," + format_ordinal(lo) + "," + format_ordinal(hi) + ",succ)"});
    }
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.key < b.key; });
  std::string out = "{";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ",";
    out += items[k].text;
  }
  return out + "}";
}

std::size_t OrdSet::hash() const {
  std::size_t h = zero_ ? 0x9e3779b97f4a7c15ULL : 0;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (unsigned e = 0; e < levels_.size(); ++e) {
    mix(e);
    for (const Interval& i : levels_[e])
      for (const Ordinal* o : {&i.lo, &i.hi})
        for (const Term& t : o->terms()) {
          mix(t.exponent);
          mix(std::hash<std::uint64_t>{}(t.coefficient));
        }
  }
  return h;
}

// ---------------------------------------------------------------------------

OrdSet parse_set(std::string_view text, unsigned deg) {
  std::size_t pos = 0;
  detail::expect(text, pos, '{');
  OrdSet s;
  if (!detail::consume(text, pos, '}')) {
    do {
      detail::skip_ws(text, pos);
      if (text.substr(pos, 7) == "scaled(") {
        pos += 7;
        Ordinal prefix = detail::parse_ordinal_at(text, pos, deg);
        detail::expect(text, pos, ',');
        std::uint64_t e = detail::parse_nat(text, pos);
        if (e >= deg) throw ParseError("scaled exponent not below degree bound");
        detail::expect(text, pos, ',');
        Ordinal lo = detail::parse_ordinal_at(text, pos, deg + 1);
        detail::expect(text, pos, ',');
        Ordinal hi = detail::parse_ordinal_at(text, pos, deg + 1);
        detail::expect(text, pos, ',');
        detail::skip_ws(text, pos);
        Shape shape;
        if (text.substr(pos, 3) == "all") {
          shape = Shape::all;
          pos += 3;
        } else if (text.substr(pos, 4) == "succ") {
          shape = Shape::succ;
          pos += 4;
        } else if (text.substr(pos, 3) == "lim") {
          shape = Shape::lim;
          pos += 3;
        } else {
          throw ParseError("expected shape all|succ|lim at offset " + std::to_string(pos));
        }
        detail::expect(text, pos, ')');
        if (lo.is_zero()) throw ParseError("scaled atom needs lo >= 1");
        s = s.unite(OrdSet::scaled(prefix, static_cast<unsigned>(e), lo, hi, shape));
      } else {
        s = s.unite(OrdSet::singleton(detail::parse_ordinal_at(text, pos, deg)));
      }
    } while (detail::consume(text, pos, ','));
    detail::expect(text, pos, '}');
  }
  detail::skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing input after set literal");
  return s;
}

std::string format_set(const OrdSet& s) { return s.to_literal(); }

}  // namespace ordlab
