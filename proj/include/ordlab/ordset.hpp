#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordlab/ordinal.hpp"

namespace ordlab {

enum class Shape { all, succ, lim };

/// Half-open ordinal interval [lo, hi).
struct Interval {
  Ordinal lo;
  Ordinal hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finitely represented set of ordinals.
///
/// Every nonzero ordinal has a valuation (exponent of its least CNF term). A
/// set is stored as a flag for 0 plus, for each valuation e, a sorted list of
/// intervals whose content is taken only at ordinals of valuation exactly e.
/// This is the same class of sets that the scaled-interval literal
/// `scaled(prefix, e, lo, hi, shape)` denotes: a succ-shaped atom is one
/// interval at level e, all/lim-shaped atoms spread over levels >= e / > e.
///
/// Canonical form (kept eagerly): at level e each interval [L, H) has L equal
/// to its least element and H minimal (max + 1 when a maximum exists, the
/// supremum otherwise), and no level-e ordinal separates two neighbours.
/// Structural equality is set equality.
class OrdSet {
 public:
  OrdSet() = default;

  static OrdSet singleton(const Ordinal& x);
  static OrdSet of(const std::vector<Ordinal>& xs);
  /// {g in [a, b) : g > 0, valuation(g) == e}.
  static OrdSet level_range(unsigned e, const Ordinal& a, const Ordinal& b);
  /// {g in [a, b) : g > 0, valuation(g) >= e}.
  static OrdSet valuation_range(unsigned e, const Ordinal& a, const Ordinal& b);
  /// Every ordinal in [a, b).
  static OrdSet range(const Ordinal& a, const Ordinal& b);
  /// {prefix + omega^e * x : lo <= x < hi, x of the given shape}; lo >= 1.
  static OrdSet scaled(const Ordinal& prefix, unsigned e, const Ordinal& lo, const Ordinal& hi, Shape shape);

  bool empty() const { return !zero_ && levels_.empty(); }
  bool contains(const Ordinal& x) const;

  std::optional<Ordinal> min() const;
  std::optional<Ordinal> max() const;
  /// Least upper bound; 0 for the empty set.
  Ordinal sup() const;
  /// Least element >= x. Throws DomainError when there is none.
  Ordinal min_above(const Ordinal& x) const;

  /// S intersected with [0, x).
  OrdSet restrict(const Ordinal& x) const;
  /// S minus [0, x).
  OrdSet above(const Ordinal& x) const;

  OrdSet unite(const OrdSet& other) const;
  OrdSet intersect(const OrdSet& other) const;
  OrdSet minus(const OrdSet& other) const;
  bool subset_of(const OrdSet& other) const;

  /// Order type.
  Ordinal otp() const;
  /// {b in S : b > 0, sup(S cap b) == b}.
  OrdSet acc() const;
  OrdSet nacc() const;
  /// {b > 0 : sup(S cap b) == b}, members of S or not.
  OrdSet limit_points() const;
  /// S together with its limit points below sup(S).
  OrdSet closure() const;
  /// Elements at positions 1..sigma of the increasing enumeration;
  /// nullopt sigma means omega.
  OrdSet succ_sigma(std::optional<std::uint64_t> sigma) const;
  bool is_club_in(const Ordinal& alpha) const;

  /// Left translation x -> shift + x applied to every element. Exact for
  /// any set (valuations are preserved for nonzero x).
  OrdSet translate(const Ordinal& shift) const;

  /// Up to n smallest elements.
  std::vector<Ordinal> first_elements(std::size_t n) const;

  std::string to_literal() const;
  std::size_t hash() const;

  bool has_zero() const { return zero_; }
  /// Canonical intervals at valuation e (empty when none).
  const std::vector<Interval>& level(unsigned e) const;
  unsigned level_count() const { return static_cast<unsigned>(levels_.size()); }

  friend bool operator==(const OrdSet&, const OrdSet&) = default;

 private:
  void set_level(unsigned e, std::vector<Interval> raw);
  void trim();

  bool zero_ = false;
  std::vector<std::vector<Interval>> levels_;
};

/// Parses `{}` | `{` item (`,` item)* `}` with item := ordinal |
/// `scaled(` ordinal `,` nat `,` ordinal `,` ordinal `,` shape `)`.
/// Scaled bounds may reach omega^deg (one degree above element ordinals).
OrdSet parse_set(std::string_view text, unsigned deg = 4);
std::string format_set(const OrdSet& s);

/// Least ordinal >= a of valuation e (a may be 0).
Ordinal next_of_valuation(unsigned e, const Ordinal& a);

struct OrdSetHash {
  std::size_t operator()(const OrdSet& s) const { return s.hash(); }
};

}  // namespace ordlab
