#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordlab {

/// Thrown for malformed ordinal or set literals.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an arithmetic precondition fails (a > b in ord_sub, overflow, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One Cantor normal form term omega^exponent * coefficient.
struct Term {
  unsigned exponent = 0;
  std::uint64_t coefficient = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

/// An ordinal below omega^omega in Cantor normal form.
///
/// Terms are kept with strictly decreasing exponents and positive
/// coefficients; the empty term list is 0. The universe degree bound is not
/// part of the value: callers that work inside a bounded universe check it
/// with `degree_below`.
class Ordinal {
 public:
  Ordinal() = default;
  explicit Ordinal(std::uint64_t n);
  /// Builds from terms; throws DomainError unless they are already normal.
  explicit Ordinal(std::vector<Term> terms);

  static Ordinal omega_pow(unsigned e, std::uint64_t coefficient = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_successor() const;
  bool is_limit() const;
  bool is_finite() const;

  /// Exponent of the least term; only meaningful for nonzero values.
  unsigned valuation() const;
  /// Exponent of the leading term; 0 for zero.
  unsigned degree() const;
  /// True when every exponent is < deg (value < omega^deg).
  bool degree_below(unsigned deg) const;
  /// Finite part (coefficient of omega^0).
  std::uint64_t finite_part() const;

  /// Predecessor of a successor ordinal.
  Ordinal predecessor() const;
  /// Drops one copy of the least term (xi' in alpha = xi' + omega^e).
  Ordinal drop_least() const;
  /// Largest ordinal <= *this whose valuation is >= e (terms below e removed).
  Ordinal truncate_below(unsigned e) const;
  /// omega^e * (*this): shifts every exponent up by e.
  Ordinal shift_up(unsigned e) const;
  /// The x with omega^e * x == *this; requires valuation() >= e.
  Ordinal shift_down(unsigned e) const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal&, const Ordinal&) = default;

 private:
  std::vector<Term> terms_;
};

enum class Order { less, equal, greater };

Order ord_cmp(const Ordinal& a, const Ordinal& b);
Ordinal ord_add(const Ordinal& a, const Ordinal& b);
/// ord_add that refuses results >= omega^deg.
Ordinal ord_add_bounded(const Ordinal& a, const Ordinal& b, unsigned deg);
/// Left subtraction: the unique g with a + g == b. Requires a <= b.
Ordinal ord_sub(const Ordinal& a, const Ordinal& b);
/// a * n for a natural n.
Ordinal ord_mul_nat(const Ordinal& a, std::uint64_t n);
/// a * omega.
Ordinal ord_mul_omega(const Ordinal& a);

inline Ordinal succ(const Ordinal& a) { return ord_add(a, Ordinal(1)); }

/// Canonical ladder: for alpha = xi' + omega^e (e >= 1) returns
/// xi' + omega^(e-1) * n. Requires alpha limit and n >= 1.
Ordinal fundamental_step(const Ordinal& alpha, std::uint64_t n);

/// Parses the ordinal grammar `term ("+" term)*`, term := "w" ("^" nat)? ("*" nat)? | nat.
/// Exponents must be < deg and strictly decreasing.
Ordinal parse_ordinal(std::string_view text, unsigned deg = 4);
std::string format_ordinal(const Ordinal& a);

namespace literals {
inline const Ordinal omega = Ordinal::omega_pow(1);
}

}  // namespace ordlab
