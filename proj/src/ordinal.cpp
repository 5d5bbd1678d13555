#include "ordlab/ordinal.hpp"

#include <cctype>
#include <sstream>

#include "ordlab/parse_util.hpp"

namespace ordlab {

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back({0, n});
}

Ordinal::Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].coefficient == 0) throw DomainError("CNF term with zero coefficient");
    if (k > 0 && terms_[k - 1].exponent <= terms_[k].exponent)
      throw DomainError("CNF exponents must strictly decrease");
  }
}

Ordinal Ordinal::omega_pow(unsigned e, std::uint64_t coefficient) {
  if (coefficient == 0) return Ordinal();
  Ordinal r;
  r.terms_.push_back({e, coefficient});
  return r;
}

bool Ordinal::is_successor() const { return !terms_.empty() && terms_.back().exponent == 0; }
bool Ordinal::is_limit() const { return !terms_.empty() && terms_.back().exponent > 0; }
bool Ordinal::is_finite() const { return terms_.empty() || terms_.front().exponent == 0; }

unsigned Ordinal::valuation() const { return terms_.empty() ? 0 : terms_.back().exponent; }
unsigned Ordinal::degree() const { return terms_.empty() ? 0 : terms_.front().exponent; }

bool Ordinal::degree_below(unsigned deg) const { return terms_.empty() || terms_.front().exponent < deg; }

std::uint64_t Ordinal::finite_part() const { return is_successor() ? terms_.back().coefficient : 0; }

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw DomainError("predecessor of a non-successor " + to_string());
  return drop_least();
}

Ordinal Ordinal::drop_least() const {
  if (terms_.empty()) throw DomainError("drop_least of zero");
  Ordinal r = *this;
  if (--r.terms_.back().coefficient == 0) r.terms_.pop_back();
  return r;
}

Ordinal Ordinal::truncate_below(unsigned e) const {
  Ordinal r;
  for (const Term& t : terms_)
    if (t.exponent >= e) r.terms_.push_back(t);
  return r;
}

Ordinal Ordinal::shift_up(unsigned e) const {
  Ordinal r = *this;
  for (Term& t : r.terms_) t.exponent += e;
  return r;
}

Ordinal Ordinal::shift_down(unsigned e) const {
  if (!terms_.empty() && valuation() < e) throw DomainError(to_string() + " is not a multiple of omega^" + std::to_string(e));
  Ordinal r = *this;
  for (Term& t : r.terms_) t.exponent -= e;
  return r;
}

std::string Ordinal::to_string() const { return format_ordinal(*this); }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k].exponent != y[k].exponent) return x[k].exponent <=> y[k].exponent;
    if (x[k].coefficient != y[k].coefficient) return x[k].coefficient <=> y[k].coefficient;
  }
  return x.size() <=> y.size();
}

Order ord_cmp(const Ordinal& a, const Ordinal& b) {
  auto c = a <=> b;
  if (c < 0) return Order::less;
  if (c > 0) return Order::greater;
  return Order::equal;
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const unsigned e = b.degree();
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::uint64_t carry = 0;
  for (const Term& t : a.terms()) {
    if (t.exponent > e)
      out.push_back(t);
    else if (t.exponent == e)
      carry = t.coefficient;
  }
  bool first = true;
  for (const Term& t : b.terms()) {
    Term u = t;
    if (first) u.coefficient += carry;
    first = false;
    out.push_back(u);
  }
  return Ordinal(std::move(out));
}

Ordinal ord_add_bounded(const Ordinal& a, const Ordinal& b, unsigned deg) {
  Ordinal r = ord_add(a, b);
  if (!r.degree_below(deg))
    throw DomainError("ordinal sum " + r.to_string() + " overflows omega^" + std::to_string(deg));
  return r;
}

Ordinal ord_sub(const Ordinal& a, const Ordinal& b) {
  if (a > b) throw DomainError("ord_sub: " + a.to_string() + " > " + b.to_string());
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t k = 0;
  while (k < x.size() && k < y.size() && x[k] == y[k]) ++k;
  if (k == y.size()) return Ordinal();  // a == b
  std::vector<Term> out;
  if (k < x.size() && x[k].exponent == y[k].exponent) {
    out.push_back({y[k].exponent, y[k].coefficient - x[k].coefficient});
    ++k;
  }
  for (; k < y.size(); ++k) out.push_back(y[k]);
  return Ordinal(std::move(out));
}

Ordinal ord_mul_nat(const Ordinal& a, std::uint64_t n) {
  if (n == 0 || a.is_zero()) return Ordinal();
  std::vector<Term> t = a.terms();
  t.front().coefficient *= n;
  return Ordinal(std::move(t));
}

Ordinal ord_mul_omega(const Ordinal& a) {
  if (a.is_zero()) return Ordinal();
  return Ordinal::omega_pow(a.degree() + 1);
}

Ordinal fundamental_step(const Ordinal& alpha, std::uint64_t n) {
  if (!alpha.is_limit()) throw DomainError("fundamental_step needs a limit ordinal, got " + alpha.to_string());
  if (n == 0) throw DomainError("fundamental_step index must be >= 1");
  return ord_add(alpha.drop_least(), Ordinal::omega_pow(alpha.valuation() - 1, n));
}

// ---------------------------------------------------------------------------

namespace detail {

void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

std::uint64_t parse_nat(std::string_view s, std::size_t& pos) {
  skip_ws(s, pos);
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw ParseError("expected a natural number at offset " + std::to_string(pos));
  std::uint64_t v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    std::uint64_t d = static_cast<std::uint64_t>(s[pos] - '0');
    if (v > (UINT64_MAX - d) / 10) throw ParseError("natural number too large");
    v = v * 10 + d;
    ++pos;
  }
  return v;
}

bool consume(std::string_view s, std::size_t& pos, char c) {
  skip_ws(s, pos);
  if (pos < s.size() && s[pos] == c) {
    ++pos;
    return true;
  }
  return false;
}

void expect(std::string_view s, std::size_t& pos, char c) {
  if (!consume(s, pos, c))
    throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos));
}

Ordinal parse_ordinal_at(std::string_view s, std::size_t& pos, unsigned deg) {
  std::vector<Term> terms;
  do {
    skip_ws(s, pos);
    Term t;
    if (pos < s.size() && s[pos] == 'w') {
      ++pos;
      t.exponent = 1;
      if (consume(s, pos, '^')) {
        std::uint64_t e = parse_nat(s, pos);
        if (e >= deg)
          throw ParseError("exponent " + std::to_string(e) + " not below degree bound " + std::to_string(deg));
        t.exponent = static_cast<unsigned>(e);
      }
      if (t.exponent >= deg) throw ParseError("omega not below degree bound " + std::to_string(deg));
      t.coefficient = consume(s, pos, '*') ? parse_nat(s, pos) : 1;
    } else {
      t.exponent = 0;
      t.coefficient = parse_nat(s, pos);
    }
    if (!terms.empty() && terms.back().exponent <= t.exponent)
      throw ParseError("terms must appear in strictly decreasing exponent order");
    if (t.coefficient == 0) {
      // "0" is allowed only as the whole expression.
      if (!terms.empty() || t.exponent != 0) throw ParseError("zero coefficient inside a sum");
      skip_ws(s, pos);
      if (pos < s.size() && s[pos] == '+') throw ParseError("zero coefficient inside a sum");
      return Ordinal();
    }
    terms.push_back(t);
  } while (consume(s, pos, '+'));
  return Ordinal(std::move(terms));
}

}  // namespace detail

Ordinal parse_ordinal(std::string_view text, unsigned deg) {
  std::size_t pos = 0;
  Ordinal r = detail::parse_ordinal_at(text, pos, deg);
  detail::skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing input in ordinal '" + std::string(text) + "'");
  return r;
}

std::string format_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : a.terms()) {
    if (!first) os << '+';
    first = false;
    if (t.exponent == 0) {
      os << t.coefficient;
      continue;
    }
    os << 'w';
    if (t.exponent > 1) os << '^' << t.exponent;
    if (t.coefficient > 1) os << '*' << t.coefficient;
  }
  return os.str();
}

}  // namespace ordlab
