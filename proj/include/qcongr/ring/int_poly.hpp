#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcongr {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. Index i of coeffs() holds the coefficient of q^i; the
/// highest stored coefficient is never zero, so the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c) { if (c != 0) c_.emplace_back(c); }
  IntPoly(const Integer& c) { if (c != 0) c_.push_back(c); }
  IntPoly(std::initializer_list<long> coeffs)
  {
    for (long c : coeffs) c_.emplace_back(c);
    trim();
  }
  explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly monomial(const Integer& c, std::size_t e)
  {
    IntPoly p;
    if (c == 0) return p;
    p.c_.assign(e + 1, Integer(0));
    p.c_[e] = c;
    return p;
  }

  /// q^e
  static IntPoly q_power(std::size_t e) { return monomial(1, e); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }

  const std::vector<Integer>& coeffs() const { return c_; }

  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

  const Integer& lead() const
  {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  /// Number of trailing zero coefficients, i.e. the largest e with q^e | f.
  std::size_t low_order() const
  {
    std::size_t i = 0;
    while (i < c_.size() && c_[i] == 0) ++i;
    return i;
  }

  /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
  Integer content() const
  {
    Integer g = 0;
    for (const auto& a : c_) {
      if (a == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// f / content(f) with positive leading coefficient.
  IntPoly primitive_part() const
  {
    if (is_zero()) return {};
    Integer g = content();
    if (lead() < 0) g = -g;
    return div_exact(g);
  }

  IntPoly div_exact(const Integer& s) const
  {
    IntPoly r = *this;
    if (s == 1) return r;
    for (auto& a : r.c_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), s.get_mpz_t());
    return r;
  }

  /// Multiply by q^e.
  IntPoly shifted(std::size_t e) const
  {
    if (is_zero() || e == 0) return *this;
    IntPoly r;
    r.c_.reserve(c_.size() + e);
    r.c_.assign(e, Integer(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  /// Divide by q^e; the caller guarantees e <= low_order().
  IntPoly unshifted(std::size_t e) const
  {
    if (e == 0) return *this;
    if (e > low_order()) throw std::domain_error("unshift past the low-order term");
    return IntPoly(std::vector<Integer>(c_.begin() + static_cast<long>(e), c_.end()));
  }

  /// In place: f <- f * (1 - q^e), e >= 1.
  void mul_one_minus_qpow(std::size_t e)
  {
    if (is_zero()) return;
    std::size_t n = c_.size();
    c_.resize(n + e);
    for (std::size_t i = n + e; i-- > e;) c_[i] -= c_[i - e];
    trim();
  }

  /// In place: f <- f * (1 + q^e), e >= 1.
  void mul_one_plus_qpow(std::size_t e)
  {
    if (is_zero()) return;
    std::size_t n = c_.size();
    c_.resize(n + e);
    for (std::size_t i = n + e; i-- > e;) c_[i] += c_[i - e];
  }

  /// In place: f <- f / (1 - q^e) when the division is exact. Returns false
  /// (and leaves f unspecified) otherwise.
  bool div_one_minus_qpow(std::size_t e)
  {
    if (is_zero()) return true;
    std::size_t n = c_.size();
    if (n <= e) return false;
    for (std::size_t i = e; i < n; ++i) c_[i] += c_[i - e];
    // the quotient has degree n-1-e; the top e entries form the remainder
    for (std::size_t i = n - e; i < n; ++i)
      if (c_[i] != 0) return false;
    c_.resize(n - e);
    trim();
    return true;
  }

  Rational eval(const Rational& x) const
  {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc *= x;
      acc += c_[i];
    }
    return acc;
  }

  Integer eval(const Integer& x) const
  {
    Integer acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc *= x;
      acc += c_[i];
    }
    return acc;
  }

  IntPoly operator-() const
  {
    IntPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }

  IntPoly& operator+=(const IntPoly& o)
  {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  IntPoly& operator-=(const IntPoly& o)
  {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  IntPoly& operator*=(const Integer& s)
  {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& a : c_) a *= s;
    return *this;
  }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend IntPoly operator*(const Integer& s, IntPoly a) { return a *= s; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b)
  {
    if (a.is_zero() || b.is_zero()) return {};
    const IntPoly& sparse = a.nonzero_terms() <= b.nonzero_terms() ? a : b;
    const IntPoly& dense = &sparse == &a ? b : a;
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < sparse.c_.size(); ++i) {
      mpz_srcptr s = sparse.c_[i].get_mpz_t();
      if (mpz_sgn(s) == 0) continue;
      for (std::size_t j = 0; j < dense.c_.size(); ++j)
        mpz_addmul(r[i + j].get_mpz_t(), s, dense.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(r));
  }

  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  IntPoly pow(unsigned e) const
  {
    IntPoly r(1), base = *this;
    while (e) {
      if (e & 1u) r *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return r;
  }

  std::size_t nonzero_terms() const
  {
    return static_cast<std::size_t>(
        std::count_if(c_.begin(), c_.end(), [](const Integer& a) { return a != 0; }));
  }

  /// Human-readable form, highest power first, e.g. "q^2 - q + 1".
  std::string to_string(const char* var = "q") const
  {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Integer& a = c_[i];
      if (a == 0) continue;
      Integer mag = abs(a);
      if (first) {
        if (a < 0) os << "-";
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0 || mag != 1) os << mag.get_str();
      if (i > 0) {
        if (mag != 1) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim()
  {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

struct DivisionResult {
  bool divides = false;
  IntPoly quotient;
};

/// Exact division test in Q[q]. Divisibility is decided on the primitive
/// part of p; by Gauss's lemma the quotient of f by a primitive divisor has
/// integer coefficients, so the check stays inside Z[q]. The returned
/// quotient satisfies quotient * primitive_part(p) == f.
inline DivisionResult divides_exactly(const IntPoly& p, const IntPoly& f)
{
  if (p.is_zero()) throw std::invalid_argument("divides_exactly: zero divisor");
  DivisionResult out;
  if (f.is_zero()) {
    out.divides = true;
    return out;
  }
  IntPoly d = p.primitive_part();
  if (f.degree() < d.degree()) return out;
  std::vector<Integer> r = f.coeffs();
  const auto dn = static_cast<std::size_t>(d.degree());
  const Integer& lc = d.lead();
  std::vector<Integer> quo(r.size() - dn);
  Integer t;
  for (std::size_t i = quo.size(); i-- > 0;) {
    Integer& top = r[i + dn];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return out;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j <= dn; ++j)
      if (d.coeffs()[j] != 0) mpz_submul(r[i + j].get_mpz_t(), t.get_mpz_t(), d.coeffs()[j].get_mpz_t());
    quo[i] = t;
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (r[i] != 0) return out;
  out.divides = true;
  out.quotient = IntPoly(std::move(quo));
  return out;
}

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b)
{
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coeffs();
  const auto bn = static_cast<std::size_t>(b.degree());
  const Integer& lc = b.lead();
  long steps = a.degree() - b.degree() + 1;
  for (std::size_t top = r.size(); top-- > bn;) {
    Integer t = r[top];
    for (auto& x : r) x *= lc;
    for (std::size_t j = 0; j <= bn; ++j)
      mpz_submul(r[top - bn + j].get_mpz_t(), t.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    --steps;
  }
  IntPoly rem(std::move(r));
  // pad the multiplier so the result is the textbook prem
  if (steps > 0) {
    Integer m;
    mpz_pow_ui(m.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(steps));
    rem *= m;
  }
  return rem;
}

}  // namespace qcongr
