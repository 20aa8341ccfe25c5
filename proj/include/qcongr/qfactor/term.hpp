#pragma once

#include "qcongr/ring/cyclo_basis.hpp"
#include "qcongr/ring/rational_fn.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcongr {

/// A q-hypergeometric summand kept in factored form:
///   coeff * q^qpow * prod_d Phi_d(q)^{e_d},   Phi_1 = q - 1,
/// with rational coeff and integer (possibly negative) exponents. Every
/// q-integer, q-shifted factorial and Gaussian binomial is of this shape, so
/// products and quotients are exponent arithmetic and cancellation is free.
class Term {
 public:
  Term() = default;  // zero
  Term(long c) : coeff_(c) {}
  Term(const Rational& c) : coeff_(c) {}

  static Term one() { return Term(1); }

  static Term q_power(long e)
  {
    Term t(1);
    t.qpow_ = e;
    return t;
  }

  /// 1 - q^m for any integer m; zero when m = 0.
  static Term one_minus_qpow(long m)
  {
    if (m == 0) return {};
    Term t(1);
    long a = m > 0 ? m : -m;
    for (long d : divisors(a)) t.phi_[d] += 1;
    if (m > 0) {
      t.coeff_ = -1;  // 1 - q^a = -(q^a - 1)
    } else {
      t.qpow_ = -a;  // 1 - q^-a = q^-a (q^a - 1)
    }
    return t;
  }

  /// 1 + q^m for any integer m.
  static Term one_plus_qpow(long m)
  {
    if (m == 0) return Term(2);
    long a = m > 0 ? m : -m;
    Term t(1);
    for (long d : divisors(2 * a))
      if (a % d != 0) t.phi_[d] += 1;
    if (m < 0) t.qpow_ = -a;
    return t;
  }

  /// [m] = (1 - q^m) / (1 - q) for any integer m; zero when m = 0.
  static Term q_int(long m)
  {
    if (m == 0) return {};
    return one_minus_qpow(m) / one_minus_qpow(1);
  }

  bool is_zero() const { return coeff_ == 0; }
  const Rational& coeff() const { return coeff_; }
  long q_exponent() const { return qpow_; }
  const std::map<long, long>& phi_exponents() const { return phi_; }

  long phi_exponent(long d) const
  {
    auto it = phi_.find(d);
    return it == phi_.end() ? 0 : it->second;
  }

  Term& operator*=(const Term& o)
  {
    if (is_zero() || o.is_zero()) return *this = Term();
    coeff_ *= o.coeff_;
    qpow_ += o.qpow_;
    for (const auto& [d, e] : o.phi_) add_phi(d, e);
    return *this;
  }

  Term& operator/=(const Term& o)
  {
    if (o.is_zero()) throw std::domain_error("Term: division by zero");
    if (is_zero()) return *this;
    coeff_ /= o.coeff_;
    qpow_ -= o.qpow_;
    for (const auto& [d, e] : o.phi_) add_phi(d, -e);
    return *this;
  }

  friend Term operator*(Term a, const Term& b) { return a *= b; }
  friend Term operator/(Term a, const Term& b) { return a /= b; }
  Term operator-() const
  {
    Term t = *this;
    t.coeff_ = -t.coeff_;
    return t;
  }

  Term pow(long e) const
  {
    if (e < 0) return Term(1) / pow(-e);
    if (e == 0) return Term(1);
    if (is_zero()) return {};
    Term t;
    mpz_pow_ui(t.coeff_.get_num_mpz_t(), coeff_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(t.coeff_.get_den_mpz_t(), coeff_.get_den_mpz_t(), static_cast<unsigned long>(e));
    t.coeff_.canonicalize();
    t.qpow_ = qpow_ * e;
    for (const auto& [d, k] : phi_) t.phi_[d] = k * e;
    return t;
  }

  /// True when no Phi factor or q power appears in the denominator.
  bool is_polynomial() const
  {
    if (coeff_.get_den() != 1 || qpow_ < 0) return false;
    return std::all_of(phi_.begin(), phi_.end(), [](const auto& kv) { return kv.second >= 0; });
  }

  RationalFn to_rational_fn() const
  {
    if (is_zero()) return {};
    IntPoly num(coeff_.get_num());
    std::map<long, long> up, down;
    for (const auto& [d, e] : phi_) (e > 0 ? up : down)[d] = e > 0 ? e : -e;
    multiply_by_phi_product(num, up);
    if (qpow_ > 0) num = num.shifted(static_cast<std::size_t>(qpow_));
    return RationalFn::from_factored(std::move(num), coeff_.get_den(), qpow_ < 0 ? -qpow_ : 0,
                                     std::move(down), IntPoly(1), true);
  }

  IntPoly to_poly() const
  {
    if (!is_polynomial()) throw std::domain_error("Term: not a polynomial");
    return to_rational_fn().num();
  }

  /// Value at q = 1: finite only when the Phi_1 exponent is nonnegative.
  Rational at_one() const
  {
    if (is_zero()) return 0;
    long e1 = phi_exponent(1);
    if (e1 < 0) throw PoleError("Term: pole at q = 1");
    if (e1 > 0) return 0;
    Rational v = coeff_;
    for (const auto& [d, e] : phi_) {
      if (d == 1) continue;
      long p = prime_power_base(d);  // Phi_d(1) = p for d = p^k, else 1
      if (p == 0) continue;
      Rational f(p);
      for (long i = 0; i < (e > 0 ? e : -e); ++i) {
        if (e > 0) v *= f;
        else v /= f;
      }
    }
    return v;
  }

  friend bool operator==(const Term& a, const Term& b)
  {
    return a.coeff_ == b.coeff_ && (a.is_zero() || (a.qpow_ == b.qpow_ && a.phi_ == b.phi_));
  }

 private:
  /// p if d is a power of the prime p, else 0.
  static long prime_power_base(long d)
  {
    for (long f = 2; f * f <= d; ++f) {
      if (d % f) continue;
      while (d % f == 0) d /= f;
      return d == 1 ? f : 0;
    }
    return d;
  }

  void add_phi(long d, long e)
  {
    long& slot = phi_[d];
    slot += e;
    if (slot == 0) phi_.erase(d);
  }

  Rational coeff_ = 0;
  long qpow_ = 0;
  std::map<long, long> phi_;
};

/// Exact sum of factored terms as a reduced RationalFn. The common
/// denominator is read off the exponents; factors shared by every lifted
/// numerator are pulled out before expansion.
inline RationalFn sum_terms(std::span<const Term> terms)
{
  std::vector<const Term*> live;
  for (const auto& t : terms)
    if (!t.is_zero()) live.push_back(&t);
  if (live.empty()) return {};
  if (live.size() == 1) return live.front()->to_rational_fn();

  std::map<long, long> den;  // exponents of the common denominator
  long qden = 0;
  Integer scale = 1;
  for (const Term* t : live) {
    for (const auto& [d, e] : t->phi_exponents())
      if (e < 0) den[d] = std::max(den[d], -e);
    qden = std::max(qden, -t->q_exponent());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), t->coeff().get_den_mpz_t());
  }

  // lifted numerator exponent of Phi_d in term t is e_{t,d} + den[d]
  std::map<long, long> common;
  std::map<long, long> all;
  for (const Term* t : live)
    for (const auto& [d, e] : t->phi_exponents()) all[d] = 0;
  for (const auto& [d, unused] : den) all[d] = 0;
  for (auto& [d, m] : all) {
    long lo = -1;
    for (const Term* t : live) {
      long v = t->phi_exponent(d) + (den.count(d) ? den[d] : 0);
      lo = lo < 0 ? v : std::min(lo, v);
    }
    m = lo;
  }
  long qlo = -1;
  for (const Term* t : live) {
    long v = t->q_exponent() + qden;
    qlo = qlo < 0 ? v : std::min(qlo, v);
  }
  for (auto& [d, m] : all) {
    long have = den.count(d) ? den[d] : 0;
    long cancel = std::min(m, have);
    if (cancel > 0) den[d] = have - cancel;
    m -= cancel;  // becomes the factor shared by all numerators after cancellation
    if (m > 0) common[d] = m;
  }
  long qcancel = std::min(qlo, qden);
  qden -= qcancel;
  long qcommon = qlo - qcancel;

  IntPoly total;
  for (const Term* t : live) {
    Integer c = t->coeff().get_num() * (scale / t->coeff().get_den());
    IntPoly f(c);
    std::map<long, long> ex;
    for (const auto& [d, shared] : all) {
      long v = t->phi_exponent(d) + (den.count(d) ? den[d] : 0) - shared;
      if (v > 0) ex[d] = v;
    }
    multiply_by_phi_product(f, ex);
    long shift = t->q_exponent() + qden - qcommon;
    f = f.shifted(static_cast<std::size_t>(shift));
    total += f;
  }
  if (total.is_zero()) return {};
  multiply_by_phi_product(total, common);
  total = total.shifted(static_cast<std::size_t>(qcommon));
  for (auto it = den.begin(); it != den.end();)
    it = it->second == 0 ? den.erase(it) : std::next(it);
  return RationalFn::from_factored(std::move(total), scale, qden, std::move(den));
}

inline RationalFn sum_terms(std::initializer_list<Term> terms)
{
  return sum_terms(std::span<const Term>(terms.begin(), terms.size()));
}

}  // namespace qcongr
