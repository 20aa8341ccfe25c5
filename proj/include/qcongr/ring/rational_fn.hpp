#pragma once

#include "qcongr/ring/cyclo_basis.hpp"
#include "qcongr/ring/int_poly.hpp"
#include "qcongr/ring/poly_gcd.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcongr {

/// Thrown by RationalFn::eval_at when the point is a pole.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Reduced quotient num/den of integer polynomials.
///
/// The denominator is kept partly factored as
///   scale * q^qpow * prod_d Phi_d^{e_d} * rest
/// with scale a positive integer and rest primitive with positive leading
/// coefficient. Summands built from q-shifted factorials only ever produce
/// the first three kinds of factor, so reduction against them is a handful
/// of binomial divisions; rest falls back to subresultant gcds.
///
/// After normalization gcd(num, den) is constant over Q, gcd(content(num),
/// scale) = 1, and the expanded den has positive leading coefficient, so two
/// equal values always have identical num() and den().
class RationalFn {
 public:
  RationalFn() = default;
  RationalFn(long c) : num_(c) {}
  RationalFn(const Integer& c) : num_(c) {}
  RationalFn(const Rational& c) : num_(c.get_num()), scale_(c.get_den()) {}
  RationalFn(IntPoly p) : num_(std::move(p)) {}

  /// General constructor; den must be nonzero.
  RationalFn(IntPoly num, IntPoly den) : num_(std::move(num))
  {
    if (den.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    absorb_denominator(std::move(den));
    normalize();
  }

  /// Builder for callers that already know the factored denominator. Pass
  /// reduced = true only when num is known to be coprime to every factor.
  static RationalFn from_factored(IntPoly num, Integer scale, long qpow,
                                  std::map<long, long> cyclo, IntPoly rest = IntPoly(1),
                                  bool reduced = false)
  {
    if (scale == 0 || rest.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    RationalFn r;
    r.num_ = std::move(num);
    if (scale < 0) {
      scale = -scale;
      r.num_ = -r.num_;
    }
    r.scale_ = std::move(scale);
    r.qpow_ = qpow;
    if (qpow < 0) throw std::invalid_argument("RationalFn: negative q power in denominator");
    r.cyclo_ = std::move(cyclo);
    r.rest_ = std::move(rest);
    if (reduced && r.rest_ == IntPoly(1)) {
      for (auto it = r.cyclo_.begin(); it != r.cyclo_.end();)
        it = it->second == 0 ? r.cyclo_.erase(it) : std::next(it);
      r.reduce_content();
    } else {
      r.normalize();
    }
    return r;
  }

  static RationalFn q_power(long e)
  {
    if (e >= 0) return RationalFn(IntPoly::q_power(static_cast<std::size_t>(e)));
    return from_factored(IntPoly(1), 1, -e, {});
  }

  const IntPoly& num() const { return num_; }

  IntPoly den() const
  {
    IntPoly d = expand_phi_product(cyclo_) * rest_;
    d = d.shifted(static_cast<std::size_t>(qpow_));
    d *= scale_;
    return d;
  }

  const Integer& den_scale() const { return scale_; }
  long den_q_power() const { return qpow_; }
  const std::map<long, long>& den_cyclotomic() const { return cyclo_; }
  const IntPoly& den_rest() const { return rest_; }

  bool is_zero() const { return num_.is_zero(); }

  /// Multiplicity of Phi_d in the denominator.
  long den_phi_order(long d) const
  {
    long k = 0;
    if (auto it = cyclo_.find(d); it != cyclo_.end()) k += it->second;
    if (!rest_.is_constant()) k += phi_multiplicity(rest_, d);
    return k;
  }

  RationalFn operator-() const
  {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) { return combine(a, b, false); }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return combine(a, b, true); }

  friend RationalFn operator*(const RationalFn& a, const RationalFn& b)
  {
    if (a.is_zero() || b.is_zero()) return {};
    RationalFn r;
    r.num_ = a.num_ * b.num_;
    r.scale_ = a.scale_ * b.scale_;
    r.qpow_ = a.qpow_ + b.qpow_;
    r.cyclo_ = a.cyclo_;
    for (const auto& [d, e] : b.cyclo_) r.cyclo_[d] += e;
    r.rest_ = a.rest_ * b.rest_;
    r.normalize();
    return r;
  }

  RationalFn inverse() const
  {
    if (is_zero()) throw std::domain_error("RationalFn: division by the zero rational function");
    RationalFn r;
    r.num_ = den();
    // num_ and den() are already coprime, so no gcd is needed here
    IntPoly d = num_;
    std::size_t low = d.low_order();
    r.qpow_ = static_cast<long>(low);
    d = d.unshifted(low);
    Integer c = d.content();
    if (d.lead() < 0) c = -c;
    d = d.div_exact(c);
    if (c < 0) {
      c = -c;
      r.num_ = -r.num_;
    }
    r.scale_ = c;
    r.rest_ = std::move(d);
    Integer g = gcd(r.num_.content(), r.scale_);
    if (g != 1) {
      r.num_ = r.num_.div_exact(g);
      r.scale_ /= g;
    }
    return r;
  }

  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

  friend bool operator==(const RationalFn& a, const RationalFn& b)
  {
    return a.num_ == b.num_ && a.den() == b.den();
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

  Rational eval_at(const Rational& x) const
  {
    Rational d = den().eval(x);
    if (d == 0) throw PoleError("RationalFn: pole at q = " + x.get_str());
    return num_.eval(x) / d;
  }

  /// Re-runs normalization; a no-op on values built through the public API.
  RationalFn normalized() const
  {
    RationalFn r = *this;
    r.normalize();
    return r;
  }

  std::string to_string() const
  {
    IntPoly d = den();
    if (d == IntPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + d.to_string() + ")";
  }

 private:
  static Integer gcd(const Integer& a, const Integer& b)
  {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }

  void absorb_denominator(IntPoly den)
  {
    std::size_t low = den.low_order();
    qpow_ += static_cast<long>(low);
    den = den.unshifted(low);
    Integer c = den.content();
    if (den.lead() < 0) c = -c;
    den = den.div_exact(c);
    if (c < 0) {
      c = -c;
      num_ = -num_;
    }
    scale_ *= c;
    rest_ = rest_ * den;
  }

  void normalize()
  {
    if (num_.is_zero()) {
      scale_ = 1;
      qpow_ = 0;
      cyclo_.clear();
      rest_ = IntPoly(1);
      return;
    }
    if (qpow_ > 0) {
      auto k = std::min<std::size_t>(num_.low_order(), static_cast<std::size_t>(qpow_));
      num_ = num_.unshifted(k);
      qpow_ -= static_cast<long>(k);
    }
    for (auto it = cyclo_.begin(); it != cyclo_.end();) {
      auto& [d, e] = *it;
      if (e < 0) throw std::logic_error("RationalFn: negative cyclotomic exponent in denominator");
      while (e > 0 && num_.degree() >= euler_phi(d) && divide_by_phi(num_, d)) --e;
      it = e == 0 ? cyclo_.erase(it) : std::next(it);
    }
    if (!rest_.is_constant()) {
      IntPoly g = poly_gcd(num_, rest_);
      if (!g.is_constant()) {
        num_ = divides_exactly(g, num_).quotient;
        rest_ = divides_exactly(g, rest_).quotient;
      }
    }
    // move rest's content and sign into scale and num
    Integer c = rest_.content();
    if (rest_.lead() < 0) c = -c;
    if (c != 1) {
      rest_ = rest_.div_exact(c);
      if (c < 0) {
        c = -c;
        num_ = -num_;
      }
      scale_ *= c;
    }
    reduce_content();
  }

  void reduce_content()
  {
    if (num_.is_zero()) {
      scale_ = 1;
      return;
    }
    Integer g = gcd(num_.content(), scale_);
    if (g != 1) {
      num_ = num_.div_exact(g);
      scale_ /= g;
    }
  }

  static RationalFn combine(const RationalFn& a, const RationalFn& b, bool subtract)
  {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    RationalFn r;
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.scale_.get_mpz_t(), b.scale_.get_mpz_t());
    r.scale_ = l;
    r.qpow_ = std::max(a.qpow_, b.qpow_);
    r.cyclo_ = a.cyclo_;
    for (const auto& [d, e] : b.cyclo_) r.cyclo_[d] = std::max(r.cyclo_[d], e);

    IntPoly ca_rest(1), cb_rest(1);
    if (a.rest_ == b.rest_) {
      r.rest_ = a.rest_;
    } else if (a.rest_.is_constant()) {
      r.rest_ = b.rest_;
      ca_rest = b.rest_;
    } else if (b.rest_.is_constant()) {
      r.rest_ = a.rest_;
      cb_rest = a.rest_;
    } else {
      IntPoly g = poly_gcd(a.rest_, b.rest_);
      ca_rest = divides_exactly(g, b.rest_).quotient;
      cb_rest = divides_exactly(g, a.rest_).quotient;
      r.rest_ = a.rest_ * ca_rest;
    }

    auto lift = [&](const RationalFn& x, const IntPoly& rest_cofactor) {
      std::map<long, long> missing;
      for (const auto& [d, e] : r.cyclo_) {
        auto it = x.cyclo_.find(d);
        long have = it == x.cyclo_.end() ? 0 : it->second;
        if (e > have) missing[d] = e - have;
      }
      IntPoly f = x.num_;
      multiply_by_phi_product(f, missing);
      if (!rest_cofactor.is_constant()) f = f * rest_cofactor;
      f = f.shifted(static_cast<std::size_t>(r.qpow_ - x.qpow_));
      f *= Integer(l / x.scale_);
      return f;
    };
    r.num_ = lift(a, ca_rest);
    if (subtract) r.num_ -= lift(b, cb_rest);
    else r.num_ += lift(b, cb_rest);
    r.normalize();
    return r;
  }

  IntPoly num_;
  Integer scale_ = 1;
  long qpow_ = 0;
  std::map<long, long> cyclo_;
  IntPoly rest_ = IntPoly(1);
};

}  // namespace qcongr
