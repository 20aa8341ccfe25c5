#pragma once

#include "qcongr/ring/cyclo_basis.hpp"
#include "qcongr/ring/int_poly.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcongr {

/// Primes in [lo, hi] by trial division.
inline std::vector<long> primes_between(long lo, long hi)
{
  std::vector<long> out;
  for (long n = std::max(lo, 2L); n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

/// p-adic valuation; nullopt stands for +infinity (x = 0).
inline std::optional<long> v_p(const Rational& x, long p)
{
  if (!is_prime(p)) throw std::invalid_argument("v_p: " + std::to_string(p) + " is not prime");
  if (x == 0) return std::nullopt;
  Integer pp(p);
  auto count = [&](Integer a) {
    long v = 0;
    while (mpz_divisible_p(a.get_mpz_t(), pp.get_mpz_t())) {
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t());
      ++v;
    }
    return v;
  };
  return count(x.get_num()) - count(x.get_den());
}

struct PadicVerdict {
  std::string id;
  long prime = 0;
  long r = 1;
  long required_order = 0;
  std::optional<long> observed_order;  // nullopt = +infinity
  bool holds = false;
  Rational lhs = 0;
  Rational rhs = 0;
  std::string detail;
};

namespace padic_detail {

inline Integer ipow(long base, unsigned long e)
{
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
  if (base < 0 && e % 2 == 1) r = -r;
  return r;
}

inline Integer central_binomial(long k)
{
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
  return r;
}

inline long int_pow(long p, long r)
{
  long v = 1;
  for (long i = 0; i < r; ++i) v *= p;
  return v;
}

inline Rational sum_to(long upper, const std::function<Rational(long)>& f)
{
  Rational s = 0;
  for (long k = 0; k <= upper; ++k) s += f(k);
  return s;
}

inline PadicVerdict judge(std::string id, long p, long r, long required, const Rational& lhs, const Rational& rhs)
{
  PadicVerdict v;
  v.id = std::move(id);
  v.prime = p;
  v.r = r;
  v.required_order = required;
  v.lhs = lhs;
  v.rhs = rhs;
  v.observed_order = v_p(lhs - rhs, p);
  v.holds = !v.observed_order || *v.observed_order >= required;
  return v;
}

inline std::string order_text(const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("inf"); }

inline void require(bool ok, const std::string& what)
{
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace padic_detail

namespace padic_term {

/// (3k+1) C(2k,k)^3 / 16^k
inline Rational zudilin1(long k)
{
  Integer c = padic_detail::central_binomial(k);
  return make_rational((3 * k + 1) * c * c * c, padic_detail::ipow(16, static_cast<unsigned long>(k)));
}

/// (3k+1) C(2k,k)^3 (-1)^k / 8^k
inline Rational zudilin3(long k)
{
  Integer c = padic_detail::central_binomial(k);
  return make_rational((3 * k + 1) * c * c * c, padic_detail::ipow(-8, static_cast<unsigned long>(k)));
}

/// (10k^2+6k+1) C(2k,k)^5 / 256^k
inline Rational zudilin2(long k)
{
  Integer c = padic_detail::central_binomial(k);
  Integer c5 = c * c * c * c * c;
  return make_rational((10 * k * k + 6 * k + 1) * c5, padic_detail::ipow(256, static_cast<unsigned long>(k)));
}

/// (6k+1) C(2k,k)^3 / 256^k
inline Rational swisher(long k)
{
  Integer c = padic_detail::central_binomial(k);
  return make_rational((6 * k + 1) * c * c * c, padic_detail::ipow(256, static_cast<unsigned long>(k)));
}

/// (1/2)_k / k! as an exact rational, straight from the rising factorial
inline Rational half_pochhammer_ratio(long k)
{
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= make_rational(2 * i + 1, 2 * (i + 1));
  return r;
}

}  // namespace padic_term

inline const std::vector<std::string>& divergent_ids()
{
  static const std::vector<std::string> ids = {"div1", "div2", "div3", "div_gen_r1", "div_gen_r2", "div3_pr", "sun_hu"};
  return ids;
}

/// Truncated divergent-series sums against their stated right sides.
inline PadicVerdict check_divergent(const std::string& id, long p, long r = 1)
{
  using namespace padic_detail;
  require(is_prime(p), id + ": p = " + std::to_string(p) + " is not prime");
  require(r >= 1, id + ": r must be >= 1");
  const long pr = int_pow(p, r);
  const Rational sgn = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
  if (id == "div1" || id == "div2" || id == "div3") require(r == 1, id + ": only r = 1 is stated");
  if (id == "div1") {
    require(p > 2, "div1 needs p > 2");
    return judge(id, p, r, 3, sum_to((p - 1) / 2, padic_term::zudilin1), Rational(p));
  }
  if (id == "div2") {
    require(p > 3, "div2 needs p > 3");
    PadicVerdict v = judge(id, p, r, 5, sum_to((p - 1) / 2, padic_term::zudilin2), Rational(p * p));
    Rational alt = sum_to((p - 1) / 2, [](long k) { return k % 2 ? -padic_term::zudilin2(k) : padic_term::zudilin2(k); });
    v.detail = "with (-1)^k weights: v_p = " + order_text(v_p(alt - p * p, p));
    return v;
  }
  if (id == "div3") {
    require(p > 2, "div3 needs p > 2");
    return judge(id, p, r, 3, sum_to((p - 1) / 2, padic_term::zudilin3), sgn * p);
  }
  if (id == "div_gen_r1") {
    require(p > 2, "div_gen_r1 needs p > 2");
    return judge(id, p, r, r + 2, sum_to((pr - 1) / 2, padic_term::zudilin1), Rational(pr));
  }
  if (id == "div_gen_r2") {
    require(p > 2, "div_gen_r2 needs p > 2");
    return judge(id, p, r, r + 2, sum_to(pr - 1, padic_term::zudilin1), Rational(pr));
  }
  if (id == "div3_pr") {
    require(p > 2, "div3_pr needs p > 2");
    Rational lhs = sum_to((pr - 1) / 2, padic_term::zudilin3);
    PadicVerdict v = judge(id, p, r, r + 2, lhs, sgn * pr);
    const Rational sgn_r = ((pr - 1) / 2) % 2 == 0 ? 1 : -1;
    v.detail = "with sign (-1)^((p^r-1)/2): v_p = " + order_text(v_p(lhs - sgn_r * pr, p));
    return v;
  }
  if (id == "sun_hu") {
    require(p > 3, "sun_hu needs p > 3");
    return judge(id, p, r, r + 3, sum_to(pr - 1, padic_term::zudilin1), Rational(pr));
  }
  throw std::invalid_argument("check_divergent: unknown id " + id);
}

struct DivisibilityVerdict {
  std::string id;
  long n = 0;
  Integer sum = 0;
  Integer modulus = 0;
  bool holds = false;
};

/// sum_{k=0}^{n} (3k+1) C(2k,k)^3 w^{n-k}, w = 16 (sun1) or -8 (sun2),
/// against the modulus 4(2n+1) C(2n,n).
inline DivisibilityVerdict check_sun_binomial(const std::string& id, long n)
{
  using namespace padic_detail;
  require(n >= 0, id + ": n must be >= 0");
  long w = 0;
  if (id == "sun1") w = 16;
  else if (id == "sun2") w = -8;
  else throw std::invalid_argument("check_sun_binomial: unknown id " + id);
  DivisibilityVerdict v;
  v.id = id;
  v.n = n;
  for (long k = 0; k <= n; ++k) {
    Integer c = central_binomial(k);
    v.sum += (3 * k + 1) * c * c * c * ipow(w, static_cast<unsigned long>(n - k));
  }
  v.modulus = 4 * (2 * n + 1) * central_binomial(n);
  v.holds = mpz_divisible_p(v.sum.get_mpz_t(), v.modulus.get_mpz_t()) != 0;
  return v;
}

/// sum_{k=1}^{p-1} C(2k,k)/k == 0 mod p^2.
inline PadicVerdict check_sun_tauraso(long p)
{
  using namespace padic_detail;
  require(is_prime(p), "st: p = " + std::to_string(p) + " is not prime");
  require(p > 3, "st needs p > 3");
  Rational s = 0;
  for (long k = 1; k < p; ++k) s += make_rational(central_binomial(k), Integer(k));
  return judge("st", p, 1, 2, s, 0);
}

/// Dense polynomial in x with rational coefficients, just enough for the
/// binomial identity below.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(const Rational& c) { if (c != 0) c_.push_back(c); }

  /// x + a
  static RationalPoly x_plus(const Rational& a)
  {
    RationalPoly p;
    p.c_ = {a, Rational(1)};
    p.trim();
    return p;
  }

  const std::vector<Rational>& coeffs() const { return c_; }

  RationalPoly& operator+=(const RationalPoly& o)
  {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b)
  {
    RationalPoly r;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }

  friend RationalPoly operator*(RationalPoly a, const Rational& s)
  {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
  }

  Rational eval(const Rational& x) const
  {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

 private:
  void trim()
  {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// C(x + a, k) = (x+a)(x+a-1)...(x+a-k+1)/k! as a polynomial in x.
inline RationalPoly generalized_binomial(const Rational& a, long k)
{
  RationalPoly r(Rational(1));
  Integer fact = 1;
  for (long i = 0; i < k; ++i) {
    r = r * RationalPoly::x_plus(a - i);
    fact *= i + 1;
  }
  return r * Rational(1 / Rational(fact));
}

struct IdentityVerdict {
  long n = 0;
  bool polynomial_equal = false;
  bool specialization_equal = false;
  Rational specialization_value = 0;
  bool holds() const { return polynomial_equal && specialization_equal; }
};

/// sum_k C(n,k)^2 C(x+k,2n+1) = 1/((4n+2)C(2n,n)) sum_k (2x-3k) C(x,k)^2 C(2k,k),
/// coefficientwise in x, plus the value at x = -1/2.
inline IdentityVerdict check_mao_sun_identity(long n)
{
  using namespace padic_detail;
  require(n >= 0, "mao_sun: n must be >= 0");
  RationalPoly lhs, rhs;
  for (long k = 0; k <= n; ++k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    lhs += generalized_binomial(Rational(k), 2 * n + 1) * Rational(b * b);
    RationalPoly cx = generalized_binomial(Rational(0), k);
    RationalPoly lin = RationalPoly::x_plus(Rational(-3 * k, 2)) * Rational(2);  // 2x - 3k
    rhs += lin * cx * cx * Rational(central_binomial(k));
  }
  rhs = rhs * Rational(1 / Rational((4 * n + 2) * central_binomial(n)));
  IdentityVerdict v;
  v.n = n;
  v.polynomial_equal = lhs == rhs;
  Rational x = make_rational(-1, 2);
  v.specialization_value = lhs.eval(x);
  v.specialization_equal = v.specialization_value == rhs.eval(x);
  return v;
}

inline const std::vector<std::string>& lift_ids()
{
  static const std::vector<std::string> ids = {"conj5a", "conj5b", "conj5c", "conj5d", "swisher_j3"};
  return ids;
}

/// Prime-power lifts: a sum to p^r-ish bounds against p times the sum to the
/// p^{r-1}-ish bound, exactly as displayed (delta_{p,3} adjustments included).
/// For conj5c/conj5d the right side uses the non-alternating summand as
/// displayed; the valuation with the alternating summand instead is appended
/// to `detail`.
inline PadicVerdict check_lift_conjectures(const std::string& id, long p, long r)
{
  using namespace padic_detail;
  require(is_prime(p) && p > 2, id + ": p must be an odd prime");
  require(r >= 1, id + ": r must be >= 1");
  const long pr = int_pow(p, r);
  const long pr1 = int_pow(p, r - 1);
  const long delta = p == 3 ? 1 : 0;
  const Rational sgn = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
  if (id == "conj5a")
    return judge(id, p, r, 3 * r, sum_to((pr - 1) / 2, padic_term::zudilin1),
                 p * sum_to((pr1 - 1) / 2, padic_term::zudilin1));
  if (id == "conj5b")
    return judge(id, p, r, 4 * r - delta, sum_to(pr - 1, padic_term::zudilin1), p * sum_to(pr1 - 1, padic_term::zudilin1));
  if (id == "conj5c" || id == "conj5d") {
    const bool half = id == "conj5c";
    const long upper = half ? (pr - 1) / 2 : pr - 1;
    const long upper1 = half ? (pr1 - 1) / 2 : pr1 - 1;
    const long required = half ? 3 * r + delta : 3 * r;
    Rational lhs = sum_to(upper, padic_term::zudilin3);
    PadicVerdict v = judge(id, p, r, required, lhs, sgn * p * sum_to(upper1, padic_term::zudilin1));
    auto alt = v_p(lhs - sgn * p * sum_to(upper1, padic_term::zudilin3), p);
    v.detail = "alternating right side: v_p = " + order_text(alt);
    return v;
  }
  if (id == "swisher_j3") {
    require(p > 3, "swisher_j3 needs p > 3");
    return judge(id, p, r, 4 * r, sum_to((pr - 1) / 2, padic_term::swisher),
                 sgn * p * sum_to((pr1 - 1) / 2, padic_term::swisher));
  }
  throw std::invalid_argument("check_lift_conjectures: unknown id " + id);
}

}  // namespace qcongr
