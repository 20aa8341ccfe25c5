#pragma once

#include "qcongr/qfactor/cyclotomic.hpp"
#include "qcongr/qfactor/term.hpp"
#include "qcongr/ring/rational_fn.hpp"

#include <stdexcept>
#include <string>

namespace qcongr {

/// (sign * q^shift; q^step)_length = prod_{i < length} (1 - sign * q^{shift + step*i}).
struct QPochSpec {
  int sign = 1;  // +1 or -1
  long shift = 1;
  long step = 1;
  long length = 0;

  void validate() const
  {
    if (sign != 1 && sign != -1) throw std::invalid_argument("QPochSpec: sign must be +1 or -1");
    if (step < 1) throw std::invalid_argument("QPochSpec: step must be >= 1");
    if (length < 0) throw std::invalid_argument("QPochSpec: negative length");
  }

  std::string to_string() const
  {
    std::string a = sign < 0 ? "-q^" : "q^";
    return "(" + a + std::to_string(shift) + ";q^" + std::to_string(step) + ")_" + std::to_string(length);
  }
};

/// C(x, 2) = x(x-1)/2 for any integer x.
inline long binom2(long x) { return x * (x - 1) / 2; }

/// (q;q)_n
inline QPochSpec qfact(long n) { return {1, 1, 1, n}; }
/// (q^a;q^b)_n
inline QPochSpec poch(long a, long b, long n) { return {1, a, b, n}; }
/// (-q^a;q^b)_n
inline QPochSpec neg_poch(long a, long b, long n) { return {-1, a, b, n}; }

/// [n] = 1 + q + ... + q^{n-1}
inline IntPoly q_int(long n)
{
  if (n < 0) throw std::invalid_argument("q_int: negative n");
  return IntPoly(std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)));
}

/// Expanded q-shifted factorial; the shift must be nonnegative so the
/// result is a polynomial.
inline IntPoly q_pochhammer(const QPochSpec& s)
{
  s.validate();
  if (s.shift < 0) throw std::invalid_argument("q_pochhammer: negative shift");
  IntPoly f(1);
  for (long i = 0; i < s.length; ++i) {
    long e = s.shift + s.step * i;
    if (e == 0) {
      if (s.sign > 0) return {};
      f *= Integer(2);
    } else if (s.sign > 0) {
      f.mul_one_minus_qpow(static_cast<std::size_t>(e));
    } else {
      f.mul_one_plus_qpow(static_cast<std::size_t>(e));
    }
  }
  return f;
}

/// Factored q-shifted factorial; any integer shift is accepted.
inline Term poch_term(const QPochSpec& s)
{
  s.validate();
  Term t(1);
  for (long i = 0; i < s.length; ++i) {
    long e = s.shift + s.step * i;
    t *= s.sign > 0 ? Term::one_minus_qpow(e) : Term::one_plus_qpow(e);
    if (t.is_zero()) break;
  }
  return t;
}

/// Gaussian binomial in base q^step as a factored term; zero unless 0 <= N <= M.
inline Term qbinom_term(long M, long N, long step = 1)
{
  if (step < 1) throw std::invalid_argument("q_binomial: step must be >= 1");
  if (N < 0 || N > M) return {};
  return poch_term(poch(step, step, M)) /
         (poch_term(poch(step, step, N)) * poch_term(poch(step, step, M - N)));
}

/// Gaussian binomial in base q^step, expanded by exact binomial divisions.
inline IntPoly q_binomial(long M, long N, long step = 1)
{
  if (step < 1) throw std::invalid_argument("q_binomial: step must be >= 1");
  if (N < 0 || N > M) return {};
  long k = std::min(N, M - N);
  IntPoly f(1);
  for (long j = M - k + 1; j <= M; ++j) f.mul_one_minus_qpow(static_cast<std::size_t>(step * j));
  for (long j = 1; j <= k; ++j)
    if (!f.div_one_minus_qpow(static_cast<std::size_t>(step * j)))
      throw std::logic_error("q_binomial: inexact division");
  return f;
}

/// Multiplicity of Phi_n in f: order in the numerator minus order in the
/// denominator, by repeated exact division.
inline long phi_order(const RationalFn& f, long n)
{
  if (f.is_zero()) throw std::domain_error("phi_order: order of zero is infinite");
  if (n < 1) throw std::invalid_argument("phi_order: n must be positive");
  return phi_multiplicity(f.num(), n) - f.den_phi_order(n);
}

inline long phi_order(const IntPoly& f, long n)
{
  if (f.is_zero()) throw std::domain_error("phi_order: order of zero is infinite");
  return phi_multiplicity(f, n);
}

/// Closed-form exponent of Phi_t in one of the three shapes
/// (q;q)_m, (q;q^2)_m, (q^{2k+1};q^2)_m, from floor sums.
inline long poch_phi_exponent(const QPochSpec& s, long t)
{
  s.validate();
  if (t <= 1) throw std::invalid_argument("poch_phi_exponent: t must exceed 1");
  const long m = s.length;
  if (s.sign == 1 && s.shift == 1 && s.step == 1) return m / t;
  if (s.sign == 1 && s.step == 2 && s.shift > 0 && s.shift % 2 == 1) {
    if (t % 2 == 0) throw std::invalid_argument("poch_phi_exponent: t must be odd for base q^2");
    const long k = (s.shift - 1) / 2;
    return (2 * m + 2 * k) / t + k / t - (m + k) / t - (2 * k) / t;
  }
  throw std::invalid_argument("poch_phi_exponent: unsupported shape " + s.to_string());
}

}  // namespace qcongr
