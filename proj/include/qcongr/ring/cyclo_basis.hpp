#pragma once

// Low-level arithmetic against cyclotomic factors expressed through
// binomials: with Psi_1 = 1 - q and Psi_d = Phi_d for d > 1,
//   1 - q^m = prod_{d | m} Psi_d,   Psi_d = prod_{j | d} (1 - q^j)^mu(d/j).
// Multiplying or dividing by 1 - q^j costs one pass of additions, so every
// product of cyclotomic polynomials is built and tested without dense
// multiplication.

#include "qcongr/ring/int_poly.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace qcongr {

inline std::vector<long> divisors(long n)
{
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline int mobius(long n)
{
  if (n < 1) throw std::invalid_argument("mobius: n must be positive");
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

inline long euler_phi(long n)
{
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

inline bool is_prime(long n)
{
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Exponents f_j with prod_d Psi_d^{e_d} = prod_j (1 - q^j)^{f_j}.
inline std::map<long, long> psi_to_binomials(const std::map<long, long>& psi)
{
  std::map<long, long> out;
  for (const auto& [d, e] : psi) {
    if (e == 0) continue;
    for (long j : divisors(d)) {
      int mu = mobius(d / j);
      if (mu != 0) out[j] += mu * e;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Applies prod_j (1 - q^j)^{f_j} to f in place, multiplications first so
/// every intermediate stays a polynomial whenever the final result is one.
/// Returns false if some division is inexact.
inline bool apply_binomials(IntPoly& f, const std::map<long, long>& f_exp)
{
  for (const auto& [j, e] : f_exp)
    for (long i = 0; i < e; ++i) f.mul_one_minus_qpow(static_cast<std::size_t>(j));
  for (const auto& [j, e] : f_exp)
    for (long i = 0; i < -e; ++i)
      if (!f.div_one_minus_qpow(static_cast<std::size_t>(j))) return false;
  return true;
}

/// sign(d) * Phi_d = Psi_d, i.e. Phi_1 = q - 1 = -(1 - q).
inline int phi_psi_sign(long d) { return d == 1 ? -1 : 1; }

/// f <- f * prod_d Phi_d^{e_d} in place, nonnegative exponents.
inline void multiply_by_phi_product(IntPoly& f, const std::map<long, long>& phi)
{
  long sign_flips = 0;
  std::map<long, long> nonneg;
  for (const auto& [d, e] : phi) {
    if (e < 0) throw std::invalid_argument("multiply_by_phi_product: negative exponent");
    if (e == 0) continue;
    nonneg[d] = e;
    if (d == 1) sign_flips += e;
  }
  if (!apply_binomials(f, psi_to_binomials(nonneg)))
    throw std::logic_error("multiply_by_phi_product: inexact binomial division");
  if (sign_flips % 2) f = -f;
}

/// prod_d Phi_d^{e_d} for nonnegative exponents, expanded.
inline IntPoly expand_phi_product(const std::map<long, long>& phi)
{
  IntPoly f(1);
  multiply_by_phi_product(f, phi);
  return f;
}

/// Divides f by Phi_d in place if Phi_d | f; otherwise leaves f untouched
/// and returns false.
inline bool divide_by_phi(IntPoly& f, long d)
{
  if (f.is_zero()) return true;
  IntPoly g = f;
  std::map<long, long> inv;
  for (long j : divisors(d)) {
    int mu = mobius(d / j);
    if (mu != 0) inv[j] = -mu;
  }
  if (!apply_binomials(g, inv)) return false;
  if (d == 1) g = -g;
  f = std::move(g);
  return true;
}

/// Multiplicity of Phi_d in a nonzero polynomial f.
inline long phi_multiplicity(IntPoly f, long d)
{
  if (f.is_zero()) throw std::domain_error("phi_multiplicity: zero polynomial");
  long k = 0;
  while (f.degree() >= euler_phi(d) && divide_by_phi(f, d)) ++k;
  return k;
}

}  // namespace qcongr
