#pragma once

#include "qcongr/qfactor.hpp"
#include "qcongr/ring.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcongr {

enum class Verdict { holds, fails, not_applicable };

inline const char* to_string(Verdict v)
{
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

/// Outcome of one congruence (or exact identity) check.
struct CongruenceReport {
  Verdict verdict = Verdict::fails;
  std::string modulus_description;
  /// Phi_d order of the difference; nullopt when the difference is zero.
  std::map<long, std::optional<long>> observed_orders;
  std::map<long, long> required_orders;
  bool coprimality_ok = false;
  /// deg(num(a - b)) - deg(P) when the check holds, otherwise -1.
  long cofactor_degree = -1;
  /// Integer content of the numerator of the difference.
  Integer numerator_content = 0;
  std::chrono::nanoseconds elapsed{0};
  std::string detail;

  bool holds() const { return verdict == Verdict::holds; }
  bool not_applicable() const { return verdict == Verdict::not_applicable; }
};

/// A modulus P(q) = prod_d Phi_d^{k_d} * extra, with the cyclotomic part kept
/// factored. Integer constants in P never matter: divisibility is tested on
/// primitive parts.
struct Modulus {
  std::map<long, long> phi;
  IntPoly extra = IntPoly(1);
  std::string description;

  static Modulus phi_power(long n, long k)
  {
    Modulus m;
    m.phi[n] = k;
    m.description = "Phi_" + std::to_string(n) + "(q)^" + std::to_string(k);
    return m;
  }

  /// [n] * Phi_n(q)^k
  static Modulus qint_phi_power(long n, long k)
  {
    Modulus m;
    for (long t : divisors(n))
      if (t > 1) m.phi[t] += 1;
    m.phi[n] += k;
    m.description = "[" + std::to_string(n) + "]*Phi_" + std::to_string(n) + "(q)^" + std::to_string(k);
    return m;
  }

  /// From a factored polynomial term; the scalar coefficient is dropped.
  static Modulus from_term(const Term& t, std::string description)
  {
    if (t.is_zero()) throw std::invalid_argument("Modulus: zero");
    if (t.q_exponent() < 0) throw std::invalid_argument("Modulus: not a polynomial");
    Modulus m;
    for (const auto& [d, e] : t.phi_exponents()) {
      if (e < 0) throw std::invalid_argument("Modulus: not a polynomial");
      m.phi[d] = e;
    }
    if (t.q_exponent() > 0) m.extra = IntPoly::q_power(static_cast<std::size_t>(t.q_exponent()));
    m.description = std::move(description);
    return m;
  }

  IntPoly expand() const { return expand_phi_product(phi) * extra; }

  long degree() const
  {
    long deg = extra.degree();
    for (const auto& [d, e] : phi) deg += euler_phi(d) * e;
    return deg;
  }
};

namespace detail {

inline bool shares_factor(const RationalFn& d, const IntPoly& p)
{
  if (d.den_q_power() > 0 && p.coeff(0) == 0) return true;
  for (const auto& [k, e] : d.den_cyclotomic()) {
    IntPoly probe = p;
    if (e > 0 && divide_by_phi(probe, k)) return true;
  }
  if (!d.den_rest().is_constant() && !poly_gcd(d.den_rest(), p).is_constant()) return true;
  return false;
}

}  // namespace detail

/// a == b (mod P) in the sense: P | num(a - b) and gcd(den(a - b), P) = 1.
/// A difference whose reduced denominator shares a factor with P gives
/// Verdict::not_applicable. report_indices selects the Phi_d orders recorded.
inline CongruenceReport congruent_mod(const RationalFn& a, const RationalFn& b, const IntPoly& P,
                                      std::span<const long> report_indices = {})
{
  auto start = std::chrono::steady_clock::now();
  if (P.is_zero() || P.is_constant()) throw std::invalid_argument("congruent_mod: modulus must be nonconstant");
  CongruenceReport rep;
  rep.modulus_description = P.to_string();
  RationalFn d = a - b;
  for (long k : report_indices) rep.required_orders[k] = phi_order(P, k);
  rep.coprimality_ok = !detail::shares_factor(d, P);
  rep.numerator_content = d.num().content();
  if (d.is_zero()) {
    for (long k : report_indices) rep.observed_orders[k] = std::nullopt;
  } else {
    for (long k : report_indices) rep.observed_orders[k] = phi_order(d, k);
  }
  if (!rep.coprimality_ok) {
    rep.verdict = Verdict::not_applicable;
    rep.detail = "denominator of the difference shares a factor with the modulus";
  } else if (d.is_zero()) {
    rep.verdict = Verdict::holds;
    rep.cofactor_degree = 0;
  } else {
    auto r = divides_exactly(P, d.num());
    rep.verdict = r.divides ? Verdict::holds : Verdict::fails;
    if (r.divides) rep.cofactor_degree = r.quotient.degree();
  }
  rep.elapsed = std::chrono::steady_clock::now() - start;
  return rep;
}

/// Fast path for factored moduli. Orders are recorded for every cyclotomic
/// factor of the modulus.
inline CongruenceReport congruent_mod(const RationalFn& a, const RationalFn& b, const Modulus& M)
{
  auto start = std::chrono::steady_clock::now();
  if (M.degree() < 1) throw std::invalid_argument("congruent_mod: modulus must be nonconstant");
  CongruenceReport rep;
  rep.modulus_description = M.description;
  RationalFn d = a - b;
  rep.required_orders = M.phi;

  bool coprime = true;
  for (const auto& [k, e] : M.phi)
    if (e > 0 && d.den_phi_order(k) > 0) coprime = false;
  if (coprime && !M.extra.is_constant() && detail::shares_factor(d, M.extra)) coprime = false;
  rep.coprimality_ok = coprime;
  rep.numerator_content = d.num().content();

  bool divisible = true;
  IntPoly f = d.num();
  for (const auto& [k, e] : M.phi) {
    if (d.is_zero()) {
      rep.observed_orders[k] = std::nullopt;
      continue;
    }
    long order = 0;
    IntPoly g = f;
    while (g.degree() >= euler_phi(k) && divide_by_phi(g, k)) {
      ++order;
      if (order == e) f = g;  // strip exactly the required power
    }
    rep.observed_orders[k] = order - d.den_phi_order(k);
    if (order < e) divisible = false;
  }
  if (divisible && !d.is_zero() && !M.extra.is_constant()) divisible = divides_exactly(M.extra, f).divides;

  if (!coprime) {
    rep.verdict = Verdict::not_applicable;
    rep.detail = "denominator of the difference shares a factor with the modulus";
  } else {
    rep.verdict = divisible ? Verdict::holds : Verdict::fails;
    if (divisible) rep.cofactor_degree = d.is_zero() ? 0 : d.num().degree() - M.degree();
  }
  rep.elapsed = std::chrono::steady_clock::now() - start;
  return rep;
}

/// P = extra * Phi_n(q)^k; extra defaults to 1.
inline CongruenceReport congruent_mod_phi_power(const RationalFn& a, const RationalFn& b, long n, long k,
                                                const std::optional<IntPoly>& extra = std::nullopt)
{
  if (n < 1 || k < 1) throw std::invalid_argument("congruent_mod_phi_power: need n >= 1 and k >= 1");
  Modulus m = Modulus::phi_power(n, k);
  if (extra && !extra->is_constant()) {
    // peel cyclotomic factors of extra that divide n's divisors into the factored part
    IntPoly rest = extra->primitive_part();
    for (long t : divisors(n)) {
      while (rest.degree() >= euler_phi(t) && divide_by_phi(rest, t)) m.phi[t] += 1;
    }
    m.extra = rest;
    m.description = "(" + extra->to_string() + ")*" + m.description;
  }
  return congruent_mod(a, b, m);
}

/// Exact equality, reported in the same record shape.
inline CongruenceReport exact_equality(const RationalFn& a, const RationalFn& b)
{
  auto start = std::chrono::steady_clock::now();
  CongruenceReport rep;
  rep.modulus_description = "exact";
  rep.coprimality_ok = true;
  RationalFn d = a - b;
  rep.numerator_content = d.num().content();
  rep.verdict = d.is_zero() ? Verdict::holds : Verdict::fails;
  rep.cofactor_degree = d.is_zero() ? 0 : -1;
  rep.elapsed = std::chrono::steady_clock::now() - start;
  return rep;
}

}  // namespace qcongr
