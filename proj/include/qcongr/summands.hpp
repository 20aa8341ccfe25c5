#pragma once

#include "qcongr/qfactor.hpp"

#include <stdexcept>
#include <string>

/// Factored summands and closed forms shared by the WZ-pair checks and the
/// statement suites. Every builder returns a Term, so sums go through
/// sum_terms and never expand a summand on its own.
namespace qcongr {

/// A parity-dependent exponent came out non-integral.
struct FractionalExponent : std::domain_error {
  using std::domain_error::domain_error;
};

/// num / den as an exact integer, or FractionalExponent.
inline long exact_quotient(long num, long den, const std::string& what)
{
  if (den == 0) throw std::invalid_argument("exact_quotient: zero denominator");
  if (num % den != 0)
    throw FractionalExponent(what + ": " + std::to_string(num) + "/" + std::to_string(den) + " is not an integer");
  return num / den;
}

namespace sym {

inline Term qi(long m) { return Term::q_int(m); }
inline Term qp(long e) { return Term::q_power(e); }
/// (q^a;q^b)_n
inline Term P(long a, long b, long n) { return poch_term(poch(a, b, n)); }
/// (-q^a;q^b)_n
inline Term NP(long a, long b, long n) { return poch_term(neg_poch(a, b, n)); }
/// (q;q)_n
inline Term QF(long n) { return poch_term(qfact(n)); }
inline Term B(long M, long N, long step = 1) { return qbinom_term(M, N, step); }
inline Term sign(long k) { return Term(k % 2 == 0 ? 1 : -1); }
/// (1 - q)^e
inline Term one_minus_q(long e) { return Term::one_minus_qpow(1).pow(e); }

}  // namespace sym

namespace summand {

using namespace sym;

/// [3k+1] (q;q^2)_k^3 q^{-C(k+1,2)} / ((q;q)_k^2 (q^2;q^2)_k)
inline Term div_wz(long k) { return qi(3 * k + 1) * P(1, 2, k).pow(3) * qp(-binom2(k + 1)) / (QF(k).pow(2) * P(2, 2, k)); }

/// (-1)^k [3k+1] (q;q^2)_k^3 / (q;q)_k^3
inline Term zudilin3(long k) { return sign(k) * qi(3 * k + 1) * P(1, 2, k).pow(3) / QF(k).pow(3); }

/// (-1)^k [3k+1] C(2k,k)^3 (-q;q)_n^3 / (-q;q)_k^3
inline Term sun2(long n, long k) { return sign(k) * qi(3 * k + 1) * B(2 * k, k).pow(3) * NP(1, 1, n).pow(3) / NP(1, 1, k).pow(3); }

/// [3k+1] C(2k,k)^3 (-q;q)_n^4 / (-q;q)_k^4 q^{-C(k+1,2)}
inline Term sun1(long n, long k)
{
  return qi(3 * k + 1) * B(2 * k, k).pow(3) * NP(1, 1, n).pow(4) / NP(1, 1, k).pow(4) * qp(-binom2(k + 1));
}

/// [3k] / [2k]^2 C(2k,k) q^{-C(k,2)}
inline Term st(long k) { return qi(3 * k) / qi(2 * k).pow(2) * B(2 * k, k) * qp(-binom2(k)); }

/// (-1)^k q^{k^2} [4k+1] (q;q^2)_k^3 / (q^2;q^2)_k^3
inline Term hamme(long k) { return sign(k) * qp(k * k) * qi(4 * k + 1) * P(1, 2, k).pow(3) / P(2, 2, k).pow(3); }

/// [4k+1] (q;q^2)_k^3 / (q^2;q^2)_k^3 q^{k(n^2-2nk-n-2)/4}
inline Term hamme_shifted(long n, long k)
{
  long e = exact_quotient(k * (n * n - 2 * n * k - n - 2), 4, "exponent k(n^2-2nk-n-2)/4");
  return qi(4 * k + 1) * P(1, 2, k).pow(3) / P(2, 2, k).pow(3) * qp(e);
}

/// (-1)^k [n+3k] (-q^{n+1};q)_{k-1} / [2k] C(2k,k), k >= 1
inline Term guillera_companion(long n, long k) { return sign(k) * qi(n + 3 * k) * NP(n + 1, 1, k - 1) / qi(2 * k) * B(2 * k, k); }

/// q^{-C(n-2k+1,2)} / ([2k]^2 C(n,k)_{q^2}^2)
inline Term staver_inner(long n, long k) { return qp(-binom2(n - 2 * k + 1)) / (qi(2 * k).pow(2) * B(n, k, 2).pow(2)); }

/// (1 - q^{2k-n-1}) q^{-C(n-2k+1,2)} / ([2k]^2 C(n,k)_{q^2}^2)
inline Term staver_antisym(long n, long k) { return Term::one_minus_qpow(2 * k - n - 1) * staver_inner(n, k); }

/// q^k / [2k]^2
inline Term lemma5_scaled(long k) { return qp(k) / qi(2 * k).pow(2); }

/// q^k / (1 - q^{2k})^2
inline Term lemma5_unscaled(long k) { return qp(k) / Term::one_minus_qpow(2 * k).pow(2); }

/// (q;q^2)_n (q^{2k+1};q^2)_{n-1}^2 / (q;q)_{n-1}^3
inline Term lemma3_full(long n, long k) { return P(1, 2, n) * P(2 * k + 1, 2, n - 1).pow(2) / QF(n - 1).pow(3); }

/// (q;q^2)_{(n+1)/2} (q^{2k+1};q^2)_{(n-1)/2}^2 / (q;q)_{(n-1)/2}^3
inline Term lemma3_half(long n, long k)
{
  long h = (n - 1) / 2;
  return P(1, 2, h + 1) * P(2 * k + 1, 2, h).pow(2) / QF(h).pow(3);
}

/// [n] C(2n-2k,n-1) (q;q^2)_n (q;q^2)_{n-k} / ((q;q)_n (q^2;q^2)_{n-k})
inline Term lemma4(long n, long k) { return qi(n) * B(2 * n - 2 * k, n - 1) * P(1, 2, n) * P(1, 2, n - k) / (QF(n) * P(2, 2, n - k)); }

/// q^{m - C(j+1,2) - (2j+1)(m-1)/2}; m odd
inline Term reduce_power(long m, long j) { return qp(m - binom2(j + 1) - (2 * j + 1) * exact_quotient(m - 1, 2, "(m-1)/2")); }

/// q^m [3j] (q;q^2)_j (q^m;q^2)_j^2 q^{-C(j+1,2)-(2j+1)(m-1)/2} / ((q;q)_j^2 (q^2;q^2)_j)
inline Term reduce3(long m, long j) { return qi(3 * j) * P(1, 2, j) * P(m, 2, j).pow(2) * reduce_power(m, j) / (QF(j).pow(2) * P(2, 2, j)); }

/// [3j] (1-q)^2 (q;q^2)_j (q^{m+2};q^2)_{j-1}^2 q^{m-C(j+1,2)-(2j+1)(m-1)/2} / ((q;q)_j^2 (q^2;q^2)_j)
inline Term reduce1(long m, long j)
{
  return qi(3 * j) * one_minus_q(2) * P(1, 2, j) * P(m + 2, 2, j - 1).pow(2) * reduce_power(m, j) / (QF(j).pow(2) * P(2, 2, j));
}

}  // namespace summand
}  // namespace qcongr
