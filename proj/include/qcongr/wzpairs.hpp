#pragma once

#include "qcongr/congruence.hpp"
#include "qcongr/summands.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcongr {

/// Which first-order difference relation a pair satisfies.
enum class WZShape {
  n_step,  // F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k)
  k_step,  // F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k)
};

struct WZPair {
  std::string name;
  WZShape shape;
  long n_min;
  long k_min;
  bool k_bounded_by_n;  // grid points need k <= n
  std::string domain;
  std::function<Term(long, long)> F;
  std::function<Term(long, long)> G;

  bool in_domain(long n, long k) const { return n >= n_min && k >= k_min && (!k_bounded_by_n || k <= n); }
};

namespace wz_detail {

using namespace sym;

// q-Staver pair; defined for 1 <= k <= n since C(n,k)_{q^2} sits in a denominator.
inline Term staver_F(long n, long k)
{
  return qi(n + 1) / Term(2) * B(2 * n + 1, n) * Term::one_plus_qpow(2 * k - n - 1) * qp(-binom2(n - 2 * k + 1)) /
         (qi(2 * k).pow(2) * B(n, k, 2).pow(2));
}

inline Term staver_G(long n, long k)
{
  return -(qi(3 * n - 2 * k + 5) / Term(2) * B(2 * n + 1, n) * Term::one_plus_qpow(n + 1) * qp(-binom2(n - 2 * k + 3)) /
           (qi(2 * k).pow(2) * B(n + 1, k, 2).pow(2)));
}

inline Term divergent_F(long n, long k)
{
  return qi(3 * n + 2 * k + 1) * P(1, 2, n) * P(2 * k + 1, 2, n).pow(2) * qp(-binom2(n + 1) - (2 * n + 1) * k) /
         (QF(n).pow(2) * P(2, 2, n));
}

// 1/(q^2;q^2)_a = 0 for negative a, so G(0,k) = 0.
inline Term divergent_G(long n, long k)
{
  if (n <= 0) return {};
  return -(Term::one_plus_qpow(n + 2 * k - 1) * P(1, 2, n) * P(2 * k + 1, 2, n - 1).pow(2) *
           qp(-binom2(n) - (2 * n - 1) * k) / (one_minus_q(1) * QF(n - 1).pow(2) * P(2, 2, n - 1)));
}

inline Term he_F(long n, long k)
{
  Term b = B(2 * n - 2 * k, n);
  if (b.is_zero()) return {};
  return sign(n) * qi(3 * n - 2 * k + 1) * b * P(1, 2, n) * P(1, 2, n - k) / (QF(n) * P(2, 2, n - k));
}

inline Term he_G(long n, long k)
{
  Term b = B(2 * n - 2 * k, n - 1);
  if (b.is_zero() || n == 0) return {};
  return sign(n + 1) * qi(n) * b * P(1, 2, n) * P(1, 2, n - k) * qp(n + 1 - 2 * k) / (QF(n) * P(2, 2, n - k));
}

}  // namespace wz_detail

inline const WZPair& staver_pair()
{
  static const WZPair p{"staver", WZShape::n_step, 1, 1, true, "1 <= k <= n", wz_detail::staver_F, wz_detail::staver_G};
  return p;
}

inline const WZPair& divergent1_pair()
{
  static const WZPair p{"divergent1", WZShape::k_step, 0, 0, false, "n >= 0, k >= 0", wz_detail::divergent_F,
                        wz_detail::divergent_G};
  return p;
}

inline const WZPair& he_pair()
{
  static const WZPair p{"he", WZShape::k_step, 0, 0, false, "n >= 0, k >= 0", wz_detail::he_F, wz_detail::he_G};
  return p;
}

inline std::vector<const WZPair*> all_pairs() { return {&staver_pair(), &divergent1_pair(), &he_pair()}; }

/// nullptr for an unknown name.
inline const WZPair* find_pair(const std::string& name)
{
  for (const WZPair* p : all_pairs())
    if (p->name == name) return p;
  return nullptr;
}

inline RationalFn eval_F(const WZPair& pair, long n, long k) { return pair.F(n, k).to_rational_fn(); }
inline RationalFn eval_G(const WZPair& pair, long n, long k) { return pair.G(n, k).to_rational_fn(); }

struct RelationResult {
  bool holds = true;
  std::optional<std::pair<long, long>> witness;  // first failing (n, k)
  long points = 0;
};

/// True when the pair's relation holds at (n, k), as exact equality.
inline bool relation_at(const WZPair& pair, long n, long k)
{
  std::vector<Term> t;
  if (pair.shape == WZShape::n_step) {
    t = {pair.F(n + 1, k), -pair.F(n, k), -pair.G(n, k + 1), pair.G(n, k)};
  } else {
    t = {pair.F(n, k - 1), -pair.F(n, k), -pair.G(n + 1, k), pair.G(n, k)};
  }
  return sum_terms(t).is_zero();
}

/// Checks the relation at every in-domain point of [n_min, n_max] x [k_min, k_max].
inline RelationResult verify_relation(const WZPair& pair, long n_max, long k_max)
{
  if (n_max < 1 || k_max < 1) throw std::invalid_argument("verify_relation: grid bounds must be >= 1");
  RelationResult r;
  for (long n = pair.n_min; n <= n_max; ++n) {
    for (long k = pair.k_min; k <= k_max; ++k) {
      if (!pair.in_domain(n, k)) continue;
      ++r.points;
      if (!relation_at(pair, n, k)) {
        r.holds = false;
        r.witness = {n, k};
        return r;
      }
    }
  }
  return r;
}

/// Outcome of the summed (telescoped) consequences of a pair at one size.
struct TelescopeResult {
  bool holds = true;
  long checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what)
  {
    ++checks;
    if (!ok) {
      holds = false;
      failures.push_back(what);
    }
  }
};

namespace wz_detail {

inline RationalFn sum_range(long lo, long hi, const std::function<Term(long)>& f)
{
  std::vector<Term> t;
  for (long i = lo; i <= hi; ++i) t.push_back(f(i));
  return sum_terms(t);
}

inline std::string tag(const std::string& what, long a) { return what + " at " + std::to_string(a); }
inline std::string tag(const std::string& what, long a, long b)
{
  return what + " at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Step from n = m-1 to n = m of the partial sums of the q-Staver F.
inline void staver_telescope(long m, TelescopeResult& out)
{
  const WZPair& p = staver_pair();
  long n = m - 1;
  Term closed = summand::st(m);
  RationalFn step = wz_detail::sum_range(1, m, [&](long k) { return p.F(m, k); }) -
                    wz_detail::sum_range(1, n, [&](long k) { return p.F(n, k); });
  out.expect(step == closed.to_rational_fn(), tag("partial-sum step", m));
  // boundary form F(n+1,n+1) + G(n,n+1) - G(n,1)
  RationalFn boundary = sum_terms({p.F(m, m), p.G(n, m), -p.G(n, 1)});
  out.expect(boundary == closed.to_rational_fn(), tag("boundary terms", m));
  // the summed pair reproduces the Staver-type sum
  RationalFn lhs = sum_range(1, m, summand::st);
  RationalFn rhs = sum_range(1, m, [&](long k) { return p.F(m, k); });
  out.expect(lhs == rhs, tag("symmetrized identity", m));
}

// Modulus [m] Phi_m(q)^2 as used by the odd-m telescoping arguments.
inline bool vanishes_mod_qint_phi2(const Term& t, long m)
{
  return congruent_mod(t.to_rational_fn(), RationalFn(0), Modulus::qint_phi_power(m, 2)).holds();
}

inline Term divergent_G_closed(long m, long k)
{
  long h = (m - 1) / 2;
  return -(Term::one_plus_qpow(h + 2 * k) * P(1, 2, h + 1) * P(2 * k + 1, 2, h).pow(2) *
           qp(-exact_quotient(m * m - 1, 8, "(m^2-1)/8") - m * k) /
           (one_minus_q(1) * QF(h).pow(3) * NP(1, 1, h)));
}

inline void divergent_telescope(long m, TelescopeResult& out)
{
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("telescope_check(divergent1): m must be odd and positive");
  const WZPair& p = divergent1_pair();
  const long h = (m - 1) / 2;
  for (long upper : {h + 1, m}) {
    for (long k = 1; k < upper; ++k) {
      RationalFn lhs = sum_range(0, upper - 1, [&](long n) { return p.F(n, k - 1); }) -
                       sum_range(0, upper - 1, [&](long n) { return p.F(n, k); });
      out.expect(lhs == eval_G(p, upper, k), tag("summed relation, upper " + std::to_string(upper), m, k));
    }
  }
  out.expect(sum_range(0, h, summand::div_wz) == sum_range(0, h, [&](long n) { return p.F(n, 0); }),
             tag("half sum equals sum of F(n,0)", m));
  out.expect(sum_range(0, m - 1, summand::div_wz) == sum_range(0, m - 1, [&](long n) { return p.F(n, 0); }),
             tag("full sum equals sum of F(n,0)", m));
  for (long k = 1; k <= h; ++k) {
    Term g = p.G(h + 1, k);
    out.expect(g.to_rational_fn() == divergent_G_closed(m, k).to_rational_fn(), tag("closed form of G((m+1)/2,k)", m, k));
    out.expect(vanishes_mod_qint_phi2(g, m), tag("G((m+1)/2,k) vanishes mod [m]Phi_m^2", m, k));
  }
  // the chain of congruences only steps k up to (m-1)/2; G(m,(m+1)/2) is not divisible
  for (long k = 1; k <= h; ++k)
    out.expect(vanishes_mod_qint_phi2(p.G(m, k), m), tag("G(m,k) vanishes mod [m]Phi_m^2", m, k));
}

// (-1)^N [N+1] C(2N+2,N+1) C(2N-2k+2,N) C(2N-2k+2,N-k+1) (-q;q)_N^2 q^{N-2k+2} / ((1+q^{N+1}) (-q;q)_{N-k+1}^2)
inline Term he_product_summand(long N, long k)
{
  return sign(N) * qi(N + 1) * B(2 * N + 2, N + 1) * B(2 * N - 2 * k + 2, N) * B(2 * N - 2 * k + 2, N - k + 1) *
         NP(1, 1, N).pow(2) * qp(N - 2 * k + 2) / (Term::one_plus_qpow(N + 1) * NP(1, 1, N - k + 1).pow(2));
}

inline void he_telescope(long N, TelescopeResult& out)
{
  if (N < 1) throw std::invalid_argument("telescope_check(he): N must be positive");
  const WZPair& p = he_pair();
  for (long n = 0; n <= N; ++n) out.expect(p.F(n, N).is_zero(), tag("F(n,N) vanishes", n, N));
  RationalFn f0 = sum_range(0, N, [&](long n) { return p.F(n, 0); });
  RationalFn fN = sum_range(0, N, [&](long n) { return p.F(n, N); });
  RationalFn g = sum_range(1, N, [&](long k) { return p.G(N + 1, k); });
  out.expect(f0 - fN == g, tag("double telescoping", N));
  RationalFn scale = NP(1, 1, N).pow(3).to_rational_fn();
  RationalFn product_form = sum_range(1, N, [&](long k) { return he_product_summand(N, k); });
  out.expect(scale * f0 == product_form, tag("product form", N));
  out.expect(scale * f0 == sum_range(0, N, [&](long k) { return summand::sun2(N, k); }),
             tag("scaled sum matches the (-q;q)_n^3 weighted sum", N));
  out.expect(sum_range(0, N, summand::zudilin3) == f0, tag("alternating sum equals sum of F(n,0)", N));
  Modulus mod = Modulus::from_term(Term::one_plus_qpow(N).pow(2) * qi(2 * N + 1) * B(2 * N, N),
                                   "(1+q^N)^2 [2N+1] C(2N,N)");
  for (long k = 1; k <= N; ++k)
    out.expect(congruent_mod(he_product_summand(N, k).to_rational_fn(), RationalFn(0), mod).holds(),
               tag("product summand divisible", N, k));
  if (N % 2 == 1) {
    long h = (N - 1) / 2;
    RationalFn tail = sum_range(0, N - 1, [&](long n) { return p.F(n, h); });
    Term closed = B(2 * N - 1, N - 1) * B(N - 1, h, 2) * qi(N) / NP(1, 1, N - 1).pow(2);
    out.expect(tail == p.F(N - 1, h).to_rational_fn(), tag("only F(m-1,(m-1)/2) survives", N));
    out.expect(tail == closed.to_rational_fn(), tag("closed form of F(m-1,(m-1)/2)", N));
  }
}

}  // namespace wz_detail

/// Summed consequences of the pair at size m (the step index for staver, odd
/// m for divergent1, N for he).
inline TelescopeResult telescope_check(const WZPair& pair, long m)
{
  if (m < 1) throw std::invalid_argument("telescope_check: m must be positive");
  TelescopeResult out;
  if (pair.name == "staver") wz_detail::staver_telescope(m, out);
  else if (pair.name == "divergent1") wz_detail::divergent_telescope(m, out);
  else if (pair.name == "he") wz_detail::he_telescope(m, out);
  else throw std::invalid_argument("telescope_check: unknown pair " + pair.name);
  return out;
}

/// The k-th and (n+1-k)-th antisymmetrized Staver summands cancel, so their
/// sum over 1 <= k <= n vanishes.
inline bool staver_symmetry_check(long n)
{
  if (n < 1) throw std::invalid_argument("staver_symmetry_check: n must be positive");
  std::vector<Term> t;
  for (long k = 1; k <= n; ++k) {
    Term a = summand::staver_antisym(n, k);
    Term b = summand::staver_antisym(n, n + 1 - k);
    if (!(a == -b)) return false;
    t.push_back(a);
  }
  return sum_terms(t).is_zero();
}

}  // namespace qcongr
