#pragma once

#include "qcongr/congruence.hpp"
#include "qcongr/parallel.hpp"
#include "qcongr/summands.hpp"
#include "qcongr/wzpairs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcongr {

enum class SuiteKind { identity, congruence, conjecture };

inline const char* to_string(SuiteKind k)
{
  switch (k) {
    case SuiteKind::identity: return "identity";
    case SuiteKind::congruence: return "congruence";
    case SuiteKind::conjecture: return "conjecture";
  }
  return "?";
}

/// Parameter outside a suite's admissible set.
struct InadmissibleParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A parameterized statement. Plain statements supply lhs, rhs and (unless
/// kind is identity) modulus; compound statements, which quantify over a
/// second index, supply `compound` instead.
struct SuiteSpec {
  std::string id;
  SuiteKind kind;
  std::string admissible_text;
  std::string statement;
  std::function<bool(long)> admissible;
  std::function<RationalFn(long)> lhs;
  std::function<RationalFn(long)> rhs;
  std::function<Modulus(long)> modulus;
  std::function<CongruenceReport(long)> compound;
};

namespace suite_detail {

using namespace sym;

inline bool is_odd(long n) { return n > 0 && n % 2 == 1; }

inline RationalFn sum_over(long lo, long hi, const std::function<Term(long)>& f)
{
  std::vector<Term> t;
  for (long k = lo; k <= hi; ++k) t.push_back(f(k));
  return sum_terms(t);
}

inline Rational frac(long a, long b) { return make_rational(a, b); }

/// (n^2 - 1)/24 as an exact rational
inline Term st_constant(long n) { return Term(frac(n * n - 1, 24)); }

/// [n] q^{(1-n)/2}
inline Term wz_target(long n) { return qi(n) * qp(exact_quotient(1 - n, 2, "(1-n)/2")); }

/// [n] q^{(n-1)^2/4} (-1)^{(n-1)/2}
inline Term zudilin_target(long n)
{
  long h = exact_quotient(n - 1, 2, "(n-1)/2");
  return qi(n) * qp(exact_quotient((n - 1) * (n - 1), 4, "(n-1)^2/4")) * sign(h);
}

inline Modulus sun_modulus(long n)
{
  return Modulus::from_term(Term::one_plus_qpow(n).pow(2) * qi(2 * n + 1) * B(2 * n, n),
                            "(1+q^" + std::to_string(n) + ")^2*[" + std::to_string(2 * n + 1) + "]*C(" +
                                std::to_string(2 * n) + "," + std::to_string(n) + ")_q");
}

inline Modulus qint_power(long n, long e)
{
  return Modulus::from_term(qi(n).pow(e), "[" + std::to_string(n) + "]^" + std::to_string(e));
}

/// Folds component reports: fails dominates not-applicable dominates holds.
/// Observed orders keep the minimum, required orders the maximum.
inline void fold(CongruenceReport& acc, const CongruenceReport& r, const std::string& label, bool first)
{
  if (first) {
    acc = r;
    acc.detail.clear();
  } else {
    for (const auto& [d, o] : r.observed_orders) {
      auto it = acc.observed_orders.find(d);
      if (it == acc.observed_orders.end()) acc.observed_orders[d] = o;
      else if (o && (!it->second || *o < *it->second)) it->second = o;
    }
    for (const auto& [d, e] : r.required_orders) acc.required_orders[d] = std::max(acc.required_orders[d], e);
    acc.coprimality_ok = acc.coprimality_ok && r.coprimality_ok;
    acc.cofactor_degree = std::min(acc.cofactor_degree, r.cofactor_degree);
    acc.elapsed += r.elapsed;
    if (r.verdict == Verdict::fails) acc.verdict = Verdict::fails;
    else if (r.verdict == Verdict::not_applicable && acc.verdict == Verdict::holds) acc.verdict = Verdict::not_applicable;
  }
  if (r.verdict != Verdict::holds) {
    if (!acc.detail.empty()) acc.detail += "; ";
    acc.detail += label + " " + to_string(r.verdict);
  }
  if (acc.verdict != Verdict::holds) acc.cofactor_degree = -1;
}

inline CongruenceReport compound_vanishing(long lo, long hi, const std::function<Term(long)>& f, const Modulus& m,
                                           const std::string& index)
{
  CongruenceReport acc;
  bool first = true;
  for (long k = lo; k <= hi; ++k) {
    fold(acc, congruent_mod(f(k).to_rational_fn(), RationalFn(0), m), index + "=" + std::to_string(k), first);
    first = false;
  }
  acc.modulus_description = m.description;
  return acc;
}

inline CongruenceReport stones(long n)
{
  CongruenceReport acc;
  Modulus m = Modulus::phi_power(n, 1);
  fold(acc, congruent_mod(B(2 * n - 1, n - 1).to_rational_fn(), RationalFn(1), m), "C(2n-1,n-1)", true);
  for (long k = 0; k < n; ++k) {
    RationalFn rhs = (sign(k) * qp(-k * k - k)).to_rational_fn();
    fold(acc, congruent_mod(B(n - 1, k, 2).to_rational_fn(), rhs, m), "k=" + std::to_string(k), false);
  }
  acc.modulus_description = m.description;
  return acc;
}

inline CongruenceReport qbinom_lifts(long m)
{
  CongruenceReport acc;
  Modulus mod = Modulus::phi_power(m, 2);
  long h = (m - 1) / 2;
  RationalFn r1 = (sign(m - 1) * qp(binom2(m))).to_rational_fn();
  fold(acc, congruent_mod(B(2 * m - 1, m - 1).to_rational_fn(), r1, mod), "C(2m-1,m-1)", true);
  RationalFn r2 = (sign(h) * qp(exact_quotient(1 - m * m, 4, "(1-m^2)/4")) * NP(1, 1, m - 1).pow(2)).to_rational_fn();
  fold(acc, congruent_mod(B(m - 1, h, 2).to_rational_fn(), r2, mod), "C(m-1,(m-1)/2)_{q^2}", false);
  acc.modulus_description = mod.description;
  return acc;
}

inline std::vector<SuiteSpec> build_catalog()
{
  using summand::div_wz;
  using summand::st;
  using summand::zudilin3;
  std::vector<SuiteSpec> c;
  auto odd = [](long n) { return is_odd(n); };
  auto positive = [](long n) { return n >= 1; };

  c.push_back({"thm1_half", SuiteKind::congruence, "n odd, n >= 1",
               "sum_{k=0}^{(n-1)/2} [3k+1](q;q^2)_k^3 q^{-C(k+1,2)}/((q;q)_k^2 (q^2;q^2)_k) == [n] q^{(1-n)/2} "
               "mod [n]Phi_n(q)^2",
               odd, [](long n) { return sum_over(0, (n - 1) / 2, div_wz); },
               [](long n) { return wz_target(n).to_rational_fn(); },
               [](long n) { return Modulus::qint_phi_power(n, 2); }, {}});
  c.push_back({"thm1_full", SuiteKind::congruence, "n odd, n >= 1",
               "sum_{k=0}^{n-1} [3k+1](q;q^2)_k^3 q^{-C(k+1,2)}/((q;q)_k^2 (q^2;q^2)_k) == [n] q^{(1-n)/2} "
               "mod [n]Phi_n(q)^2",
               odd, [](long n) { return sum_over(0, n - 1, div_wz); },
               [](long n) { return wz_target(n).to_rational_fn(); },
               [](long n) { return Modulus::qint_phi_power(n, 2); }, {}});
  c.push_back({"thm2", SuiteKind::congruence, "n odd, n >= 1",
               "sum_{k=0}^{n-1} (-1)^k [3k+1](q;q^2)_k^3/(q;q)_k^3 == [n] q^{(n-1)^2/4} (-1)^{(n-1)/2} "
               "mod [n]Phi_n(q)^2",
               odd, [](long n) { return sum_over(0, n - 1, zudilin3); },
               [](long n) { return zudilin_target(n).to_rational_fn(); },
               [](long n) { return Modulus::qint_phi_power(n, 2); }, {}});
  c.push_back({"conj1", SuiteKind::conjecture, "n odd, n >= 1",
               "sum_{k=0}^{(n-1)/2} (-1)^k [3k+1](q;q^2)_k^3/(q;q)_k^3 == [n] q^{(n-1)^2/4} (-1)^{(n-1)/2} "
               "mod [n]Phi_n(q)^2",
               odd, [](long n) { return sum_over(0, (n - 1) / 2, zudilin3); },
               [](long n) { return zudilin_target(n).to_rational_fn(); },
               [](long n) { return Modulus::qint_phi_power(n, 2); }, {}});
  c.push_back({"remark_zudilin", SuiteKind::congruence, "n odd, n >= 1",
               "sum_{k=0}^{(n-1)/2} (-1)^k [3k+1](q;q^2)_k^3/(q;q)_k^3 == 0 mod Phi_n(q)", odd,
               [](long n) { return sum_over(0, (n - 1) / 2, zudilin3); }, [](long) { return RationalFn(0); },
               [](long n) { return Modulus::phi_power(n, 1); }, {}});
  c.push_back({"thm3", SuiteKind::congruence, "n >= 1",
               "sum_{k=0}^{n} (-1)^k [3k+1] C(2k,k)_q^3 (-q;q)_n^3/(-q;q)_k^3 == 0 mod (1+q^n)^2 [2n+1] C(2n,n)_q",
               positive, [](long n) { return sum_over(0, n, [n](long k) { return summand::sun2(n, k); }); },
               [](long) { return RationalFn(0); }, sun_modulus, {}});
  c.push_back({"conj2", SuiteKind::conjecture, "n >= 1",
               "sum_{k=0}^{n} [3k+1] C(2k,k)_q^3 (-q;q)_n^4/(-q;q)_k^4 q^{-C(k+1,2)} == 0 mod (1+q^n)^2 [2n+1] "
               "C(2n,n)_q",
               positive, [](long n) { return sum_over(0, n, [n](long k) { return summand::sun1(n, k); }); },
               [](long) { return RationalFn(0); }, sun_modulus, {}});
  c.push_back({"thm4", SuiteKind::congruence, "n odd, n >= 1",
               "sum_{k=1}^{n-1} [3k]/[2k]^2 C(2k,k)_q q^{-C(k,2)} == (n^2-1)(1-q)^2/24 [n] mod Phi_n(q)^2", odd,
               [](long n) { return sum_over(1, n - 1, st); },
               [](long n) { return (st_constant(n) * one_minus_q(2) * qi(n)).to_rational_fn(); },
               [](long n) { return Modulus::phi_power(n, 2); }, {}});
  c.push_back({"q_staver", SuiteKind::identity, "n >= 1",
               "sum_{k=1}^{n} [3k]/[2k]^2 C(2k,k)_q q^{-C(k,2)} = [n+1] C(2n+1,n)_q sum_{k=1}^{n} "
               "q^{-C(n-2k+1,2)}/([2k]^2 C(n,k)_{q^2}^2)",
               positive, [](long n) { return sum_over(1, n, st); },
               [](long n) {
                 return sum_over(1, n, [n](long k) { return qi(n + 1) * B(2 * n + 1, n) * summand::staver_inner(n, k); });
               },
               {}, {}});
  c.push_back({"q_staver_new", SuiteKind::identity, "n >= 1",
               "sum_{k=1}^{n} [3k]/[2k]^2 C(2k,k)_q q^{-C(k,2)} = [n+1]/2 C(2n+1,n)_q sum_{k=1}^{n} "
               "(1+q^{2k-n-1}) q^{-C(n-2k+1,2)}/([2k]^2 C(n,k)_{q^2}^2)",
               positive, [](long n) { return sum_over(1, n, st); },
               [](long n) { return sum_over(1, n, [n](long k) { return staver_pair().F(n, k); }); }, {}, {}});
  c.push_back({"q_staver_sym", SuiteKind::identity, "n >= 1",
               "sum_{k=1}^{n} (1-q^{2k-n-1}) q^{-C(n-2k+1,2)}/([2k]^2 C(n,k)_{q^2}^2) = 0", positive,
               [](long n) { return sum_over(1, n, [n](long k) { return summand::staver_antisym(n, k); }); },
               [](long) { return RationalFn(0); }, {}, {}});
  c.push_back({"q_hamme", SuiteKind::congruence, "n an odd prime",
               "sum_{k=0}^{(p-1)/2} (-1)^k q^{k^2} [4k+1](q;q^2)_k^3/(q^2;q^2)_k^3 == [p] q^{(p-1)^2/4} "
               "(-1)^{(p-1)/2} mod [p]^3",
               [](long n) { return n > 2 && is_prime(n); },
               [](long n) { return sum_over(0, (n - 1) / 2, summand::hamme); },
               [](long n) { return zudilin_target(n).to_rational_fn(); }, [](long n) { return qint_power(n, 3); }, {}});
  c.push_back({"conj3", SuiteKind::conjecture, "n odd, n >= 1",
               "sum_{k=0}^{n-1} [3k+1](q;q^2)_k^3 q^{-C(k+1,2)}/((q;q)_k^2 (q^2;q^2)_k) == [n] q^{(1-n)/2} + "
               "(n^2-1)(1-q)^2/24 [n]^3 q^{(1-n)/2} mod [n]Phi_n(q)^3",
               odd, [](long n) { return sum_over(0, n - 1, div_wz); },
               [](long n) {
                 Term base = wz_target(n);
                 return sum_terms({base, st_constant(n) * one_minus_q(2) * qi(n).pow(2) * base});
               },
               [](long n) { return Modulus::qint_phi_power(n, 3); }, {}});
  c.push_back({"conj4", SuiteKind::conjecture, "n == 1 mod 4",
               "sum_{k=0}^{(n-1)/2} [4k+1](q;q^2)_k^3/(q^2;q^2)_k^3 q^{k(n^2-2nk-n-2)/4} == 0 mod Phi_n(q)^2",
               [](long n) { return n > 0 && n % 4 == 1; },
               [](long n) { return sum_over(0, (n - 1) / 2, [n](long k) { return summand::hamme_shifted(n, k); }); },
               [](long) { return RationalFn(0); }, [](long n) { return Modulus::phi_power(n, 2); }, {}});
  c.push_back({"extra7", SuiteKind::conjecture, "n odd, n >= 1",
               "sum_{k=1}^{n-1} (-1)^k [n+3k](-q^{n+1};q)_{k-1}/[2k] C(2k,k)_q == (1+q^n)(q^{C(n,2)} - "
               "(-q;q)_{n-1}) mod Phi_n(q)^2",
               odd, [](long n) { return sum_over(1, n - 1, [n](long k) { return summand::guillera_companion(n, k); }); },
               [](long n) {
                 Term f = Term::one_plus_qpow(n);
                 return sum_terms({f * qp(binom2(n)), -(f * NP(1, 1, n - 1))});
               },
               [](long n) { return Modulus::phi_power(n, 2); }, {}});
  c.push_back({"lemma2", SuiteKind::congruence, "n odd, n >= 1",
               "sum_{k=1}^{(n-1)/2} [3k]/[2k]^2 C(2k,k)_q q^{-C(k,2)} == 0 mod Phi_n(q)", odd,
               [](long n) { return sum_over(1, (n - 1) / 2, st); }, [](long) { return RationalFn(0); },
               [](long n) { return Modulus::phi_power(n, 1); }, {}});
  c.push_back({"lemma3", SuiteKind::congruence, "n odd, n >= 1",
               "(q;q^2)_n (q^{2k+1};q^2)_{n-1}^2/(q;q)_{n-1}^3 == 0 mod [n]Phi_n(q)^2 for 0 <= k <= n", odd, {}, {}, {},
               [](long n) {
                 return compound_vanishing(0, n, [n](long k) { return summand::lemma3_full(n, k); },
                                           Modulus::qint_phi_power(n, 2), "k");
               }});
  c.push_back({"lemma3_half", SuiteKind::congruence, "n odd, n >= 1",
               "(q;q^2)_{(n+1)/2} (q^{2k+1};q^2)_{(n-1)/2}^2/(q;q)_{(n-1)/2}^3 == 0 mod [n]Phi_n(q)^2 for 0 <= k <= "
               "(n-1)/2",
               odd, {}, {}, {},
               [](long n) {
                 return compound_vanishing(0, (n - 1) / 2, [n](long k) { return summand::lemma3_half(n, k); },
                                           Modulus::qint_phi_power(n, 2), "k");
               }});
  c.push_back({"lemma4", SuiteKind::congruence, "n odd, n >= 3",
               "[n] C(2n-2k,n-1)_q (q;q^2)_n (q;q^2)_{n-k}/((q;q)_n (q^2;q^2)_{n-k}) == 0 mod [n]Phi_n(q)^2 for 1 "
               "<= k <= (n-1)/2",
               [](long n) { return is_odd(n) && n >= 3; }, {}, {}, {},
               [](long n) {
                 return compound_vanishing(1, (n - 1) / 2, [n](long k) { return summand::lemma4(n, k); },
                                           Modulus::qint_phi_power(n, 2), "k");
               }});
  c.push_back({"lemma5", SuiteKind::congruence, "n >= 2",
               "sum_{k=1}^{n-1} q^k/[2k]^2 == (n^2-1)(1-q)^2/24 mod Phi_n(q)", [](long n) { return n >= 2; },
               [](long n) { return sum_over(1, n - 1, summand::lemma5_scaled); },
               [](long n) { return (st_constant(n) * one_minus_q(2)).to_rational_fn(); },
               [](long n) { return Modulus::phi_power(n, 1); }, {}});
  c.push_back({"lemma5_unscaled", SuiteKind::congruence, "n >= 2",
               "sum_{k=1}^{n-1} q^k/(1-q^{2k})^2 == (n^2-1)/24 mod Phi_n(q)", [](long n) { return n >= 2; },
               [](long n) { return sum_over(1, n - 1, summand::lemma5_unscaled); },
               [](long n) { return st_constant(n).to_rational_fn(); }, [](long n) { return Modulus::phi_power(n, 1); },
               {}});
  c.push_back({"reduce3", SuiteKind::congruence, "m odd, m >= 1",
               "q^m sum_{j=1}^{(m-1)/2} [3j](q;q^2)_j (q^m;q^2)_j^2 q^{-C(j+1,2)-(2j+1)(m-1)/2}/((q;q)_j^2 "
               "(q^2;q^2)_j) == 0 mod [m]Phi_m(q)^2",
               odd, [](long m) { return sum_over(1, (m - 1) / 2, [m](long j) { return summand::reduce3(m, j); }); },
               [](long) { return RationalFn(0); }, [](long m) { return Modulus::qint_phi_power(m, 2); }, {}});
  c.push_back({"reduce", SuiteKind::congruence, "m odd, m >= 1",
               "sum_{j=1}^{(m-1)/2} [3j](1-q)^2 (q;q^2)_j (q^{m+2};q^2)_{j-1}^2 q^{m-C(j+1,2)-(2j+1)(m-1)/2}/((q;q)_j^2 "
               "(q^2;q^2)_j) == 0 mod Phi_m(q)",
               odd, [](long m) { return sum_over(1, (m - 1) / 2, [m](long j) { return summand::reduce1(m, j); }); },
               [](long) { return RationalFn(0); }, [](long m) { return Modulus::phi_power(m, 1); }, {}});
  c.push_back({"stones", SuiteKind::congruence, "n odd, n >= 1",
               "C(2n-1,n-1)_q == 1 and C(n-1,k)_{q^2} == (-1)^k q^{-k^2-k} mod Phi_n(q) for 0 <= k <= n-1", odd, {}, {},
               {}, stones});
  c.push_back({"qbinom_lifts", SuiteKind::congruence, "m odd, m >= 1",
               "C(2m-1,m-1)_q == (-1)^{m-1} q^{C(m,2)} and C(m-1,(m-1)/2)_{q^2} == (-1)^{(m-1)/2} q^{(1-m^2)/4} "
               "(-q;q)_{m-1}^2 mod Phi_m(q)^2",
               odd, {}, {}, {}, qbinom_lifts});
  return c;
}

}  // namespace suite_detail

/// The frozen catalog of q-side statements.
inline const std::vector<SuiteSpec>& suite_catalog()
{
  static const std::vector<SuiteSpec> catalog = suite_detail::build_catalog();
  return catalog;
}

/// nullptr for an unknown id.
inline const SuiteSpec* find_suite(const std::string& id)
{
  for (const auto& s : suite_catalog())
    if (s.id == id) return &s;
  return nullptr;
}

inline const SuiteSpec& suite(const std::string& id)
{
  const SuiteSpec* s = find_suite(id);
  if (!s) throw std::invalid_argument("unknown suite: " + id);
  return *s;
}

inline void require_admissible(const SuiteSpec& s, long n)
{
  if (!s.admissible(n))
    throw InadmissibleParameter(s.id + ": n = " + std::to_string(n) + " is not admissible (" + s.admissible_text + ")");
}

/// Left-hand side of a plain statement at n.
inline RationalFn build_sum(const std::string& id, long n)
{
  const SuiteSpec& s = suite(id);
  require_admissible(s, n);
  if (!s.lhs) throw std::invalid_argument(id + ": compound statement has no single sum");
  return s.lhs(n);
}

inline CongruenceReport verify(const SuiteSpec& s, long n)
{
  require_admissible(s, n);
  if (s.compound) return s.compound(n);
  RationalFn a = s.lhs(n);
  RationalFn b = s.rhs(n);
  if (s.kind == SuiteKind::identity) return exact_equality(a, b);
  return congruent_mod(a, b, s.modulus(n));
}

inline CongruenceReport verify(const std::string& id, long n) { return verify(suite(id), n); }

/// One half of the divisibility lemma for a single k.
inline CongruenceReport verify_lemma3(long n, long k, bool half = false)
{
  if (!suite_detail::is_odd(n)) throw InadmissibleParameter("lemma3: n must be odd and positive");
  if (k < 0) throw InadmissibleParameter("lemma3: k must be nonnegative");
  if (half && k > (n - 1) / 2) throw InadmissibleParameter("lemma3_half: k must be at most (n-1)/2");
  Term t = half ? summand::lemma3_half(n, k) : summand::lemma3_full(n, k);
  return congruent_mod(t.to_rational_fn(), RationalFn(0), Modulus::qint_phi_power(n, 2));
}

inline CongruenceReport verify_lemma4(long n, long k)
{
  if (!suite_detail::is_odd(n)) throw InadmissibleParameter("lemma4: n must be odd and positive");
  if (k < 1 || k > (n - 1) / 2) throw InadmissibleParameter("lemma4: k must lie in 1..(n-1)/2");
  return congruent_mod(summand::lemma4(n, k).to_rational_fn(), RationalFn(0), Modulus::qint_phi_power(n, 2));
}

/// Compares the floor-sum Phi_t exponents of every q-shifted factorial in the
/// divisibility lemma with multiplicities found by exact division, for all
/// t | n with t > 1.
inline bool lemma3_floor_orders_match(long n)
{
  if (!suite_detail::is_odd(n)) throw InadmissibleParameter("lemma3: n must be odd and positive");
  const long h = (n - 1) / 2;
  std::vector<QPochSpec> specs = {poch(1, 2, n), qfact(n - 1), poch(1, 2, h + 1), qfact(h)};
  for (long k = 0; k <= n; ++k) {
    specs.push_back(poch(2 * k + 1, 2, n - 1));
    specs.push_back(poch(2 * k + 1, 2, n));
    if (k <= h) specs.push_back(poch(2 * k + 1, 2, h));
  }
  for (const auto& s : specs) {
    IntPoly f = q_pochhammer(s);
    for (long t : divisors(n)) {
      if (t == 1) continue;
      if (poch_phi_exponent(s, t) != phi_order(f, t)) return false;
    }
  }
  return true;
}

struct ScanEntry {
  long n = 0;
  CongruenceReport report;
  std::string error;  // non-empty when the statement could not be evaluated at n
};

struct ScanSummary {
  std::string id;
  std::vector<ScanEntry> entries;
  long holds = 0;
  long fails = 0;
  long not_applicable = 0;
  long errors = 0;
  std::map<long, std::optional<long>> worst_orders;
};

/// verify over every admissible n in `ns`, in the order given.
inline ScanSummary scan(const std::string& id, const std::vector<long>& ns, unsigned jobs = 1)
{
  const SuiteSpec& s = suite(id);
  if (ns.empty()) throw std::invalid_argument("scan: empty range");
  std::vector<long> todo;
  for (long n : ns)
    if (s.admissible(n)) todo.push_back(n);
  ScanSummary out;
  out.id = id;
  out.entries = parallel_map<ScanEntry>(todo.size(), jobs, [&](std::size_t i) {
    ScanEntry e;
    e.n = todo[i];
    try {
      e.report = verify(s, e.n);
    } catch (const FractionalExponent& ex) {
      e.error = ex.what();
    }
    return e;
  });
  for (const auto& e : out.entries) {
    if (!e.error.empty()) {
      ++out.errors;
      continue;
    }
    switch (e.report.verdict) {
      case Verdict::holds: ++out.holds; break;
      case Verdict::fails: ++out.fails; break;
      case Verdict::not_applicable: ++out.not_applicable; break;
    }
    for (const auto& [d, o] : e.report.observed_orders) {
      auto it = out.worst_orders.find(d);
      if (it == out.worst_orders.end()) out.worst_orders[d] = o;
      else if (o && (!it->second || *o < *it->second)) it->second = o;
    }
  }
  return out;
}

}  // namespace qcongr
