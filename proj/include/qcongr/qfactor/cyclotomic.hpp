#pragma once

#include "qcongr/ring/cyclo_basis.hpp"
#include "qcongr/ring/int_poly.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace qcongr {

/// Memo table of cyclotomic polynomials Phi_n(q) for n up to a ceiling.
/// Reads take a shared lock; a miss computes under the exclusive lock, so
/// the cache can be shared by parallel workers. Indices above the ceiling
/// are computed on demand without being stored.
class CyclotomicCache {
 public:
  explicit CyclotomicCache(long max_n = 64) : max_n_(max_n) {}

  static CyclotomicCache& global()
  {
    static CyclotomicCache cache;
    return cache;
  }

  long max_n() const
  {
    std::shared_lock lock(mu_);
    return max_n_;
  }

  void set_max_n(long n)
  {
    if (n < 1) throw std::invalid_argument("CyclotomicCache: ceiling must be positive");
    std::unique_lock lock(mu_);
    max_n_ = n;
    for (auto it = table_.begin(); it != table_.end();)
      it = it->first > n ? table_.erase(it) : std::next(it);
  }

  /// Phi_n(q) = (q^n - 1) / prod_{d | n, d < n} Phi_d(q).
  IntPoly get(long n)
  {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
    {
      std::shared_lock lock(mu_);
      if (auto it = table_.find(n); it != table_.end()) return it->second;
    }
    IntPoly f = IntPoly::q_power(static_cast<std::size_t>(n)) - IntPoly(1);
    for (long d : divisors(n)) {
      if (d == n) continue;
      auto r = divides_exactly(get(d), f);
      if (!r.divides) throw std::logic_error("cyclotomic: inexact division");
      f = std::move(r.quotient);
    }
    std::unique_lock lock(mu_);
    if (n <= max_n_) table_.emplace(n, f);
    return f;
  }

  /// Warm-up: fill the table for every index up to the ceiling.
  void warm()
  {
    for (long n = 1; n <= max_n(); ++n) get(n);
  }

  std::size_t size() const
  {
    std::shared_lock lock(mu_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  long max_n_;
  std::map<long, IntPoly> table_;
};

inline IntPoly cyclotomic(long n) { return CyclotomicCache::global().get(n); }

/// [n] as prod_{t | n, t > 1} Phi_t(q).
inline IntPoly radical_qint(long n)
{
  if (n < 1) throw std::invalid_argument("radical_qint: n must be positive");
  IntPoly f(1);
  for (long t : divisors(n))
    if (t > 1) f *= cyclotomic(t);
  return f;
}

}  // namespace qcongr
