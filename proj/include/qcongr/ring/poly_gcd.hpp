#pragma once

#include "qcongr/ring/int_poly.hpp"

#include <stdexcept>
#include <utility>

namespace qcongr {

/// Greatest common divisor in Q[q], returned as a primitive integer
/// polynomial with positive leading coefficient. Uses the subresultant
/// polynomial remainder sequence, which keeps coefficient growth polynomial
/// without modular reconstruction.
inline IntPoly poly_gcd(const IntPoly& a, const IntPoly& b)
{
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both arguments are zero");
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();

  IntPoly f = a.primitive_part();
  IntPoly g = b.primitive_part();
  if (f.degree() < g.degree()) std::swap(f, g);
  if (g.is_constant()) return IntPoly(1);

  Integer gs = 1;  // previous leading coefficient
  Integer hs = 1;  // subresultant scaling
  for (;;) {
    long delta = f.degree() - g.degree();
    IntPoly r = pseudo_remainder(f, g);
    if (r.is_zero()) break;
    if (r.is_constant()) return IntPoly(1);
    Integer hd;
    mpz_pow_ui(hd.get_mpz_t(), hs.get_mpz_t(), static_cast<unsigned long>(delta));
    f = std::move(g);
    g = r.div_exact(gs * hd);
    gs = f.lead();
    // hs <- gs^delta / hs^(delta-1)
    if (delta > 0) {
      Integer num, den;
      mpz_pow_ui(num.get_mpz_t(), gs.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(den.get_mpz_t(), hs.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(hs.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return g.primitive_part();
}

}  // namespace qcongr
