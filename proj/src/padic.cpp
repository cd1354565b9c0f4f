#include "ramcoh/padic.hpp"

namespace ramcoh {

bool is_prime(const Int& p) {
  if (p < 2 || !p.fits_ulong_p() || p.get_ui() > 0xffffffffUL) return false;
  const unsigned long n = p.get_ui();
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

int p_valuation(const Int& x, const Int& p, int cap) {
  if (x == 0) return cap;
  Int y = x;
  int v = 0;
  while (v < cap && mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t())) {
    y /= p;
    ++v;
  }
  return v;
}

CoeffRing::CoeffRing(const Int& p, int precision) : p_(p), precision_(precision) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, p.get_str() + " is not a prime below 2^32");
  if (precision < 1) throw Error(ErrorCode::PrecisionTooSmall, "coefficient precision must be >= 1");
  mpz_pow_ui(modulus_.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(precision));
}

CoeffRing::Element CoeffRing::reduce(const Int& a) const {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), modulus_.get_mpz_t());
  return r;
}

CoeffRing::Element CoeffRing::invert(const Element& a) const {
  Int r;
  if (mpz_divisible_p(a.get_mpz_t(), p_.get_mpz_t()) ||
      mpz_invert(r.get_mpz_t(), a.get_mpz_t(), modulus_.get_mpz_t()) == 0)
    throw Error(ErrorCode::NonUnit, a.get_str() + " is not invertible modulo " + modulus_.get_str());
  return r;
}

CoeffRing::Element CoeffRing::divide(const Element& a, const Element& b) const {
  const int vb = valuation(b);
  if (vb >= precision_) throw Error(ErrorCode::DivisionByIndistinguishableZero, "divisor is zero modulo p^M");
  if (valuation(a) < vb) throw Error(ErrorCode::NegativeValuation, "quotient is not integral");
  Int pv;
  mpz_pow_ui(pv.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(vb));
  const Int num = reduce(a) / pv;
  const Int den = reduce(b) / pv;
  return mul(num, invert(reduce(den)));
}

}  // namespace ramcoh
