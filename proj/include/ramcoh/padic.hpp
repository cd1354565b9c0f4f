#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ramcoh/error.hpp"

namespace ramcoh {

using Int = mpz_class;

/// Deterministic primality test (trial division); p must fit in 32 bits.
bool is_prime(const Int& p);

/// p-adic valuation of a nonzero integer; `cap` is returned for zero.
int p_valuation(const Int& x, const Int& p, int cap);

/// The integers modulo p^M. Elements are plain Ints kept in [0, p^M).
class CoeffRing {
 public:
  using Element = Int;

  CoeffRing(const Int& p, int precision);

  const Int& prime() const { return p_; }
  int precision() const { return precision_; }
  const Int& modulus() const { return modulus_; }

  Element reduce(const Int& a) const;
  Element zero() const { return 0; }
  Element one() const { return reduce(1); }
  Element from_integer(long v) const { return reduce(Int(v)); }

  Element add(const Element& a, const Element& b) const { return reduce(a + b); }
  Element sub(const Element& a, const Element& b) const { return reduce(a - b); }
  Element neg(const Element& a) const { return reduce(-a); }
  Element mul(const Element& a, const Element& b) const { return reduce(a * b); }
  /// Throws NonUnit when p divides a.
  Element invert(const Element& a) const;

  /// v_p(a), capped at precision().
  int valuation(const Element& a) const { return p_valuation(reduce(a), p_, precision_); }
  int precision_cap() const { return precision_; }
  /// a / b for valuation(a) >= valuation(b); the top digits of the result are
  /// lost to the division and come back as zero.
  Element divide(const Element& a, const Element& b) const;

 private:
  Int p_;
  int precision_;
  Int modulus_;
};

/// Rings usable by the generic polynomial / Newton routines below.
template <class R>
concept ValuedRing = requires(const R& r, const typename R::Element& a) {
  { r.zero() } -> std::convertible_to<typename R::Element>;
  { r.from_integer(1L) } -> std::convertible_to<typename R::Element>;
  { r.add(a, a) } -> std::convertible_to<typename R::Element>;
  { r.sub(a, a) } -> std::convertible_to<typename R::Element>;
  { r.mul(a, a) } -> std::convertible_to<typename R::Element>;
  { r.divide(a, a) } -> std::convertible_to<typename R::Element>;
  { r.valuation(a) } -> std::convertible_to<int>;
  { r.precision_cap() } -> std::convertible_to<int>;
};

/// Dense polynomial, coefficients lowest degree first.
template <class Element>
using Poly = std::vector<Element>;

template <ValuedRing R>
typename R::Element poly_eval(const R& ring, const Poly<typename R::Element>& f,
                              const typename R::Element& x) {
  typename R::Element acc = ring.zero();
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = ring.add(ring.mul(acc, x), *it);
  return acc;
}

template <ValuedRing R>
Poly<typename R::Element> poly_derivative(const R& ring, const Poly<typename R::Element>& f) {
  Poly<typename R::Element> d;
  for (std::size_t j = 1; j < f.size(); ++j)
    d.push_back(ring.mul(ring.from_integer(static_cast<long>(j)), f[j]));
  if (d.empty()) d.push_back(ring.zero());
  return d;
}

/// Newton iteration r <- r - f(r)/f'(r) from an approximate root in the
/// regime v(f(r0)) > 2 v(f'(r0)). Returns r with v(f(r)) >= target; r agrees
/// with r0 to v(f(r0)) - v(f'(r0)) digits.
template <ValuedRing R>
typename R::Element hensel_lift_root(const R& ring, const Poly<typename R::Element>& f,
                                     typename R::Element r, int target) {
  const int cap = ring.precision_cap();
  if (target > cap)
    throw Error(ErrorCode::PrecisionExhausted,
                "target " + std::to_string(target) + " exceeds ring precision " + std::to_string(cap));
  const auto df = poly_derivative(ring, f);
  int vf = ring.valuation(poly_eval(ring, f, r));
  const int vd = ring.valuation(poly_eval(ring, df, r));
  if (vd < cap && vf >= target) return r;
  if (vd >= cap || vf <= 2 * vd)
    throw Error(ErrorCode::HenselFailure, "v(f(r0)) = " + std::to_string(vf) +
                                              " is not above 2 v(f'(r0)) = " +
                                              (vd >= cap ? std::string("inf") : std::to_string(2 * vd)));
  while (vf < target) {
    const auto fr = poly_eval(ring, f, r);
    const auto dr = poly_eval(ring, df, r);
    r = ring.sub(r, ring.divide(fr, dr));
    const int next = ring.valuation(poly_eval(ring, f, r));
    if (next <= vf)
      throw Error(ErrorCode::PrecisionExhausted, "Newton iteration stalled at valuation " + std::to_string(vf));
    vf = next;
  }
  return r;
}

}  // namespace ramcoh
