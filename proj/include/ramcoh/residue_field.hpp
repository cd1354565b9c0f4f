#pragma once

#include <cstdint>
#include <vector>

#include "ramcoh/padic.hpp"

namespace ramcoh {

/// Polynomials over F_p with small-integer coefficients, lowest degree first.
using FpPoly = std::vector<std::int64_t>;

/// True when the monic polynomial h of degree >= 1 is irreducible over F_p.
bool is_irreducible_mod_p(const FpPoly& h, std::int64_t p);

/// The residue field F_q = F_p[y]/(h). Elements are coordinate vectors in the
/// power basis 1, y, ..., y^{f-1}. Sized for enumeration: q <= 2^20.
class FiniteField {
 public:
  using Element = std::vector<std::int64_t>;

  FiniteField(std::int64_t p, FpPoly modulus);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return degree_; }
  std::int64_t order() const { return q_; }
  const FpPoly& modulus() const { return modulus_; }

  Element zero() const { return Element(static_cast<std::size_t>(degree_), 0); }
  Element one() const;
  /// The class of y.
  Element generator() const;
  Element from_integer(std::int64_t v) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Element& a, std::int64_t c) const;
  Element pow(const Element& a, std::uint64_t k) const;
  Element inv(const Element& a) const;
  /// a^(p^k).
  Element frobenius(const Element& a, int k) const;
  bool is_zero(const Element& a) const;

  /// Mixed-radix index in [0, q), and its inverse.
  std::uint64_t index(const Element& a) const;
  Element element(std::uint64_t index) const;

  /// A fixed generator of the cyclic group F_q^x (smallest index).
  const Element& primitive_element() const { return primitive_; }
  /// Exponent k in [0, q-1) with primitive^k = a; a must be nonzero.
  std::int64_t discrete_log(const Element& a) const;
  /// Multiplicative order of a nonzero a.
  std::int64_t multiplicative_order(const Element& a) const;

  /// Matrix over F_p (as integers) of x -> c * x^(p^k) in the power basis.
  std::vector<std::vector<std::int64_t>> linear_map_matrix(const Element& c, int k) const;

 private:
  std::int64_t p_;
  FpPoly modulus_;
  int degree_;
  std::int64_t q_;
  Element primitive_;
  std::vector<std::int64_t> log_table_;  // indexed by element index
};

}  // namespace ramcoh
