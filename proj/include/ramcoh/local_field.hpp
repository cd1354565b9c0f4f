#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "ramcoh/padic.hpp"
#include "ramcoh/residue_field.hpp"

namespace ramcoh {

/// One coefficient of an Eisenstein polynomial. A single entry is an integer;
/// a longer list gives coordinates in the previous floor's basis
/// theta^l pi^j at index j*f + l.
using TowerCoefficient = std::vector<long>;

/// A tower Q_p -> (unramified, residue polynomial h) -> Eisenstein steps.
struct TowerSpec {
  std::int64_t p = 2;
  /// Residue polynomial over F_p, monic and irreducible; empty means f = 1.
  std::vector<std::int64_t> unramified_poly;
  /// Monic polynomials, lowest degree first, each Eisenstein over the floor below.
  std::vector<std::vector<TowerCoefficient>> eisenstein_polys;
};

using ResidueElement = FiniteField::Element;

/// An element of O_L modulo p^M, coordinates at index j*f + l for theta^l pi^j.
struct FieldElement {
  std::vector<Int> coords;
  bool operator==(const FieldElement&) const = default;
};

/// L/Q_p presented as W[pi]/(F(pi)) where W = Z_p[theta]/(g) is the unramified
/// part and F is Eisenstein over W. Arithmetic is exact modulo p^M; results are
/// meaningful modulo pi^N where N = precision() <= absolute_precision() = e*M.
/// Immutable after build(); share through std::shared_ptr<const LocalField>.
class LocalField {
 public:
  using Element = FieldElement;

  /// Throws NotPrime, NotIrreducibleResiduePoly, NotEisenstein,
  /// PrecisionTooSmall (N < 4) or DegenerateTower (degree 1).
  static std::shared_ptr<const LocalField> build(const TowerSpec& spec, int precision, int guard_digits = 4);

  const TowerSpec& spec() const { return spec_; }
  const Int& prime() const { return coeff_.prime(); }
  int degree() const { return e_ * f_; }
  int ramification_index() const { return e_; }
  int residue_degree() const { return f_; }
  int precision() const { return precision_; }
  int coefficient_precision() const { return coeff_.precision(); }
  int absolute_precision() const { return e_ * coeff_.precision(); }
  const CoeffRing& coefficients() const { return coeff_; }
  const FiniteField& residue_field() const { return residue_; }
  /// Size q of the residue field.
  std::int64_t residue_order() const { return residue_.order(); }

  /// Monic Eisenstein polynomial of pi over W (coefficients are W-constants).
  const Poly<FieldElement>& uniformizer_polynomial() const { return eisenstein_; }
  /// Monic lift g of the residue polynomial; theta is its root.
  const Poly<FieldElement>& unramified_polynomial() const { return unramified_; }

  FieldElement zero() const;
  FieldElement one() const { return from_integer(1); }
  FieldElement from_integer(long v) const;
  FieldElement from_coords(const std::vector<Int>& coords) const;
  FieldElement uniformizer() const;
  FieldElement unramified_generator() const;
  /// Coefficient block a_j of x = sum_j a_j pi^j as a W-constant.
  FieldElement w_coefficient(const FieldElement& x, int j) const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement pow(const FieldElement& x, const Int& k) const;
  /// Inverse of a unit; throws NonUnit otherwise.
  FieldElement invert(const FieldElement& x) const;
  /// x / y with y not indistinguishable from zero at precision N; the quotient
  /// must be integral (NegativeValuation otherwise).
  FieldElement div(const FieldElement& x, const FieldElement& y) const;
  /// x / pi^k for raw_valuation(x) >= k.
  FieldElement shift_down(const FieldElement& x, int k) const;
  /// x * pi^k.
  FieldElement shift_up(const FieldElement& x, int k) const;

  /// nu_L(x), or nullopt when x is indistinguishable from zero at precision N.
  std::optional<int> valuation(const FieldElement& x) const;
  /// nu_L(x) capped at absolute_precision().
  int raw_valuation(const FieldElement& x) const;
  /// x == y modulo pi^N.
  bool equal(const FieldElement& x, const FieldElement& y) const;
  bool is_unit(const FieldElement& x) const { return raw_valuation(x) == 0; }

  ResidueElement residue(const FieldElement& x) const;
  /// Lift with coordinates in [0, p).
  FieldElement lift(const ResidueElement& c) const;
  /// The (q-1)-th root of unity reducing to c; throws NonUnit for c = 0.
  FieldElement teichmuller(const ResidueElement& c) const;

  FieldElement random_integral(std::mt19937_64& rng) const;
  FieldElement random_unit(std::mt19937_64& rng) const;

  // ValuedRing interface (divide uses the absolute precision as the zero test).
  int precision_cap() const { return absolute_precision(); }
  FieldElement divide(const FieldElement& x, const FieldElement& y) const;

 private:
  LocalField(TowerSpec spec, int precision, CoeffRing coeff, FiniteField residue, int e,
             std::vector<std::vector<Int>> unram_poly, std::vector<std::vector<Int>> eisenstein_w);

  using WElem = std::vector<Int>;
  WElem w_mul(const WElem& a, const WElem& b) const;
  WElem w_block(const FieldElement& x, int j) const;

  TowerSpec spec_;
  int precision_;
  CoeffRing coeff_;
  FiniteField residue_;
  int e_;
  int f_;
  std::vector<Int> g_;                 // monic, degree f
  std::vector<WElem> eisenstein_w_;    // monic, degree e, W coefficients
  WElem eps_inv_;                      // F_0 = p * eps
  Poly<FieldElement> eisenstein_;
  Poly<FieldElement> unramified_;
};

}  // namespace ramcoh
