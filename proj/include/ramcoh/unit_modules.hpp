#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ramcoh/gmodule.hpp"

namespace ramcoh {

/// U_L^i / U_L^N as a G-module. Generators: the Teichmuller lift omega of the
/// primitive element of lambda^x (level 0 only), then u_{j,k} = 1 + theta^k pi^j
/// for j = max(i,1) .. N-1 and k = 0 .. f-1. Relations: omega^(q-1) = 1 and
/// u_{j,k}^p written in the generators of higher level.
class UnitQuotientModule {
 public:
  /// Requires 0 <= level < precision <= field precision. Throws
  /// PrecisionExhausted if the computed order disagrees with the layer count.
  static std::shared_ptr<const UnitQuotientModule> build(std::shared_ptr<const GaloisGroup> galois, int level,
                                                         int precision);

  int level() const { return level_; }
  int precision() const { return precision_; }
  const GaloisGroup& galois() const { return *galois_; }
  const LocalField& field() const { return galois_->field(); }
  const GModule& module() const { return *module_; }
  const FgAbelianPresentation& presentation() const { return module_->presentation(); }
  std::size_t num_generators() const { return generators_.size(); }
  const std::vector<FieldElement>& generators() const { return generators_; }
  bool has_teichmuller_generator() const { return level_ == 0; }
  /// Index of u_{j,k}.
  std::size_t generator_index(int j, int k) const;
  Int order() const { return presentation().order(); }

  /// Coordinates of a unit u (u = 1 mod pi^level); throws WrongLevel.
  IntVector dlog(const FieldElement& u) const;
  /// Product of generators to the given exponents.
  FieldElement exp(const IntVector& x) const;
  /// u = v modulo pi^precision.
  bool same_class(const FieldElement& u, const FieldElement& v) const;

 private:
  UnitQuotientModule(std::shared_ptr<const GaloisGroup> galois, int level, int precision);

  std::shared_ptr<const GaloisGroup> galois_;
  int level_;
  int precision_;
  int first_layer_;
  std::vector<FieldElement> generators_;
  std::vector<FieldElement> inverses_;
  std::optional<GModule> module_;
};

/// Matrix of U^{i'}/U^{N'} -> U^i/U^N for i' >= i and N' >= N (inclusion
/// followed by reduction); throws LevelMismatch otherwise.
IntMatrix natural_map(const UnitQuotientModule& from, const UnitQuotientModule& to);

/// sigma -> dlog(c(sigma)) for a multiplicative map given on group elements.
Cocycle unit_cocycle(const UnitQuotientModule& m, const std::vector<FieldElement>& values);

/// f_pi(sigma) = sigma(pi)/pi on the level-0 module; throws LevelMismatch.
Cocycle fundamental_cocycle(const UnitQuotientModule& m);
/// f for the uniformizer u*pi, u a unit.
Cocycle fundamental_cocycle(const UnitQuotientModule& m, const FieldElement& unit);

/// lambda^x = Z/(q-1) (discrete logarithms), sigma acting by p^k(sigma).
GModule residue_multiplicative_module(const GaloisGroup& g);
/// lambda as (Z/p)^f in the power basis, sigma acting by a -> chi(sigma)^twist * a^(p^k(sigma)),
/// chi(sigma) = residue(sigma(pi)/pi). Twist j is the action on U^j/U^{j+1}.
GModule residue_additive_module(const GaloisGroup& g, int twist);
/// lambda^x and lambda under Gal(lambda/kappa) = Z/f generated by Frobenius.
GModule residue_galois_multiplicative_module(const FiniteField& k);
GModule residue_galois_additive_module(const FiniteField& k);

/// The layer map U^i/U^N -> U^i/U^{i+1}: the residue for i = 0, and
/// 1 + a pi^i -> residue(a) for i >= 1, with its target module.
struct LayerProjection {
  GModule target;
  IntMatrix matrix;
};
/// Requires layer == m.level() < m.precision(); throws LayerMismatch.
LayerProjection projection_to_layer(const UnitQuotientModule& m, int layer);

}  // namespace ramcoh
