#pragma once

#include <vector>

#include "ramcoh/fg_abelian.hpp"
#include "ramcoh/galois.hpp"

namespace ramcoh {

/// A finitely generated abelian group Z^m / R with G acting through integer
/// matrices A_sigma on the generator coordinates.
class GModule {
 public:
  /// Throws NotAModule unless each A_sigma preserves the relations,
  /// A_id = I and A_{st} = A_s A_t modulo the relations.
  GModule(FiniteGroup group, FgAbelianPresentation presentation, std::vector<IntMatrix> action);

  const FiniteGroup& group() const { return group_; }
  const FgAbelianPresentation& presentation() const { return presentation_; }
  std::size_t rank() const { return presentation_.num_generators(); }
  const IntMatrix& action(int s) const { return action_[s]; }
  const std::vector<IntMatrix>& actions() const { return action_; }

  IntVector act(int s, const IntVector& x) const { return presentation_.reduce(action_[s] * x); }
  IntVector reduce(const IntVector& x) const { return presentation_.reduce(x); }
  IntVector zero() const { return IntVector(rank(), Int(0)); }

  /// The isomorphic module on the canonical cyclic decomposition
  /// Z/d_1 x ... x Z/d_k (coordinates via presentation().to_canonical()).
  GModule canonical() const;

  /// The same module with G replaced by a subgroup (element indices of G).
  GModule restrict_to(const std::vector<int>& subgroup) const;

 private:
  FiniteGroup group_;
  FgAbelianPresentation presentation_;
  std::vector<IntMatrix> action_;
};

/// phi: M -> M' as a matrix on generator coordinates. Throws NotEquivariant
/// when phi does not commute with the actions or does not respect relations.
void check_equivariant(const GModule& from, const GModule& to, const IntMatrix& phi);

/// c(sigma) for every group element, in additive module coordinates.
struct Cocycle {
  std::vector<IntVector> values;
};

/// c(st) = c(s) + s.c(t) for all pairs.
bool is_cocycle(const GModule& m, const Cocycle& c);

/// sigma -> s.m - m.
Cocycle coboundary(const GModule& m, const IntVector& x);

/// Pointwise sum and integer multiple.
Cocycle add_cocycles(const GModule& m, const Cocycle& a, const Cocycle& b);
Cocycle scale_cocycle(const GModule& m, const Cocycle& a, const Int& k);

}  // namespace ramcoh
