#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ramcoh/local_field.hpp"

namespace ramcoh {

/// A finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  /// Validates the table (closure, identity 0, inverses, associativity).
  explicit FiniteGroup(std::vector<std::vector<int>> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int element_order(int a) const;
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool is_subgroup(const std::vector<int>& elements) const;
  bool is_normal(const std::vector<int>& elements) const;
  /// The subgroup on `elements` (sorted, so the identity comes first), with
  /// its own table; throws NotASubgroup.
  FiniteGroup subgroup(const std::vector<int>& elements) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

/// sigma on O_L, determined by the images of theta and pi.
struct Automorphism {
  FieldElement theta_image;
  FieldElement pi_image;
  /// k with sigma(x) = x^(p^k) on the residue field.
  int frobenius_exponent = 0;
};

/// Gal(L/Q_p) with its lower ramification filtration.
class GaloisGroup {
 public:
  /// Throws NotGalois when L/Q_p has fewer than [L:Q_p] automorphisms and
  /// PrecisionExhausted when the working precision cannot separate them.
  static std::shared_ptr<const GaloisGroup> compute(std::shared_ptr<const LocalField> field);

  const LocalField& field() const { return *field_; }
  const std::shared_ptr<const LocalField>& field_ptr() const { return field_; }
  const FiniteGroup& group() const { return group_; }
  int order() const { return group_.order(); }
  const Automorphism& automorphism(int s) const { return autos_[s]; }

  FieldElement apply(int s, const FieldElement& x) const;
  int frobenius_exponent(int s) const { return autos_[s].frobenius_exponent; }

  /// i(sigma) = nu_L(sigma(pi)/pi - 1) for sigma in G_0 \ {1}; -1 outside G_0;
  /// nullopt for the identity.
  std::optional<int> break_of(int s) const { return breaks_[s]; }
  /// Distinct values of i(sigma) over G_0 \ {1}, ascending.
  std::vector<int> breaks() const;
  int max_break() const;
  /// Element indices of G_i (i >= -1), ascending.
  std::vector<int> ramification_subgroup(int i) const;
  std::vector<int> inertia() const { return ramification_subgroup(0); }
  int tame_index() const;
  int wild_index() const;

  /// theta_0(sigma) = residue(sigma(pi)/pi) in lambda^x, and for i >= 1
  /// theta_i(sigma) = residue((sigma(pi)/pi - 1)/pi^i) in lambda. Throws
  /// NotInLevel when sigma is not in G_i.
  ResidueElement theta(int i, int s) const;

 private:
  GaloisGroup(std::shared_ptr<const LocalField> field, std::vector<Automorphism> autos, FiniteGroup group);

  std::shared_ptr<const LocalField> field_;
  std::vector<Automorphism> autos_;
  FiniteGroup group_;
  std::vector<std::vector<FieldElement>> basis_images_;
  std::vector<std::optional<int>> breaks_;
};

/// All roots in O_L of a monic polynomial over O_L, each correct to at least
/// `required` pi-adic digits. Multiple roots raise PrecisionExhausted.
std::vector<FieldElement> roots_in_field(const LocalField& L, const Poly<FieldElement>& f, int required);

}  // namespace ramcoh
