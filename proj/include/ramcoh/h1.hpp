#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ramcoh/gmodule.hpp"

namespace ramcoh {

class CohomologyGroup;

/// An element of H^1(G, M), in the coordinates of the parent's invariant-factor
/// presentation.
class CohomologyClass {
 public:
  CohomologyClass(std::shared_ptr<const CohomologyGroup> parent, IntVector coords);

  const CohomologyGroup& parent() const { return *parent_; }
  const std::shared_ptr<const CohomologyGroup>& parent_ptr() const { return parent_; }
  const IntVector& coords() const { return coords_; }

  Int order() const;
  bool is_zero() const;
  CohomologyClass operator+(const CohomologyClass& other) const;
  CohomologyClass operator*(const Int& k) const;
  bool operator==(const CohomologyClass& other) const;
  /// A cocycle representing this class.
  Cocycle representative() const;

 private:
  std::shared_ptr<const CohomologyGroup> parent_;
  IntVector coords_;
};

/// H^1(G, M) = Z^1 / B^1 for a finite G-module M.
class CohomologyGroup : public std::enable_shared_from_this<CohomologyGroup> {
 public:
  /// Throws InfiniteOrder when M is not finite.
  static std::shared_ptr<const CohomologyGroup> compute(const GModule& m);

  const GModule& module() const { return module_; }
  /// H^1 as Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... (all d_j > 1).
  const FgAbelianPresentation& presentation() const { return h1_; }
  const IntVector& invariant_factors() const { return h1_.invariant_factors(); }
  Int order() const { return h1_.order(); }
  std::size_t num_generators() const { return h1_.num_generators(); }

  /// Coordinates of the class of a cocycle (not checked).
  IntVector project(const Cocycle& c) const;
  /// A cocycle with the given class.
  Cocycle section(const IntVector& h) const;

  /// Throws NotACocycle.
  CohomologyClass class_of(const Cocycle& c) const;
  CohomologyClass make_class(const IntVector& h) const;
  CohomologyClass zero() const;
  CohomologyClass generator(std::size_t j) const;

  /// Number of cochain unknowns, (|G| - 1) times the canonical rank of M.
  std::size_t num_unknowns() const { return kernel_.rows(); }

 private:
  explicit CohomologyGroup(const GModule& m);

  GModule module_;
  GModule canonical_;
  IntMatrix kernel_;  // Z^1 basis, lower triangular, full rank
  FgAbelianPresentation raw_;  // Z^1 / B^1 in kernel coordinates
  FgAbelianPresentation h1_;
};

/// Restriction H^1(G, M) -> H^1(H, M) where `target` = H^1(H, M|_H) and the
/// subgroup is given by element indices of G (ascending order is H's order).
CohomologyClass restriction(const CohomologyGroup& target, const std::vector<int>& subgroup,
                            const CohomologyClass& h);

/// Matrix of H^1(phi): H^1(G, M) -> H^1(G, M'); throws NotEquivariant.
IntMatrix induced_map(const IntMatrix& phi, const CohomologyGroup& from, const CohomologyGroup& to);
CohomologyClass apply_induced(const IntMatrix& induced, const CohomologyGroup& to, const CohomologyClass& h);

struct CoboundaryResult {
  bool is_coboundary = false;
  /// m with c(sigma) = sigma.m - m, when is_coboundary.
  IntVector witness;
  /// Obstruction from the linear solver otherwise.
  std::optional<NoSolution> certificate;
};

/// Throws NotACocycle.
CoboundaryResult is_coboundary(const GModule& m, const Cocycle& c);

/// Image of the classes `generators` as a subgroup of H^1.
FgSubgroup class_subgroup(const CohomologyGroup& h, const std::vector<CohomologyClass>& generators);

}  // namespace ramcoh
