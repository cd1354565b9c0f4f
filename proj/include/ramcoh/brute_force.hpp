#pragma once

#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "ramcoh/gmodule.hpp"

namespace ramcoh {

/// H^1(G, M) by exhaustive enumeration of cochains with c(1) = 0. Independent
/// of the Smith-form engine: invariant factors are read off the counts
/// #{h : l^k h = 0}. Diagonal presentations are enumerated as given.
class BruteForceH1 {
 public:
  /// Throws BudgetExceeded when |M|^(|G|-1) exceeds `budget`.
  explicit BruteForceH1(const GModule& m, std::uint64_t budget = 10'000'000);

  const IntVector& invariant_factors() const { return factors_; }
  Int order() const;
  std::size_t num_cocycles() const { return cocycles_.size(); }
  std::size_t num_coboundaries() const { return coboundaries_.size(); }

  bool is_cocycle(const Cocycle& c) const;
  bool is_coboundary(const Cocycle& c) const;
  /// Least k >= 1 with k c a coboundary.
  Int class_order(const Cocycle& c) const;
  /// Class index in [0, order()), 0 for the trivial class.
  std::size_t class_id(const Cocycle& c) const;
  /// Classes in the image of H^1(source) under phi: source -> this module.
  std::set<std::size_t> image_of(const BruteForceH1& source, const IntMatrix& phi) const;
  /// Classes in the cyclic subgroup generated by the class of c.
  std::set<std::size_t> cyclic_subgroup(const Cocycle& c) const;

 private:
  using Code = std::uint64_t;
  Code encode_element(const IntVector& canonical) const;
  IntVector decode_element(Code code) const;
  Code encode_cocycle(const Cocycle& c) const;
  Cocycle decode_cocycle(Code code) const;  // original coordinates
  Code add_cocycles(Code a, Code b) const;
  void build_class_ids() const;

  GModule module_;
  bool diagonal_;
  IntVector d_;                 // cyclic orders used for enumeration
  IntMatrix to_, from_;         // original <-> enumeration coordinates
  std::uint64_t size_ = 1;      // |M|
  std::vector<std::vector<Code>> act_;  // act_[s][x]
  std::vector<Code> cocycles_;          // sorted
  std::vector<Code> coboundaries_;      // sorted
  IntVector factors_;
  mutable std::unordered_map<Code, std::size_t> class_ids_;
};

}  // namespace ramcoh
