#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ramcoh/padic.hpp"

namespace ramcoh {

using IntVector = std::vector<Int>;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);
  static IntMatrix diagonal(const IntVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& x) const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;
  bool is_zero() const;

  /// [A | B] and [A ; B].
  static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Fraction-free determinant of a square matrix.
Int determinant(const IntMatrix& a);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithForm {
  IntMatrix U;
  IntMatrix U_inv;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
  /// The min(rows, cols) diagonal entries of D.
  IntVector diagonal() const;
};

/// Pivot: smallest nonzero absolute value, ties broken row-major.
SmithForm smith_normal_form(const IntMatrix& a);

/// Column echelon basis of the lattice spanned by the columns of `a`: column c
/// has its leading (topmost) nonzero entry at a row strictly below that of
/// column c-1, the entry is positive, and entries to its left in that row are
/// reduced into [0, pivot).
IntMatrix column_hermite_form(const IntMatrix& a);

/// Lattice of x in Z^n with (A x)_r = 0 modulo moduli[r] (modulus 0 means
/// exact), as a column Hermite basis.
IntMatrix kernel_mod(const IntMatrix& a, const IntVector& moduli);

struct LatticeSolution {
  IntVector particular;
  std::vector<IntVector> homogeneous;
};

/// Row functional y with y * [A | R] = 0 modulo `modulus` and y * b nonzero
/// modulo `modulus`; modulus 0 means the statement holds over Z.
struct NoSolution {
  IntVector functional;
  Int modulus;
};

/// All x with A x = b modulo the column span of R.
std::variant<LatticeSolution, NoSolution> solve_mod_lattice(const IntMatrix& a, const IntVector& b,
                                                            const IntMatrix& r);

/// The group Z^m / R Z^k, with a canonical decomposition into cyclic factors.
class FgAbelianPresentation {
 public:
  FgAbelianPresentation() : FgAbelianPresentation(0, IntMatrix(0, 0)) {}
  FgAbelianPresentation(std::size_t generators, IntMatrix relations);
  /// Z/d_1 x ... x Z/d_k in its own coordinates.
  static FgAbelianPresentation diagonal(const IntVector& orders);

  std::size_t num_generators() const { return m_; }
  const IntMatrix& relations() const { return relations_; }

  /// Nontrivial invariant factors d_1 | d_2 | ... (0 stands for Z).
  const IntVector& invariant_factors() const { return factors_; }
  bool is_finite() const;
  /// Group order; throws InfiniteOrder for infinite groups.
  Int order() const;

  /// Canonical coordinates c (reduced into [0, d_j)) and back.
  IntVector to_canonical(const IntVector& x) const;
  IntVector from_canonical(const IntVector& c) const;
  const IntMatrix& to_canonical_matrix() const { return to_; }
  const IntMatrix& from_canonical_matrix() const { return from_; }

  bool is_zero(const IntVector& x) const;
  bool equal(const IntVector& x, const IntVector& y) const;
  /// Canonical representative of x in the original coordinates.
  IntVector reduce(const IntVector& x) const { return from_canonical(to_canonical(x)); }
  /// Least k >= 1 with k x = 0; throws InfiniteOrder.
  Int element_order(const IntVector& x) const;

 private:
  std::size_t m_;
  IntMatrix relations_;
  IntVector factors_;
  IntMatrix to_;
  IntMatrix from_;
};

struct QuotientPresentation {
  FgAbelianPresentation quotient;
  /// Coordinate map from the original generators to the quotient's.
  IntMatrix projection;
};

/// P / <S> for subgroup generators S in P's coordinates.
QuotientPresentation quotient_presentation(const FgAbelianPresentation& p, const std::vector<IntVector>& s);

/// A subgroup of a finite presentation, given by generators. Comparisons are
/// meaningful only between subgroups of the same ambient group.
class FgSubgroup {
 public:
  FgSubgroup(const FgAbelianPresentation& ambient, const std::vector<IntVector>& generators);

  bool contains(const IntVector& x) const;
  bool contains(const FgSubgroup& other) const;
  bool operator==(const FgSubgroup& other) const { return contains(other) && other.contains(*this); }
  Int order() const;
  IntVector invariant_factors() const;
  const std::vector<IntVector>& generators() const { return generators_; }

 private:
  FgAbelianPresentation ambient_;
  std::vector<IntVector> generators_;
  IntMatrix basis_;  // full-rank lower-triangular basis in canonical coordinates
};

}  // namespace ramcoh
