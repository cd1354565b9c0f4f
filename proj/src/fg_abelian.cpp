#include "ramcoh/fg_abelian.hpp"

#include <algorithm>
#include <sstream>

namespace ramcoh {

namespace {

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_nonneg(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm_int(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Column operations on a matrix, mirrored on an optional companion matrix.
void col_addmul(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}
void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}
void col_negate(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}
void row_addmul(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}
void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}
void row_negate(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

// Euclid on row `r` over columns [from, cols): afterwards only column `from`
// may be nonzero in that row. Operations are mirrored on `track` if given.
void clear_row(IntMatrix& m, std::size_t r, std::size_t from, IntMatrix* track) {
  for (;;) {
    std::size_t best = m.cols();
    for (std::size_t j = from; j < m.cols(); ++j)
      if (m(r, j) != 0 && (best == m.cols() || abs_int(m(r, j)) < abs_int(m(r, best)))) best = j;
    if (best == m.cols()) return;
    col_swap(m, from, best);
    if (track) col_swap(*track, from, best);
    bool done = true;
    for (std::size_t j = from + 1; j < m.cols(); ++j) {
      if (m(r, j) == 0) continue;
      Int q;
      mpz_tdiv_q(q.get_mpz_t(), m(r, j).get_mpz_t(), m(r, from).get_mpz_t());
      col_addmul(m, j, from, q);
      if (track) col_addmul(*track, j, from, q);
      if (m(r, j) != 0) done = false;
    }
    if (done) return;
  }
}

}  // namespace

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntVector IntMatrix::row(std::size_t r) const { return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product dimensions");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
    }
  return p;
}

IntVector IntMatrix::operator*(const IntVector& x) const {
  if (cols_ != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector dimensions");
  IntVector y(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) y[i] += (*this)(i, k) * x[k];
  return y;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum dimensions");
  IntMatrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum dimensions");
  IntMatrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
  return s;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "hconcat row mismatch");
  IntMatrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) m(r, a.cols_ + c) = b(r, c);
  }
  return m;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "vconcat column mismatch");
  IntMatrix m(a.rows_ + b.rows_, a.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) m(a.rows_ + r, c) = b(r, c);
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
  }
  os << "]";
  return os.str();
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m(a);
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      row_swap(m, k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------- Smith form

IntVector SmithForm::diagonal() const {
  IntVector d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm s{IntMatrix::identity(m), IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& A = s.D;

  // Row operations update U (rows) and U_inv (inverse column operations).
  auto r_addmul = [&](std::size_t dst, std::size_t src, const Int& q) {
    row_addmul(A, dst, src, q);
    row_addmul(s.U, dst, src, q);
    col_addmul(s.U_inv, src, dst, -q);
  };
  auto r_swap = [&](std::size_t x, std::size_t y) {
    row_swap(A, x, y);
    row_swap(s.U, x, y);
    col_swap(s.U_inv, x, y);
  };
  auto r_negate = [&](std::size_t x) {
    row_negate(A, x);
    row_negate(s.U, x);
    col_negate(s.U_inv, x);
  };
  auto c_addmul = [&](std::size_t dst, std::size_t src, const Int& q) {
    col_addmul(A, dst, src, q);
    col_addmul(s.V, dst, src, q);
  };
  auto c_swap = [&](std::size_t x, std::size_t y) {
    col_swap(A, x, y);
    col_swap(s.V, x, y);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero |entry| in the trailing block, row-major ties.
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (A(i, j) != 0 && (pr == m || abs_int(A(i, j)) < abs_int(A(pr, pc)))) pr = i, pc = j;
    if (pr == m) break;
    r_swap(t, pr);
    c_swap(t, pc);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
        r_addmul(i, t, q);
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
        c_addmul(j, t, q);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t br = t, bc = t;
        for (std::size_t i = t; i < m; ++i)
          if (A(i, t) != 0 && abs_int(A(i, t)) < abs_int(A(br, bc))) br = i, bc = t;
        for (std::size_t j = t; j < n; ++j)
          if (A(t, j) != 0 && abs_int(A(t, j)) < abs_int(A(br, bc))) br = t, bc = j;
        r_swap(t, br);
        c_swap(t, bc);
        continue;
      }
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      r_addmul(t, bad, Int(-1));
    }
    if (A(t, t) < 0) r_negate(t);
    s.rank = t + 1;
  }
  return s;
}

// ---------------------------------------------------------------- Hermite form, kernels

IntMatrix column_hermite_form(const IntMatrix& a) {
  IntMatrix m(a);
  std::size_t c = 0;
  for (std::size_t r = 0; r < m.rows() && c < m.cols(); ++r) {
    clear_row(m, r, c, nullptr);
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) col_negate(m, c);
    for (std::size_t j = 0; j < c; ++j) col_addmul(m, j, c, floor_div(m(r, j), m(r, c)));
    ++c;
  }
  IntMatrix h(m.rows(), c);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < c; ++j) h(r, j) = m(r, j);
  return h;
}

IntMatrix kernel_mod(const IntMatrix& a, const IntVector& moduli) {
  if (moduli.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "one modulus per row required");
  IntMatrix k = IntMatrix::identity(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const std::size_t c = k.cols();
    IntMatrix w(1, c + 1);
    bool zero_row = true;
    for (std::size_t j = 0; j < c; ++j) {
      for (std::size_t i = 0; i < a.cols(); ++i) w(0, j) += a(r, i) * k(i, j);
      if (moduli[r] != 0) w(0, j) = mod_nonneg(w(0, j), abs_int(moduli[r]));
      if (w(0, j) != 0) zero_row = false;
    }
    if (zero_row) continue;
    w(0, c) = moduli[r];
    IntMatrix y = IntMatrix::identity(c + 1);
    clear_row(w, 0, 0, &y);
    // Columns 1..c of y span the kernel of [w | d]; keep their z-part.
    IntMatrix z(c, c);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j) z(i, j) = y(i, j + 1);
    k = column_hermite_form(k * z);
  }
  return column_hermite_form(k);
}

// ---------------------------------------------------------------- solving

std::variant<LatticeSolution, NoSolution> solve_mod_lattice(const IntMatrix& a, const IntVector& b,
                                                            const IntMatrix& r) {
  if (a.rows() != b.size() || (r.cols() > 0 && r.rows() != a.rows()))
    throw Error(ErrorCode::DimensionMismatch, "solve_mod_lattice dimensions");
  const std::size_t n = a.cols();
  const IntMatrix c = r.cols() > 0 ? IntMatrix::hconcat(a, r) : a;
  const SmithForm s = smith_normal_form(c);
  const IntVector ub = s.U * b;
  IntVector z(c.cols(), Int(0));
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      const Int& d = s.D(i, i);
      if (!mpz_divisible_p(ub[i].get_mpz_t(), d.get_mpz_t())) return NoSolution{s.U.row(i), d};
      z[i] = ub[i] / d;
    } else if (ub[i] != 0) {
      return NoSolution{s.U.row(i), Int(0)};
    }
  }
  const IntVector full = s.V * z;
  LatticeSolution sol{IntVector(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n)), {}};
  for (std::size_t j = s.rank; j < c.cols(); ++j) {
    IntVector h(n);
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      h[i] = s.V(i, j);
      if (h[i] != 0) nonzero = true;
    }
    if (nonzero) sol.homogeneous.push_back(std::move(h));
  }
  return sol;
}

// ---------------------------------------------------------------- presentations

FgAbelianPresentation::FgAbelianPresentation(std::size_t generators, IntMatrix relations)
    : m_(generators), relations_(std::move(relations)) {
  if (relations_.cols() == 0) relations_ = IntMatrix(m_, 0);
  if (relations_.rows() != m_) throw Error(ErrorCode::DimensionMismatch, "relation matrix must have one row per generator");
  const SmithForm s = smith_normal_form(relations_);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m_; ++i) {
    const Int d = i < std::min(m_, relations_.cols()) ? s.D(i, i) : Int(0);
    if (d == 1) continue;
    keep.push_back(i);
    factors_.push_back(d);
  }
  to_ = IntMatrix(keep.size(), m_);
  from_ = IntMatrix(m_, keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t j = 0; j < m_; ++j) {
      to_(k, j) = s.U(keep[k], j);
      from_(j, k) = s.U_inv(j, keep[k]);
    }
}

FgAbelianPresentation FgAbelianPresentation::diagonal(const IntVector& orders) {
  return FgAbelianPresentation(orders.size(), IntMatrix::diagonal(orders));
}

bool FgAbelianPresentation::is_finite() const {
  return std::none_of(factors_.begin(), factors_.end(), [](const Int& d) { return d == 0; });
}

Int FgAbelianPresentation::order() const {
  if (!is_finite()) throw Error(ErrorCode::InfiniteOrder, "group has a free factor");
  Int o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

IntVector FgAbelianPresentation::to_canonical(const IntVector& x) const {
  if (x.size() != m_) throw Error(ErrorCode::DimensionMismatch, "coordinate vector has wrong length");
  IntVector c = to_ * x;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (factors_[j] != 0) c[j] = mod_nonneg(c[j], factors_[j]);
  return c;
}

IntVector FgAbelianPresentation::from_canonical(const IntVector& c) const {
  if (c.size() != factors_.size()) throw Error(ErrorCode::DimensionMismatch, "canonical vector has wrong length");
  return from_ * c;
}

bool FgAbelianPresentation::is_zero(const IntVector& x) const {
  const IntVector c = to_canonical(x);
  return std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
}

bool FgAbelianPresentation::equal(const IntVector& x, const IntVector& y) const {
  IntVector d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  return is_zero(d);
}

Int FgAbelianPresentation::element_order(const IntVector& x) const {
  const IntVector c = to_canonical(x);
  Int o = 1;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    if (factors_[j] == 0) throw Error(ErrorCode::InfiniteOrder, "element has infinite order");
    o = lcm_int(o, factors_[j] / gcd_int(c[j], factors_[j]));
  }
  return o;
}

QuotientPresentation quotient_presentation(const FgAbelianPresentation& p, const std::vector<IntVector>& s) {
  const std::size_t m = p.num_generators();
  const IntMatrix extra = IntMatrix::from_columns(m, s);
  return {FgAbelianPresentation(m, IntMatrix::hconcat(p.relations(), extra)), IntMatrix::identity(m)};
}

// ---------------------------------------------------------------- subgroups

FgSubgroup::FgSubgroup(const FgAbelianPresentation& ambient, const std::vector<IntVector>& generators)
    : ambient_(ambient), generators_(generators) {
  if (!ambient_.is_finite()) throw Error(ErrorCode::InfiniteOrder, "subgroups are supported in finite groups only");
  const auto& d = ambient_.invariant_factors();
  std::vector<IntVector> cols;
  for (const auto& g : generators_) cols.push_back(ambient_.to_canonical(g));
  for (std::size_t j = 0; j < d.size(); ++j) {
    IntVector e(d.size(), Int(0));
    e[j] = d[j];
    cols.push_back(std::move(e));
  }
  basis_ = column_hermite_form(IntMatrix::from_columns(d.size(), cols));
}

bool FgSubgroup::contains(const IntVector& x) const {
  IntVector c = ambient_.to_canonical(x);
  for (std::size_t j = 0; j < basis_.cols(); ++j) {
    const Int& piv = basis_(j, j);
    if (!mpz_divisible_p(c[j].get_mpz_t(), piv.get_mpz_t())) return false;
    const Int z = c[j] / piv;
    for (std::size_t i = j; i < c.size(); ++i) c[i] -= z * basis_(i, j);
  }
  return true;
}

bool FgSubgroup::contains(const FgSubgroup& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const IntVector& g) { return contains(g); });
}

Int FgSubgroup::order() const {
  Int o = ambient_.order();
  for (std::size_t j = 0; j < basis_.cols(); ++j) o /= basis_(j, j);
  return o;
}

IntVector FgSubgroup::invariant_factors() const {
  // The subgroup is basis_ Z^k / diag(d) Z^k; write diag(d) in the basis.
  const auto& d = ambient_.invariant_factors();
  const std::size_t k = d.size();
  IntMatrix x(k, k);
  for (std::size_t col = 0; col < k; ++col) {
    IntVector c(k, Int(0));
    c[col] = d[col];
    for (std::size_t j = 0; j < k; ++j) {
      const Int z = c[j] / basis_(j, j);
      x(j, col) = z;
      for (std::size_t i = j; i < k; ++i) c[i] -= z * basis_(i, j);
    }
  }
  IntVector out;
  for (const auto& v : smith_normal_form(x).diagonal())
    if (v != 1) out.push_back(v);
  return out;
}

}  // namespace ramcoh
