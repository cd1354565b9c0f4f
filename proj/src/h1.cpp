#include "ramcoh/h1.hpp"

#include <algorithm>

namespace ramcoh {

namespace {

// y with K y = v for a full-rank lower-triangular K; nullopt if v is not in the lattice.
std::optional<IntVector> solve_lower(const IntMatrix& k, IntVector v) {
  IntVector y(k.cols(), Int(0));
  for (std::size_t j = 0; j < k.cols(); ++j) {
    if (!mpz_divisible_p(v[j].get_mpz_t(), k(j, j).get_mpz_t())) return std::nullopt;
    y[j] = v[j] / k(j, j);
    for (std::size_t i = j; i < v.size(); ++i) v[i] -= y[j] * k(i, j);
  }
  return y;
}

}  // namespace

// ---------------------------------------------------------------- CohomologyClass

CohomologyClass::CohomologyClass(std::shared_ptr<const CohomologyGroup> parent, IntVector coords)
    : parent_(std::move(parent)), coords_(parent_->presentation().reduce(coords)) {}

Int CohomologyClass::order() const { return parent_->presentation().element_order(coords_); }

bool CohomologyClass::is_zero() const { return parent_->presentation().is_zero(coords_); }

CohomologyClass CohomologyClass::operator+(const CohomologyClass& other) const {
  if (parent_ != other.parent_) throw Error(ErrorCode::DimensionMismatch, "classes from different groups");
  IntVector c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return {parent_, c};
}

CohomologyClass CohomologyClass::operator*(const Int& k) const {
  IntVector c(coords_);
  for (auto& x : c) x *= k;
  return {parent_, c};
}

bool CohomologyClass::operator==(const CohomologyClass& other) const {
  return parent_ == other.parent_ && coords_ == other.coords_;
}

Cocycle CohomologyClass::representative() const { return parent_->section(coords_); }

// ---------------------------------------------------------------- CohomologyGroup

std::shared_ptr<const CohomologyGroup> CohomologyGroup::compute(const GModule& m) {
  return std::shared_ptr<const CohomologyGroup>(new CohomologyGroup(m));
}

CohomologyGroup::CohomologyGroup(const GModule& m) : module_(m), canonical_(m.canonical()) {
  const IntVector& d = canonical_.presentation().invariant_factors();
  for (const auto& x : d)
    if (x == 0) throw Error(ErrorCode::InfiniteOrder, "cohomology of an infinite module is not supported");
  const FiniteGroup& g = canonical_.group();
  const std::size_t k = d.size();
  const std::size_t n = static_cast<std::size_t>(g.order());
  const std::size_t unknowns = (n - 1) * k;
  auto idx = [k](std::size_t s, std::size_t i) { return (s - 1) * k + i; };

  // c(st) - c(s) - A_s c(t) = 0 for s, t != 1.
  IntMatrix eq((n - 1) * (n - 1) * k, unknowns);
  IntVector moduli;
  std::size_t row = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t t = 1; t < n; ++t) {
      const std::size_t st = static_cast<std::size_t>(g.mul(static_cast<int>(s), static_cast<int>(t)));
      const IntMatrix& a = canonical_.action(static_cast<int>(s));
      for (std::size_t i = 0; i < k; ++i, ++row) {
        if (st != 0) eq(row, idx(st, i)) += 1;
        eq(row, idx(s, i)) -= 1;
        for (std::size_t j = 0; j < k; ++j) eq(row, idx(t, j)) -= a(i, j);
        moduli.push_back(d[i]);
      }
    }
  }
  kernel_ = unknowns == 0 ? IntMatrix(0, 0) : kernel_mod(eq, moduli);

  // Relations of Z^1 / B^1 in kernel coordinates: zero cochains and coboundaries.
  std::vector<IntVector> rel;
  auto add_relation = [&](const IntVector& v) {
    const auto y = solve_lower(kernel_, v);
    if (!y) throw Error(ErrorCode::NotACocycle, "internal: relation outside the cocycle lattice");
    rel.push_back(*y);
  };
  for (std::size_t s = 1; s < n; ++s)
    for (std::size_t i = 0; i < k; ++i) {
      IntVector v(unknowns, Int(0));
      v[idx(s, i)] = d[i];
      add_relation(v);
    }
  for (std::size_t j = 0; j < k; ++j) {
    IntVector v(unknowns, Int(0));
    for (std::size_t s = 1; s < n; ++s) {
      const IntMatrix& a = canonical_.action(static_cast<int>(s));
      for (std::size_t i = 0; i < k; ++i) v[idx(s, i)] = a(i, j) - (i == j ? 1 : 0);
    }
    add_relation(v);
  }
  raw_ = FgAbelianPresentation(unknowns, IntMatrix::from_columns(unknowns, rel));
  h1_ = FgAbelianPresentation::diagonal(raw_.invariant_factors());
}

IntVector CohomologyGroup::project(const Cocycle& c) const {
  const std::size_t n = static_cast<std::size_t>(module_.group().order());
  if (c.values.size() != n) throw Error(ErrorCode::DimensionMismatch, "cocycle has wrong number of values");
  IntVector v;
  for (std::size_t s = 1; s < n; ++s) {
    const IntVector cc = module_.presentation().to_canonical(c.values[s]);
    v.insert(v.end(), cc.begin(), cc.end());
  }
  const auto y = solve_lower(kernel_, v);
  if (!y) throw Error(ErrorCode::NotACocycle, "cochain does not satisfy the cocycle identity");
  return h1_.reduce(raw_.to_canonical(*y));
}

Cocycle CohomologyGroup::section(const IntVector& h) const {
  const std::size_t n = static_cast<std::size_t>(module_.group().order());
  const std::size_t k = canonical_.rank();
  const IntVector v = kernel_ * raw_.from_canonical(h1_.reduce(h));
  Cocycle c;
  c.values.push_back(module_.zero());
  for (std::size_t s = 1; s < n; ++s) {
    IntVector cc(v.begin() + static_cast<std::ptrdiff_t>((s - 1) * k),
                 v.begin() + static_cast<std::ptrdiff_t>(s * k));
    c.values.push_back(module_.reduce(module_.presentation().from_canonical(cc)));
  }
  return c;
}

CohomologyClass CohomologyGroup::class_of(const Cocycle& c) const {
  if (!is_cocycle(module_, c)) throw Error(ErrorCode::NotACocycle, "map does not satisfy the cocycle identity");
  return make_class(project(c));
}

CohomologyClass CohomologyGroup::make_class(const IntVector& h) const {
  if (h.size() != h1_.num_generators()) throw Error(ErrorCode::DimensionMismatch, "class coordinates have wrong length");
  return {shared_from_this(), h};
}

CohomologyClass CohomologyGroup::zero() const { return make_class(IntVector(h1_.num_generators(), Int(0))); }

CohomologyClass CohomologyGroup::generator(std::size_t j) const {
  IntVector h(h1_.num_generators(), Int(0));
  h.at(j) = 1;
  return make_class(h);
}

// ---------------------------------------------------------------- maps

CohomologyClass restriction(const CohomologyGroup& target, const std::vector<int>& subgroup,
                            const CohomologyClass& h) {
  std::vector<int> el(subgroup);
  std::sort(el.begin(), el.end());
  el.erase(std::unique(el.begin(), el.end()), el.end());
  if (!h.parent().module().group().is_subgroup(el))
    throw Error(ErrorCode::NotASubgroup, "restriction to a set that is not a subgroup");
  if (static_cast<int>(el.size()) != target.module().group().order())
    throw Error(ErrorCode::DimensionMismatch, "target cohomology is over a group of different order");
  const Cocycle rep = h.representative();
  Cocycle res;
  for (int s : el) res.values.push_back(rep.values[s]);
  return target.class_of(res);
}

IntMatrix induced_map(const IntMatrix& phi, const CohomologyGroup& from, const CohomologyGroup& to) {
  check_equivariant(from.module(), to.module(), phi);
  IntMatrix out(to.num_generators(), from.num_generators());
  for (std::size_t j = 0; j < from.num_generators(); ++j) {
    IntVector e(from.num_generators(), Int(0));
    e[j] = 1;
    const Cocycle rep = from.section(e);
    Cocycle mapped;
    for (const auto& v : rep.values) mapped.values.push_back(to.module().reduce(phi * v));
    const IntVector col = to.project(mapped);
    for (std::size_t i = 0; i < col.size(); ++i) out(i, j) = col[i];
  }
  return out;
}

CohomologyClass apply_induced(const IntMatrix& induced, const CohomologyGroup& to, const CohomologyClass& h) {
  return to.make_class(induced * h.coords());
}

CoboundaryResult is_coboundary(const GModule& m, const Cocycle& c) {
  if (!is_cocycle(m, c)) throw Error(ErrorCode::NotACocycle, "map does not satisfy the cocycle identity");
  const std::size_t n = static_cast<std::size_t>(m.group().order());
  const std::size_t r = m.rank();
  const IntMatrix& rel = m.presentation().relations();
  IntMatrix a(n * r, r), big(n * r, n * rel.cols());
  IntVector b;
  for (std::size_t s = 0; s < n; ++s) {
    const IntMatrix& as = m.action(static_cast<int>(s));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) a(s * r + i, j) = as(i, j) - (i == j ? 1 : 0);
      for (std::size_t j = 0; j < rel.cols(); ++j) big(s * r + i, s * rel.cols() + j) = rel(i, j);
      b.push_back(c.values[s][i]);
    }
  }
  const auto sol = solve_mod_lattice(a, b, big);
  CoboundaryResult out;
  if (const auto* ls = std::get_if<LatticeSolution>(&sol)) {
    out.is_coboundary = true;
    out.witness = m.reduce(ls->particular);
  } else {
    out.certificate = std::get<NoSolution>(sol);
  }
  return out;
}

FgSubgroup class_subgroup(const CohomologyGroup& h, const std::vector<CohomologyClass>& generators) {
  std::vector<IntVector> coords;
  for (const auto& g : generators) coords.push_back(g.coords());
  return FgSubgroup(h.presentation(), coords);
}

}  // namespace ramcoh
