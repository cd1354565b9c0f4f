#include "ramcoh/gmodule.hpp"

#include <algorithm>

namespace ramcoh {

GModule::GModule(FiniteGroup group, FgAbelianPresentation presentation, std::vector<IntMatrix> action)
    : group_(std::move(group)), presentation_(std::move(presentation)), action_(std::move(action)) {
  const std::size_t m = rank();
  if (static_cast<int>(action_.size()) != group_.order())
    throw Error(ErrorCode::NotAModule, "one action matrix per group element required");
  for (const auto& a : action_)
    if (a.rows() != m || a.cols() != m) throw Error(ErrorCode::NotAModule, "action matrix has wrong size");
  const IntMatrix& r = presentation_.relations();
  for (int s = 0; s < group_.order(); ++s) {
    const IntMatrix ar = action_[s] * r;
    for (std::size_t c = 0; c < ar.cols(); ++c)
      if (!presentation_.is_zero(ar.column(c)))
        throw Error(ErrorCode::NotAModule, "action of element " + std::to_string(s) + " does not preserve relations");
  }
  auto same = [&](const IntMatrix& x, const IntMatrix& y) {
    const IntMatrix d = x - y;
    for (std::size_t c = 0; c < m; ++c)
      if (!presentation_.is_zero(d.column(c))) return false;
    return true;
  };
  if (!same(action_[0], IntMatrix::identity(m))) throw Error(ErrorCode::NotAModule, "identity does not act trivially");
  for (int s = 0; s < group_.order(); ++s)
    for (int t = 0; t < group_.order(); ++t)
      if (!same(action_[group_.mul(s, t)], action_[s] * action_[t]))
        throw Error(ErrorCode::NotAModule, "action is not compatible with the group law");
}

GModule GModule::canonical() const {
  const auto& to = presentation_.to_canonical_matrix();
  const auto& from = presentation_.from_canonical_matrix();
  const auto& d = presentation_.invariant_factors();
  std::vector<IntMatrix> act;
  for (const auto& a : action_) {
    IntMatrix b = to * a * from;
    for (std::size_t i = 0; i < b.rows(); ++i)
      if (d[i] != 0)
        for (std::size_t j = 0; j < b.cols(); ++j) mpz_fdiv_r(b(i, j).get_mpz_t(), b(i, j).get_mpz_t(), d[i].get_mpz_t());
    act.push_back(std::move(b));
  }
  return GModule(group_, FgAbelianPresentation::diagonal(d), std::move(act));
}

GModule GModule::restrict_to(const std::vector<int>& subgroup) const {
  std::vector<int> el(subgroup);
  std::sort(el.begin(), el.end());
  el.erase(std::unique(el.begin(), el.end()), el.end());
  FiniteGroup h = group_.subgroup(el);
  std::vector<IntMatrix> act;
  for (int s : el) act.push_back(action_[s]);
  return GModule(std::move(h), presentation_, std::move(act));
}

void check_equivariant(const GModule& from, const GModule& to, const IntMatrix& phi) {
  if (phi.rows() != to.rank() || phi.cols() != from.rank())
    throw Error(ErrorCode::DimensionMismatch, "morphism matrix has wrong size");
  if (from.group().table() != to.group().table())
    throw Error(ErrorCode::NotEquivariant, "modules are over different groups");
  const IntMatrix pr = phi * from.presentation().relations();
  for (std::size_t c = 0; c < pr.cols(); ++c)
    if (!to.presentation().is_zero(pr.column(c)))
      throw Error(ErrorCode::NotEquivariant, "morphism does not respect relations");
  for (int s = 0; s < from.group().order(); ++s) {
    const IntMatrix d = phi * from.action(s) - to.action(s) * phi;
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (!to.presentation().is_zero(d.column(c)))
        throw Error(ErrorCode::NotEquivariant, "morphism does not commute with element " + std::to_string(s));
  }
}

bool is_cocycle(const GModule& m, const Cocycle& c) {
  const FiniteGroup& g = m.group();
  if (static_cast<int>(c.values.size()) != g.order()) return false;
  for (const auto& v : c.values)
    if (v.size() != m.rank()) return false;
  for (int s = 0; s < g.order(); ++s)
    for (int t = 0; t < g.order(); ++t) {
      IntVector lhs = c.values[g.mul(s, t)];
      const IntVector st = m.action(s) * c.values[t];
      for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] -= c.values[s][i] + st[i];
      if (!m.presentation().is_zero(lhs)) return false;
    }
  return true;
}

Cocycle coboundary(const GModule& m, const IntVector& x) {
  Cocycle c;
  for (int s = 0; s < m.group().order(); ++s) {
    IntVector v = m.action(s) * x;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= x[i];
    c.values.push_back(m.reduce(v));
  }
  return c;
}

Cocycle add_cocycles(const GModule& m, const Cocycle& a, const Cocycle& b) {
  Cocycle c;
  for (std::size_t s = 0; s < a.values.size(); ++s) {
    IntVector v(a.values[s]);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values[s][i];
    c.values.push_back(m.reduce(v));
  }
  return c;
}

Cocycle scale_cocycle(const GModule& m, const Cocycle& a, const Int& k) {
  Cocycle c;
  for (const auto& v : a.values) {
    IntVector w(v);
    for (auto& x : w) x *= k;
    c.values.push_back(m.reduce(w));
  }
  return c;
}

}  // namespace ramcoh
