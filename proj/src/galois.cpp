#include "ramcoh/galois.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ramcoh {

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty group table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::DimensionMismatch, "group table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw Error(ErrorCode::NotASubgroup, "group table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a) throw Error(ErrorCode::NotASubgroup, "element 0 is not the identity");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0) inverse_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inverse_[a] < 0 || table_[inverse_[a]][a] != 0) throw Error(ErrorCode::NotASubgroup, "missing inverse");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw Error(ErrorCode::NotASubgroup, "group table is not associative");
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(std::vector<std::vector<int>>{{0}}); }

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(na * nb), std::vector<int>(static_cast<std::size_t>(na * nb)));
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return FiniteGroup(std::move(t));
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elements) const {
  if (elements.empty()) return false;
  const std::set<int> s(elements.begin(), elements.end());
  if (!s.count(0)) return false;
  for (int a : s) {
    if (a < 0 || a >= order()) return false;
    for (int b : s)
      if (!s.count(mul(a, b))) return false;
  }
  return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& elements) const {
  if (!is_subgroup(elements)) return false;
  const std::set<int> s(elements.begin(), elements.end());
  for (int g = 0; g < order(); ++g)
    for (int h : s)
      if (!s.count(mul(mul(g, h), inverse(g)))) return false;
  return true;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<int>& elements) const {
  if (!is_subgroup(elements)) throw Error(ErrorCode::NotASubgroup, "element set is not closed under the group law");
  std::vector<int> el(elements);
  std::sort(el.begin(), el.end());
  el.erase(std::unique(el.begin(), el.end()), el.end());
  std::vector<int> pos(static_cast<std::size_t>(order()), -1);
  for (std::size_t i = 0; i < el.size(); ++i) pos[el[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(el.size(), std::vector<int>(el.size()));
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) t[i][j] = pos[mul(el[i], el[j])];
  return FiniteGroup(std::move(t));
}

// ---------------------------------------------------------------- root finding

namespace {

struct FieldRing {
  using Element = FieldElement;
  const LocalField& L;
  Element zero() const { return L.zero(); }
  Element from_integer(long v) const { return L.from_integer(v); }
  Element add(const Element& a, const Element& b) const { return L.add(a, b); }
  Element sub(const Element& a, const Element& b) const { return L.sub(a, b); }
  Element mul(const Element& a, const Element& b) const { return L.mul(a, b); }
  Element divide(const Element& a, const Element& b) const { return L.divide(a, b); }
  int valuation(const Element& a) const { return L.raw_valuation(a); }
  int precision_cap() const { return L.absolute_precision(); }
};

// Q(y0 + pi z) as a polynomial in z.
Poly<FieldElement> taylor_shift(const LocalField& L, const Poly<FieldElement>& Q, const FieldElement& y0) {
  Poly<FieldElement> result = {L.zero()};
  for (auto it = Q.rbegin(); it != Q.rend(); ++it) {
    Poly<FieldElement> next(result.size() + 1, L.zero());
    for (std::size_t i = 0; i < result.size(); ++i) {
      next[i] = L.add(next[i], L.mul(y0, result[i]));
      next[i + 1] = L.add(next[i + 1], L.shift_up(result[i], 1));
    }
    next[0] = L.add(next[0], *it);
    result = std::move(next);
  }
  while (result.size() > 1 && result.back() == L.zero()) result.pop_back();
  return result;
}

ResidueElement residue_eval(const FiniteField& k, const std::vector<ResidueElement>& q, const ResidueElement& c) {
  ResidueElement acc = k.zero();
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = k.add(k.mul(acc, c), *it);
  return acc;
}

struct RootSearch {
  const LocalField& L;
  int required;
  std::vector<FieldElement> roots;

  // Roots r = base + pi^depth * y where Q(y) = 0; Q is known modulo pi^prec.
  void node(Poly<FieldElement> Q, const FieldElement& base, int depth, int prec) {
    int s = L.absolute_precision();
    for (const auto& c : Q) s = std::min(s, L.raw_valuation(c));
    if (s >= prec)
      throw Error(ErrorCode::PrecisionExhausted, "polynomial vanishes to working precision; roots not separated");
    if (s > 0) {
      for (auto& c : Q) c = L.shift_down(c, s);
      prec -= s;
    }
    const FiniteField& k = L.residue_field();
    std::vector<ResidueElement> qbar, dbar;
    for (const auto& c : Q) qbar.push_back(L.residue(c));
    for (std::size_t j = 1; j < qbar.size(); ++j) dbar.push_back(k.scale(qbar[j], static_cast<std::int64_t>(j)));
    const FieldRing ring{L};
    const auto dQ = poly_derivative(ring, Q);
    for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(k.order()); ++idx) {
      const ResidueElement c = k.element(idx);
      if (!k.is_zero(residue_eval(k, qbar, c))) continue;
      FieldElement y = L.lift(c);
      if (!k.is_zero(residue_eval(k, dbar, c))) {
        for (int it = 0; it < 64; ++it) {
          const FieldElement v = poly_eval(ring, Q, y);
          if (L.raw_valuation(v) >= prec) break;
          y = L.sub(y, L.mul(v, L.invert(poly_eval(ring, dQ, y))));
        }
        if (depth + prec < required)
          throw Error(ErrorCode::PrecisionExhausted, "root known to " + std::to_string(depth + prec) +
                                                         " digits, need " + std::to_string(required));
        roots.push_back(L.add(base, L.shift_up(y, depth)));
      } else {
        if (prec <= 1 || depth + 1 >= L.absolute_precision())
          throw Error(ErrorCode::PrecisionExhausted, "roots not separated at working precision");
        node(taylor_shift(L, Q, y), L.add(base, L.shift_up(y, depth)), depth + 1, prec);
      }
    }
  }
};

}  // namespace

std::vector<FieldElement> roots_in_field(const LocalField& L, const Poly<FieldElement>& f, int required) {
  RootSearch search{L, required, {}};
  search.node(f, L.zero(), 0, L.absolute_precision());
  return search.roots;
}

// ---------------------------------------------------------------- GaloisGroup

std::shared_ptr<const GaloisGroup> GaloisGroup::compute(std::shared_ptr<const LocalField> field) {
  const LocalField& L = *field;
  const int n = L.degree(), f = L.residue_degree(), e = L.ramification_index();
  const FiniteField& k = L.residue_field();
  const FieldRing ring{L};

  // Frobenius lifts theta_k: the root of g reducing to theta-bar^(p^k).
  std::vector<FieldElement> theta_k;
  for (int j = 0; j < f; ++j) {
    if (f == 1) {
      theta_k.push_back(L.unramified_generator());
      break;
    }
    const FieldElement r0 = L.lift(k.frobenius(k.generator(), j));
    theta_k.push_back(hensel_lift_root(ring, L.unramified_polynomial(), r0, L.absolute_precision()));
  }

  std::vector<Automorphism> autos;
  for (int j = 0; j < f; ++j) {
    std::vector<FieldElement> powers = {L.one()};
    for (int l = 1; l < f; ++l) powers.push_back(L.mul(powers.back(), theta_k[j]));
    Poly<FieldElement> P;
    for (const auto& c : L.uniformizer_polynomial()) {
      FieldElement img = L.zero();
      for (int l = 0; l < f; ++l) img = L.add(img, L.mul(L.from_coords({c.coords[l]}), powers[l]));
      P.push_back(img);
    }
    std::vector<FieldElement> roots;
    if (e == 1) {
      roots.push_back(L.uniformizer());
    } else {
      roots = roots_in_field(L, P, L.precision());
    }
    for (auto& r : roots) autos.push_back(Automorphism{theta_k[j], std::move(r), j});
  }
  if (static_cast<int>(autos.size()) != n)
    throw Error(ErrorCode::NotGalois, "found " + std::to_string(autos.size()) + " automorphisms, degree is " +
                                          std::to_string(n));

  const auto id_it = std::find_if(autos.begin(), autos.end(), [&](const Automorphism& a) {
    return a.frobenius_exponent == 0 && L.equal(a.pi_image, L.uniformizer());
  });
  if (id_it == autos.end()) throw Error(ErrorCode::PrecisionExhausted, "identity automorphism not recovered");
  std::rotate(autos.begin(), id_it, id_it + 1);

  // Temporary object used only for apply() while the table is built.
  GaloisGroup probe(field, autos, FiniteGroup::trivial());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const FieldElement th = probe.apply(a, autos[b].theta_image);
      const FieldElement pi = probe.apply(a, autos[b].pi_image);
      for (int c = 0; c < n; ++c) {
        if (L.equal(th, autos[c].theta_image) && L.equal(pi, autos[c].pi_image)) {
          if (table[a][b] != -1) throw Error(ErrorCode::PrecisionExhausted, "automorphisms not separated");
          table[a][b] = c;
        }
      }
      if (table[a][b] == -1) throw Error(ErrorCode::NotGalois, "composition of automorphisms not found");
    }
  }
  return std::shared_ptr<const GaloisGroup>(new GaloisGroup(field, std::move(autos), FiniteGroup(std::move(table))));
}

GaloisGroup::GaloisGroup(std::shared_ptr<const LocalField> field, std::vector<Automorphism> autos, FiniteGroup group)
    : field_(std::move(field)), autos_(std::move(autos)), group_(std::move(group)) {
  const LocalField& L = *field_;
  const int e = L.ramification_index(), f = L.residue_degree();
  for (const auto& a : autos_) {
    std::vector<FieldElement> th = {L.one()};
    for (int l = 1; l < f; ++l) th.push_back(L.mul(th.back(), a.theta_image));
    std::vector<FieldElement> imgs(static_cast<std::size_t>(e * f));
    FieldElement pj = L.one();
    for (int j = 0; j < e; ++j) {
      for (int l = 0; l < f; ++l) imgs[j * f + l] = L.mul(th[l], pj);
      pj = L.mul(pj, a.pi_image);
    }
    basis_images_.push_back(std::move(imgs));
  }
  if (group_.order() != static_cast<int>(autos_.size())) return;
  breaks_.assign(autos_.size(), std::nullopt);
  for (std::size_t s = 1; s < autos_.size(); ++s) {
    if (autos_[s].frobenius_exponent != 0) {
      breaks_[s] = -1;
      continue;
    }
    const auto v = L.valuation(L.sub(autos_[s].pi_image, L.uniformizer()));
    if (!v) throw Error(ErrorCode::PrecisionExhausted, "sigma(pi) - pi indistinguishable from zero");
    breaks_[s] = *v - 1;
  }
}

FieldElement GaloisGroup::apply(int s, const FieldElement& x) const {
  const auto& imgs = basis_images_[s];
  std::vector<Int> acc(x.coords.size(), Int(0));
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i] == 0) continue;
    for (std::size_t r = 0; r < acc.size(); ++r) acc[r] += x.coords[i] * imgs[i].coords[r];
  }
  return field_->from_coords(acc);
}

std::vector<int> GaloisGroup::breaks() const {
  std::set<int> b;
  for (std::size_t s = 1; s < breaks_.size(); ++s)
    if (breaks_[s] && *breaks_[s] >= 0) b.insert(*breaks_[s]);
  return {b.begin(), b.end()};
}

int GaloisGroup::max_break() const {
  const auto b = breaks();
  return b.empty() ? -1 : b.back();
}

std::vector<int> GaloisGroup::ramification_subgroup(int i) const {
  std::vector<int> out = {0};
  for (int s = 1; s < order(); ++s)
    if (i <= -1 || *breaks_[s] >= i) out.push_back(s);
  return out;
}

int GaloisGroup::tame_index() const {
  return static_cast<int>(ramification_subgroup(0).size() / ramification_subgroup(1).size());
}

int GaloisGroup::wild_index() const { return static_cast<int>(ramification_subgroup(1).size()); }

ResidueElement GaloisGroup::theta(int i, int s) const {
  if (i < 0) throw Error(ErrorCode::NotInLevel, "theta is defined for levels i >= 0");
  const auto level = ramification_subgroup(i);
  if (!std::binary_search(level.begin(), level.end(), s))
    throw Error(ErrorCode::NotInLevel, "element " + std::to_string(s) + " is not in G_" + std::to_string(i));
  const LocalField& L = *field_;
  const FieldElement u = L.div(autos_[s].pi_image, L.uniformizer());
  if (i == 0) return L.residue(u);
  return L.residue(L.shift_down(L.sub(u, L.one()), i));
}

}  // namespace ramcoh
