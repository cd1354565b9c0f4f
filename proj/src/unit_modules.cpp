#include "ramcoh/unit_modules.hpp"

#include <algorithm>

namespace ramcoh {

std::shared_ptr<const UnitQuotientModule> UnitQuotientModule::build(std::shared_ptr<const GaloisGroup> galois,
                                                                    int level, int precision) {
  if (level < 0 || level >= precision)
    throw Error(ErrorCode::LevelMismatch, "need 0 <= level < precision, got level " + std::to_string(level) +
                                              " and precision " + std::to_string(precision));
  if (precision > galois->field().precision())
    throw Error(ErrorCode::PrecisionTooSmall, "module precision " + std::to_string(precision) +
                                                  " exceeds field precision " +
                                                  std::to_string(galois->field().precision()));
  return std::shared_ptr<const UnitQuotientModule>(new UnitQuotientModule(std::move(galois), level, precision));
}

UnitQuotientModule::UnitQuotientModule(std::shared_ptr<const GaloisGroup> galois, int level, int precision)
    : galois_(std::move(galois)), level_(level), precision_(precision), first_layer_(std::max(level, 1)) {
  const LocalField& L = galois_->field();
  const FiniteField& k = L.residue_field();
  const int f = L.residue_degree();
  const Int q(static_cast<long>(L.residue_order()));
  const Int p = L.prime();

  if (level_ == 0) {
    const FieldElement omega = L.teichmuller(k.primitive_element());
    generators_.push_back(omega);
    inverses_.push_back(L.pow(omega, q - 2));
  }
  for (int j = first_layer_; j < precision_; ++j) {
    for (int l = 0; l < f; ++l) {
      FieldElement theta_l = L.zero();
      theta_l.coords[l] = 1;
      const FieldElement u = L.add(L.one(), L.shift_up(theta_l, j));
      generators_.push_back(u);
      inverses_.push_back(L.invert(u));
    }
  }

  const std::size_t m = generators_.size();
  IntMatrix rel(m, m);
  for (std::size_t c = 0; c < m; ++c) {
    const bool is_omega = level_ == 0 && c == 0;
    const Int e = is_omega ? Int(q - 1) : p;
    const IntVector image = dlog(L.pow(generators_[c], e));
    for (std::size_t r = 0; r < m; ++r) rel(r, c) = -image[r];
    rel(c, c) += e;
  }
  FgAbelianPresentation pres(m, std::move(rel));

  Int expected = level_ == 0 ? Int(q - 1) : Int(1);
  for (int j = first_layer_; j < precision_; ++j) expected *= q;
  if (pres.order() != expected)
    throw Error(ErrorCode::PrecisionExhausted, "unit quotient has order " + pres.order().get_str() + ", expected " +
                                                   expected.get_str());

  std::vector<IntMatrix> actions;
  for (int s = 0; s < galois_->order(); ++s) {
    std::vector<IntVector> cols;
    for (const auto& g : generators_) cols.push_back(dlog(galois_->apply(s, g)));
    actions.push_back(IntMatrix::from_columns(m, cols));
  }
  module_.emplace(galois_->group(), std::move(pres), std::move(actions));
}

std::size_t UnitQuotientModule::generator_index(int j, int k) const {
  const int f = field().residue_degree();
  if (j < first_layer_ || j >= precision_ || k < 0 || k >= f)
    throw Error(ErrorCode::LevelMismatch, "no generator u_{" + std::to_string(j) + "," + std::to_string(k) + "}");
  return static_cast<std::size_t>((level_ == 0 ? 1 : 0) + (j - first_layer_) * f + k);
}

IntVector UnitQuotientModule::dlog(const FieldElement& u) const {
  const LocalField& L = field();
  const FiniteField& k = L.residue_field();
  if (!L.is_unit(u)) throw Error(ErrorCode::WrongLevel, "dlog of a non-unit");
  IntVector coords(generators_.size(), Int(0));
  FieldElement x = u;
  if (level_ == 0) {
    const std::int64_t a = k.discrete_log(L.residue(x));
    coords[0] = a;
    x = L.mul(x, L.pow(inverses_[0], Int(static_cast<long>(a))));
  } else if (L.raw_valuation(L.sub(x, L.one())) < level_) {
    throw Error(ErrorCode::WrongLevel, "unit is not congruent to 1 modulo pi^" + std::to_string(level_));
  }
  const int f = L.residue_degree();
  for (int j = first_layer_; j < precision_; ++j) {
    const FieldElement y = L.sub(x, L.one());
    if (L.raw_valuation(y) >= precision_) break;
    const ResidueElement digit = L.residue(L.shift_down(y, j));
    for (int l = 0; l < f; ++l) {
      if (digit[l] == 0) continue;
      const std::size_t idx = generator_index(j, l);
      coords[idx] = digit[l];
      x = L.mul(x, L.pow(inverses_[idx], Int(static_cast<long>(digit[l]))));
    }
  }
  return coords;
}

FieldElement UnitQuotientModule::exp(const IntVector& x) const {
  if (x.size() != generators_.size()) throw Error(ErrorCode::DimensionMismatch, "exponent vector has wrong length");
  const LocalField& L = field();
  FieldElement r = L.one();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) r = L.mul(r, L.pow(generators_[i], x[i]));
  return r;
}

bool UnitQuotientModule::same_class(const FieldElement& u, const FieldElement& v) const {
  return field().raw_valuation(field().sub(u, v)) >= precision_;
}

IntMatrix natural_map(const UnitQuotientModule& from, const UnitQuotientModule& to) {
  if (from.level() < to.level() || from.precision() < to.precision())
    throw Error(ErrorCode::LevelMismatch, "no natural map from U^" + std::to_string(from.level()) + "/U^" +
                                              std::to_string(from.precision()) + " to U^" +
                                              std::to_string(to.level()) + "/U^" + std::to_string(to.precision()));
  IntMatrix m(to.num_generators(), from.num_generators());
  if (from.level() == 0) m(0, 0) = 1;
  const int f = from.field().residue_degree();
  for (int j = std::max(from.level(), 1); j < to.precision(); ++j)
    for (int l = 0; l < f; ++l) m(to.generator_index(j, l), from.generator_index(j, l)) = 1;
  return m;
}

Cocycle unit_cocycle(const UnitQuotientModule& m, const std::vector<FieldElement>& values) {
  Cocycle c;
  for (const auto& v : values) c.values.push_back(m.dlog(v));
  return c;
}

Cocycle fundamental_cocycle(const UnitQuotientModule& m) { return fundamental_cocycle(m, m.field().one()); }

Cocycle fundamental_cocycle(const UnitQuotientModule& m, const FieldElement& unit) {
  if (m.level() != 0) throw Error(ErrorCode::LevelMismatch, "the fundamental cocycle lives on U^0/U^N");
  const LocalField& L = m.field();
  const GaloisGroup& g = m.galois();
  const FieldElement pi = L.mul(unit, L.uniformizer());
  std::vector<FieldElement> values;
  for (int s = 0; s < g.order(); ++s) values.push_back(L.div(g.apply(s, pi), pi));
  return unit_cocycle(m, values);
}

namespace {

Int power_mod(const Int& base, int e, const Int& mod) {
  Int r;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e), mod.get_mpz_t());
  return r;
}

IntMatrix to_int_matrix(const std::vector<std::vector<std::int64_t>>& m) {
  IntMatrix r(m.size(), m.empty() ? 0 : m.front().size());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = static_cast<long>(m[i][j]);
  return r;
}

}  // namespace

GModule residue_multiplicative_module(const GaloisGroup& g) {
  const LocalField& L = g.field();
  const Int q1(static_cast<long>(L.residue_order() - 1));
  std::vector<IntMatrix> act;
  for (int s = 0; s < g.order(); ++s) {
    IntMatrix a(1, 1);
    a(0, 0) = power_mod(L.prime(), g.frobenius_exponent(s), q1);
    act.push_back(std::move(a));
  }
  return GModule(g.group(), FgAbelianPresentation::diagonal({q1}), std::move(act));
}

GModule residue_additive_module(const GaloisGroup& g, int twist) {
  const LocalField& L = g.field();
  const FiniteField& k = L.residue_field();
  std::vector<IntMatrix> act;
  for (int s = 0; s < g.order(); ++s) {
    const ResidueElement chi = L.residue(L.div(g.automorphism(s).pi_image, L.uniformizer()));
    const ResidueElement c = k.pow(chi, static_cast<std::uint64_t>(twist));
    act.push_back(to_int_matrix(k.linear_map_matrix(c, g.frobenius_exponent(s))));
  }
  return GModule(g.group(), FgAbelianPresentation::diagonal(IntVector(static_cast<std::size_t>(k.degree()), L.prime())),
                 std::move(act));
}

GModule residue_galois_multiplicative_module(const FiniteField& k) {
  const Int q1(static_cast<long>(k.order() - 1));
  std::vector<IntMatrix> act;
  for (int s = 0; s < k.degree(); ++s) {
    IntMatrix a(1, 1);
    a(0, 0) = power_mod(Int(static_cast<long>(k.characteristic())), s, q1);
    act.push_back(std::move(a));
  }
  return GModule(FiniteGroup::cyclic(k.degree()), FgAbelianPresentation::diagonal({q1}), std::move(act));
}

GModule residue_galois_additive_module(const FiniteField& k) {
  std::vector<IntMatrix> act;
  for (int s = 0; s < k.degree(); ++s) act.push_back(to_int_matrix(k.linear_map_matrix(k.one(), s)));
  return GModule(FiniteGroup::cyclic(k.degree()),
                 FgAbelianPresentation::diagonal(
                     IntVector(static_cast<std::size_t>(k.degree()), Int(static_cast<long>(k.characteristic())))),
                 std::move(act));
}

LayerProjection projection_to_layer(const UnitQuotientModule& m, int layer) {
  if (layer != m.level() || layer >= m.precision())
    throw Error(ErrorCode::LayerMismatch, "layer " + std::to_string(layer) + " is not the bottom layer of U^" +
                                              std::to_string(m.level()) + "/U^" + std::to_string(m.precision()));
  const LocalField& L = m.field();
  const FiniteField& k = L.residue_field();
  if (layer == 0) {
    GModule target = residue_multiplicative_module(m.galois());
    IntMatrix phi(1, m.num_generators());
    for (std::size_t c = 0; c < m.num_generators(); ++c)
      phi(0, c) = static_cast<long>(k.discrete_log(L.residue(m.generators()[c])));
    check_equivariant(m.module(), target, phi);
    return {std::move(target), std::move(phi)};
  }
  GModule target = residue_additive_module(m.galois(), layer);
  IntMatrix phi(static_cast<std::size_t>(k.degree()), m.num_generators());
  for (int l = 0; l < k.degree(); ++l) phi(static_cast<std::size_t>(l), m.generator_index(layer, l)) = 1;
  check_equivariant(m.module(), target, phi);
  return {std::move(target), std::move(phi)};
}

}  // namespace ramcoh
