#include "ramcoh/local_field.hpp"

#include <algorithm>

namespace ramcoh {

namespace {

using WElem = std::vector<Int>;

// The unramified ring W = (Z/p^M)[theta]/(g) used while the tower is flattened.
struct WRing {
  const CoeffRing& coeff;
  std::vector<Int> g;  // monic, degree f
  int f;

  WElem zero() const { return WElem(static_cast<std::size_t>(f), Int(0)); }
  WElem from_int(long v) const {
    WElem r = zero();
    r[0] = coeff.reduce(Int(v));
    return r;
  }
  WElem add(const WElem& a, const WElem& b) const {
    WElem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = coeff.reduce(a[i] + b[i]);
    return r;
  }
  WElem sub(const WElem& a, const WElem& b) const {
    WElem r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = coeff.reduce(a[i] - b[i]);
    return r;
  }
  WElem neg(const WElem& a) const { return sub(zero(), a); }
  WElem mul(const WElem& a, const WElem& b) const {
    if (f == 1) return {coeff.reduce(a[0] * b[0])};
    std::vector<Int> r(static_cast<std::size_t>(2 * f - 1), Int(0));
    for (int i = 0; i < f; ++i)
      for (int j = 0; j < f; ++j) r[i + j] += a[i] * b[j];
    for (int k = 2 * f - 2; k >= f; --k) {
      const Int c = r[k];
      if (c == 0) continue;
      for (int j = 0; j < f; ++j) r[k - f + j] -= c * g[j];
    }
    WElem out(static_cast<std::size_t>(f));
    for (int i = 0; i < f; ++i) out[i] = coeff.reduce(r[i]);
    return out;
  }
  int valuation(const WElem& a) const {
    int v = coeff.precision();
    for (const auto& c : a) v = std::min(v, coeff.valuation(c));
    return v;
  }
  bool is_one(const WElem& a) const { return a == from_int(1); }
  WElem inverse(const WElem& a, const FiniteField& residue) const {
    FiniteField::Element r(static_cast<std::size_t>(f));
    for (int i = 0; i < f; ++i) r[i] = mpz_class(a[i] % coeff.prime()).get_si();
    if (residue.is_zero(r)) throw Error(ErrorCode::NonUnit, "W element is not a unit");
    const auto ri = residue.inv(r);
    WElem y = zero();
    for (int i = 0; i < f; ++i) y[i] = ri[i];
    const WElem two = from_int(2);
    for (int it = 0; it < 64; ++it) {
      const WElem ay = mul(a, y);
      if (is_one(ay)) return y;
      y = mul(y, sub(two, ay));
    }
    throw Error(ErrorCode::PrecisionExhausted, "W inverse did not converge");
  }
};

// A flattened floor W[pi_B]/(F_B); elements are e_B blocks of W coefficients.
struct Floor {
  int e;
  std::vector<WElem> F;  // monic, degree e

  std::vector<WElem> mul(const WRing& W, const std::vector<WElem>& x, const std::vector<WElem>& y) const {
    std::vector<WElem> prod(static_cast<std::size_t>(2 * e - 1), W.zero());
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j) prod[i + j] = W.add(prod[i + j], W.mul(x[i], y[j]));
    for (int k = 2 * e - 2; k >= e; --k)
      for (int j = 0; j < e; ++j) prod[k - e + j] = W.sub(prod[k - e + j], W.mul(prod[k], F[j]));
    prod.resize(static_cast<std::size_t>(e));
    return prod;
  }
  int valuation(const WRing& W, const std::vector<WElem>& x) const {
    const int cap = e * W.coeff.precision();
    int v = cap;
    for (int j = 0; j < e; ++j) {
      const int vw = W.valuation(x[j]);
      if (vw < W.coeff.precision()) v = std::min(v, e * vw + j);
    }
    return v;
  }
};

// Division-free characteristic polynomial det(xI - T), lowest degree first.
std::vector<WElem> berkowitz_charpoly(const WRing& W, const std::vector<std::vector<WElem>>& T) {
  const std::size_t n = T.size();
  std::vector<WElem> c = {W.from_int(1), W.neg(T[0][0])};  // highest degree first
  for (std::size_t r = 1; r < n; ++r) {
    // Q = [1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S]
    std::vector<WElem> q;
    q.push_back(W.from_int(1));
    q.push_back(W.neg(T[r][r]));
    std::vector<WElem> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = T[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      WElem dot = W.zero();
      for (std::size_t i = 0; i < r; ++i) dot = W.add(dot, W.mul(T[r][i], v[i]));
      q.push_back(W.neg(dot));
      std::vector<WElem> next(r, W.zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] = W.add(next[i], W.mul(T[i][j], v[j]));
      v = std::move(next);
    }
    std::vector<WElem> nc(r + 2, W.zero());
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) nc[i] = W.add(nc[i], W.mul(q[i - j], c[j]));
    c = std::move(nc);
  }
  std::reverse(c.begin(), c.end());
  return c;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

std::shared_ptr<const LocalField> LocalField::build(const TowerSpec& spec, int precision, int guard_digits) {
  if (precision < 4) throw Error(ErrorCode::PrecisionTooSmall, "precision must be at least 4");
  const Int p(static_cast<long>(spec.p));
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, p.get_str() + " is not prime");
  const FpPoly h = spec.unramified_poly.empty() ? FpPoly{0, 1} : FpPoly(spec.unramified_poly);
  FiniteField residue(spec.p, h);
  const int f = residue.degree();

  int e = 1;
  for (const auto& poly : spec.eisenstein_polys) {
    if (poly.size() < 2) throw Error(ErrorCode::NotEisenstein, "Eisenstein polynomial of degree 0");
    e *= static_cast<int>(poly.size()) - 1;
  }
  if (e * f == 1) throw Error(ErrorCode::DegenerateTower, "tower has degree 1 over Q_p");

  // Guard digits absorb the precision lost dividing by f'(pi), whose
  // valuation is at most e - 1 + e v_p(e).
  const int max_different = e - 1 + e * p_valuation(Int(e), p, 64);
  const int M = ceil_div(precision, e) + guard_digits + ceil_div(2 * max_different, e);
  CoeffRing coeff(p, M);

  std::vector<Int> g;
  for (auto c : residue.modulus()) g.push_back(coeff.reduce(Int(static_cast<long>(c))));
  const WRing W{coeff, g, f};

  Floor floor{1, {W.from_int(-spec.p), W.from_int(1)}};
  for (std::size_t step = 0; step < spec.eisenstein_polys.size(); ++step) {
    const auto& poly = spec.eisenstein_polys[step];
    const int m = static_cast<int>(poly.size()) - 1;
    const std::string where = "Eisenstein polynomial #" + std::to_string(step + 1);
    std::vector<std::vector<WElem>> c;
    for (const auto& coef : poly) {
      std::vector<WElem> b(static_cast<std::size_t>(floor.e), W.zero());
      if (coef.size() == 1) {
        b[0] = W.from_int(coef[0]);
      } else if (coef.size() == static_cast<std::size_t>(floor.e * f)) {
        for (int j = 0; j < floor.e; ++j)
          for (int l = 0; l < f; ++l) b[j][l] = coeff.reduce(Int(coef[static_cast<std::size_t>(j * f + l)]));
      } else {
        throw Error(ErrorCode::NotEisenstein, where + ": coefficient has " + std::to_string(coef.size()) +
                                                  " coordinates, expected 1 or " + std::to_string(floor.e * f));
      }
      c.push_back(std::move(b));
    }
    std::vector<WElem> one_b(static_cast<std::size_t>(floor.e), W.zero());
    one_b[0] = W.from_int(1);
    if (c.back() != one_b) throw Error(ErrorCode::NotEisenstein, where + " is not monic");
    for (int j = 0; j < m; ++j)
      if (floor.valuation(W, c[j]) < 1)
        throw Error(ErrorCode::NotEisenstein, where + ": coefficient of x^" + std::to_string(j) + " is a unit");
    if (floor.valuation(W, c[0]) != 1)
      throw Error(ErrorCode::NotEisenstein, where + ": constant term does not have valuation one");

    std::vector<WElem> F;
    if (floor.e == 1) {
      for (const auto& b : c) F.push_back(b[0]);
    } else {
      // Matrix of multiplication by the new root X on the basis pi_B^a X^b
      // (index b*e_B + a), then its characteristic polynomial over W.
      const int D = floor.e * m;
      std::vector<std::vector<WElem>> T(static_cast<std::size_t>(D),
                                        std::vector<WElem>(static_cast<std::size_t>(D), W.zero()));
      for (int b = 0; b < m; ++b) {
        for (int a = 0; a < floor.e; ++a) {
          const int col = b * floor.e + a;
          if (b + 1 < m) {
            T[(b + 1) * floor.e + a][col] = W.from_int(1);
            continue;
          }
          std::vector<WElem> pa(static_cast<std::size_t>(floor.e), W.zero());
          pa[a] = W.from_int(1);
          for (int j = 0; j < m; ++j) {
            const auto t = floor.mul(W, c[j], pa);
            for (int a2 = 0; a2 < floor.e; ++a2) T[j * floor.e + a2][col] = W.neg(t[a2]);
          }
        }
      }
      F = berkowitz_charpoly(W, T);
    }
    for (std::size_t j = 0; j + 1 < F.size(); ++j)
      if (W.valuation(F[j]) < 1) throw Error(ErrorCode::NotEisenstein, where + ": composite is not Eisenstein");
    if (W.valuation(F[0]) != 1) throw Error(ErrorCode::NotEisenstein, where + ": composite is not Eisenstein");
    floor = Floor{static_cast<int>(F.size()) - 1, std::move(F)};
  }

  return std::shared_ptr<const LocalField>(
      new LocalField(spec, precision, coeff, std::move(residue), floor.e, {g}, std::move(floor.F)));
}

LocalField::LocalField(TowerSpec spec, int precision, CoeffRing coeff, FiniteField residue, int e,
                       std::vector<std::vector<Int>> unram_poly, std::vector<std::vector<Int>> eisenstein_w)
    : spec_(std::move(spec)),
      precision_(precision),
      coeff_(std::move(coeff)),
      residue_(std::move(residue)),
      e_(e),
      f_(residue_.degree()),
      g_(std::move(unram_poly.front())),
      eisenstein_w_(std::move(eisenstein_w)) {
  const WRing W{coeff_, g_, f_};
  WElem eps(static_cast<std::size_t>(f_));
  for (int l = 0; l < f_; ++l) eps[l] = eisenstein_w_[0][l] / coeff_.prime();
  eps_inv_ = W.inverse(eps, residue_);

  for (const auto& w : eisenstein_w_) {
    FieldElement c = zero();
    for (int l = 0; l < f_; ++l) c.coords[l] = w[l];
    eisenstein_.push_back(std::move(c));
  }
  for (const auto& gc : g_) unramified_.push_back(from_coords({gc}));
}

LocalField::WElem LocalField::w_mul(const WElem& a, const WElem& b) const {
  return WRing{coeff_, g_, f_}.mul(a, b);
}

LocalField::WElem LocalField::w_block(const FieldElement& x, int j) const {
  return WElem(x.coords.begin() + j * f_, x.coords.begin() + (j + 1) * f_);
}

FieldElement LocalField::zero() const {
  return FieldElement{std::vector<Int>(static_cast<std::size_t>(e_ * f_), Int(0))};
}

FieldElement LocalField::from_integer(long v) const {
  FieldElement x = zero();
  x.coords[0] = coeff_.reduce(Int(v));
  return x;
}

FieldElement LocalField::from_coords(const std::vector<Int>& coords) const {
  if (coords.size() > static_cast<std::size_t>(e_ * f_))
    throw Error(ErrorCode::DimensionMismatch, "too many coordinates for a field element");
  FieldElement x = zero();
  for (std::size_t i = 0; i < coords.size(); ++i) x.coords[i] = coeff_.reduce(coords[i]);
  return x;
}

FieldElement LocalField::uniformizer() const {
  if (e_ == 1) return from_coords({coeff_.prime()});
  FieldElement x = zero();
  x.coords[static_cast<std::size_t>(f_)] = 1;
  return x;
}

FieldElement LocalField::unramified_generator() const {
  FieldElement x = zero();
  if (f_ == 1) {
    x.coords[0] = coeff_.reduce(-g_[0]);
  } else {
    x.coords[1] = 1;
  }
  return x;
}

FieldElement LocalField::w_coefficient(const FieldElement& x, int j) const {
  FieldElement c = zero();
  for (int l = 0; l < f_; ++l) c.coords[l] = x.coords[j * f_ + l];
  return c;
}

FieldElement LocalField::add(const FieldElement& x, const FieldElement& y) const {
  FieldElement r = zero();
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = coeff_.reduce(x.coords[i] + y.coords[i]);
  return r;
}

FieldElement LocalField::sub(const FieldElement& x, const FieldElement& y) const {
  FieldElement r = zero();
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = coeff_.reduce(x.coords[i] - y.coords[i]);
  return r;
}

FieldElement LocalField::neg(const FieldElement& x) const { return sub(zero(), x); }

FieldElement LocalField::mul(const FieldElement& x, const FieldElement& y) const {
  if (e_ == 1 && f_ == 1) return from_coords({x.coords[0] * y.coords[0]});
  const WRing W{coeff_, g_, f_};
  std::vector<WElem> prod(static_cast<std::size_t>(2 * e_ - 1), W.zero());
  for (int i = 0; i < e_; ++i) {
    const WElem xi = w_block(x, i);
    if (W.valuation(xi) >= coeff_.precision()) continue;
    for (int j = 0; j < e_; ++j) prod[i + j] = W.add(prod[i + j], W.mul(xi, w_block(y, j)));
  }
  for (int k = 2 * e_ - 2; k >= e_; --k)
    for (int j = 0; j < e_; ++j) prod[k - e_ + j] = W.sub(prod[k - e_ + j], W.mul(prod[k], eisenstein_w_[j]));
  FieldElement r = zero();
  for (int j = 0; j < e_; ++j)
    for (int l = 0; l < f_; ++l) r.coords[j * f_ + l] = prod[j][l];
  return r;
}

FieldElement LocalField::pow(const FieldElement& x, const Int& k) const {
  if (k < 0) return pow(invert(x), -k);
  FieldElement result = one(), base = x;
  Int e = k;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

FieldElement LocalField::invert(const FieldElement& x) const {
  if (!is_unit(x)) throw Error(ErrorCode::NonUnit, "element is not a unit of O_L");
  FieldElement y = lift(residue_.inv(residue(x)));
  const FieldElement two = from_integer(2);
  const FieldElement unit = one();
  for (int it = 0; it < 80; ++it) {
    const FieldElement xy = mul(x, y);
    if (xy == unit) return y;
    y = mul(y, sub(two, xy));
  }
  throw Error(ErrorCode::PrecisionExhausted, "unit inverse did not converge");
}

FieldElement LocalField::shift_down(const FieldElement& x, int k) const {
  if (raw_valuation(x) < k) throw Error(ErrorCode::NegativeValuation, "division by pi^k leaves O_L");
  const WRing W{coeff_, g_, f_};
  FieldElement cur = x;
  for (int step = 0; step < k; ++step) {
    WElem a0 = w_block(cur, 0);
    for (auto& c : a0) c /= coeff_.prime();
    const WElem t = W.mul(a0, eps_inv_);
    FieldElement r = zero();
    for (int j = 0; j + 1 < e_; ++j)
      for (int l = 0; l < f_; ++l) r.coords[j * f_ + l] = cur.coords[(j + 1) * f_ + l];
    for (int j = 0; j < e_; ++j) {
      const WElem tf = W.mul(t, eisenstein_w_[j + 1]);
      for (int l = 0; l < f_; ++l) r.coords[j * f_ + l] = coeff_.reduce(r.coords[j * f_ + l] - tf[l]);
    }
    cur = std::move(r);
  }
  return cur;
}

FieldElement LocalField::shift_up(const FieldElement& x, int k) const {
  const WRing W{coeff_, g_, f_};
  FieldElement cur = x;
  for (int step = 0; step < k; ++step) {
    const WElem top = w_block(cur, e_ - 1);
    FieldElement r = zero();
    for (int j = 1; j < e_; ++j)
      for (int l = 0; l < f_; ++l) r.coords[j * f_ + l] = cur.coords[(j - 1) * f_ + l];
    for (int j = 0; j < e_; ++j) {
      const WElem tf = W.mul(top, eisenstein_w_[j]);
      for (int l = 0; l < f_; ++l) r.coords[j * f_ + l] = coeff_.reduce(r.coords[j * f_ + l] - tf[l]);
    }
    cur = std::move(r);
  }
  return cur;
}

int LocalField::raw_valuation(const FieldElement& x) const {
  const int M = coeff_.precision();
  int v = e_ * M;
  for (int j = 0; j < e_; ++j) {
    int vw = M;
    for (int l = 0; l < f_; ++l) vw = std::min(vw, coeff_.valuation(x.coords[j * f_ + l]));
    if (vw < M) v = std::min(v, e_ * vw + j);
  }
  return v;
}

std::optional<int> LocalField::valuation(const FieldElement& x) const {
  const int v = raw_valuation(x);
  if (v >= precision_) return std::nullopt;
  return v;
}

bool LocalField::equal(const FieldElement& x, const FieldElement& y) const {
  return !valuation(sub(x, y)).has_value();
}

FieldElement LocalField::div(const FieldElement& x, const FieldElement& y) const {
  const int vy = raw_valuation(y);
  if (vy >= precision_)
    throw Error(ErrorCode::DivisionByIndistinguishableZero, "divisor has valuation >= " + std::to_string(precision_));
  return divide(x, y);
}

FieldElement LocalField::divide(const FieldElement& x, const FieldElement& y) const {
  const int vy = raw_valuation(y);
  if (vy >= absolute_precision()) throw Error(ErrorCode::DivisionByIndistinguishableZero, "divisor is zero");
  if (raw_valuation(x) < vy) throw Error(ErrorCode::NegativeValuation, "quotient is not integral");
  return mul(shift_down(x, vy), invert(shift_down(y, vy)));
}

ResidueElement LocalField::residue(const FieldElement& x) const {
  ResidueElement r(static_cast<std::size_t>(f_));
  for (int l = 0; l < f_; ++l) r[l] = mpz_class(x.coords[l] % coeff_.prime()).get_si();
  return r;
}

FieldElement LocalField::lift(const ResidueElement& c) const {
  FieldElement x = zero();
  for (int l = 0; l < f_; ++l) x.coords[l] = Int(static_cast<long>(c[l]));
  return x;
}

FieldElement LocalField::teichmuller(const ResidueElement& c) const {
  if (residue_.is_zero(c)) throw Error(ErrorCode::NonUnit, "Teichmuller lift of zero");
  const Int q(static_cast<long>(residue_.order()));
  FieldElement x = lift(c);
  for (int it = 0; it <= absolute_precision() + 2; ++it) {
    FieldElement y = pow(x, q);
    if (y == x) return x;
    x = std::move(y);
  }
  throw Error(ErrorCode::PrecisionExhausted, "Teichmuller iteration did not reach a fixed point");
}

FieldElement LocalField::random_integral(std::mt19937_64& rng) const {
  FieldElement x = zero();
  for (auto& c : x.coords) {
    Int r = 0;
    const std::size_t chunks = 1 + mpz_sizeinbase(coeff_.modulus().get_mpz_t(), 2) / 64;
    for (std::size_t chunk = 0; chunk < chunks; ++chunk) {
      r <<= 64;
      r += Int(static_cast<unsigned long>(rng()));
    }
    c = coeff_.reduce(r);
  }
  return x;
}

FieldElement LocalField::random_unit(std::mt19937_64& rng) const {
  for (;;) {
    FieldElement x = random_integral(rng);
    if (is_unit(x)) return x;
  }
}

}  // namespace ramcoh
