#include "ramcoh/residue_field.hpp"

#include <algorithm>
#include <numeric>

namespace ramcoh {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly poly_mod(FpPoly a, const FpPoly& b, std::int64_t p) {
  trim(a);
  const std::int64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::int64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
    trim(a);
  }
  return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const FpPoly& h_in, std::int64_t p) {
  FpPoly h;
  for (auto c : h_in) h.push_back(mod(c, p));
  trim(h);
  if (h.size() < 2) return false;
  const std::size_t d = h.size() - 1;
  if (d == 1) return true;
  // Ben-Or: gcd(h, x^{p^i} - x) = 1 for i <= d/2.
  FpPoly xp = {0, 1};
  for (std::size_t i = 1; i <= d / 2; ++i) {
    FpPoly acc = {1};
    FpPoly base = xp;
    std::int64_t e = p;
    while (e > 0) {
      if (e & 1) acc = poly_mulmod(acc, base, h, p);
      base = poly_mulmod(base, base, h, p);
      e >>= 1;
    }
    xp = acc;
    FpPoly diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = mod(diff[1] - 1, p);
    if (poly_gcd(h, diff, p).size() > 1) return false;
  }
  return true;
}

FiniteField::FiniteField(std::int64_t p, FpPoly modulus) : p_(p) {
  if (!is_prime(Int(static_cast<long>(p)))) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  for (auto& c : modulus) c = mod(c, p);
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1)
    throw Error(ErrorCode::NotIrreducibleResiduePoly, "residue polynomial must be monic of degree >= 1");
  if (!is_irreducible_mod_p(modulus, p))
    throw Error(ErrorCode::NotIrreducibleResiduePoly, "residue polynomial is reducible modulo " + std::to_string(p));
  modulus_ = std::move(modulus);
  degree_ = static_cast<int>(modulus_.size()) - 1;
  q_ = 1;
  for (int i = 0; i < degree_; ++i) {
    q_ *= p_;
    if (q_ > (1 << 20)) throw Error(ErrorCode::DegenerateTower, "residue field larger than 2^20 elements");
  }

  // Discrete-log table for the smallest primitive element.
  log_table_.assign(static_cast<std::size_t>(q_), -1);
  for (std::uint64_t idx = 1; idx < static_cast<std::uint64_t>(q_); ++idx) {
    const Element g = element(idx);
    std::vector<std::int64_t> table(static_cast<std::size_t>(q_), -1);
    Element x = one();
    std::int64_t k = 0;
    for (; k < q_ - 1; ++k) {
      const auto xi = index(x);
      if (table[xi] != -1) break;
      table[xi] = k;
      x = mul(x, g);
    }
    if (k == q_ - 1) {
      primitive_ = g;
      log_table_ = std::move(table);
      break;
    }
  }
}

FiniteField::Element FiniteField::one() const {
  Element e = zero();
  e[0] = 1 % p_;
  return e;
}

FiniteField::Element FiniteField::generator() const {
  if (degree_ == 1) return from_integer(-modulus_[0]);
  Element e = zero();
  e[1] = 1;
  return e;
}

FiniteField::Element FiniteField::from_integer(std::int64_t v) const {
  Element e = zero();
  e[0] = mod(v, p_);
  return e;
}

FiniteField::Element FiniteField::add(const Element& a, const Element& b) const {
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

FiniteField::Element FiniteField::sub(const Element& a, const Element& b) const {
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] - b[i], p_);
  return r;
}

FiniteField::Element FiniteField::neg(const Element& a) const { return sub(zero(), a); }

FiniteField::Element FiniteField::scale(const Element& a, std::int64_t c) const {
  Element r(a.size());
  const std::int64_t cm = mod(c, p_);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * cm % p_;
  return r;
}

FiniteField::Element FiniteField::mul(const Element& a, const Element& b) const {
  FpPoly r(static_cast<std::size_t>(2 * degree_ - 1), 0);
  for (int i = 0; i < degree_; ++i)
    for (int j = 0; j < degree_; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
  r = poly_mod(std::move(r), modulus_, p_);
  r.resize(static_cast<std::size_t>(degree_), 0);
  return r;
}

FiniteField::Element FiniteField::pow(const Element& a, std::uint64_t k) const {
  Element result = one(), base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FiniteField::Element FiniteField::inv(const Element& a) const {
  if (is_zero(a)) throw Error(ErrorCode::NonUnit, "zero has no inverse in the residue field");
  return pow(a, static_cast<std::uint64_t>(q_ - 2));
}

FiniteField::Element FiniteField::frobenius(const Element& a, int k) const {
  Element r = a;
  for (int i = 0; i < k; ++i) r = pow(r, static_cast<std::uint64_t>(p_));
  return r;
}

bool FiniteField::is_zero(const Element& a) const {
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

std::uint64_t FiniteField::index(const Element& a) const {
  std::uint64_t idx = 0;
  for (int i = degree_ - 1; i >= 0; --i) idx = idx * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(a[i]);
  return idx;
}

FiniteField::Element FiniteField::element(std::uint64_t idx) const {
  Element e = zero();
  for (int i = 0; i < degree_; ++i) {
    e[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(p_));
    idx /= static_cast<std::uint64_t>(p_);
  }
  return e;
}

std::int64_t FiniteField::discrete_log(const Element& a) const {
  if (is_zero(a)) throw Error(ErrorCode::NonUnit, "discrete log of zero");
  return log_table_[index(a)];
}

std::int64_t FiniteField::multiplicative_order(const Element& a) const {
  const std::int64_t k = discrete_log(a);
  return (q_ - 1) / std::gcd(k, q_ - 1);
}

std::vector<std::vector<std::int64_t>> FiniteField::linear_map_matrix(const Element& c, int k) const {
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(degree_),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(degree_), 0));
  for (int col = 0; col < degree_; ++col) {
    Element basis = zero();
    basis[col] = 1;
    const Element image = mul(c, frobenius(basis, k));
    for (int row = 0; row < degree_; ++row) m[row][col] = image[row];
  }
  return m;
}

}  // namespace ramcoh
