#include "ramcoh/brute_force.hpp"

#include <algorithm>
#include <map>

namespace ramcoh {

namespace {

bool is_positive_diagonal(const IntMatrix& r) {
  if (r.rows() != r.cols()) return false;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if ((i == j && r(i, j) <= 0) || (i != j && r(i, j) != 0)) return false;
  return true;
}

Int mod_nonneg(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

BruteForceH1::BruteForceH1(const GModule& m, std::uint64_t budget)
    : module_(m), diagonal_(is_positive_diagonal(m.presentation().relations())) {
  std::vector<IntMatrix> actions;
  if (diagonal_) {
    for (std::size_t i = 0; i < m.rank(); ++i) d_.push_back(m.presentation().relations()(i, i));
    to_ = from_ = IntMatrix::identity(m.rank());
    actions = m.actions();
  } else {
    const GModule c = m.canonical();
    d_ = m.presentation().invariant_factors();
    to_ = m.presentation().to_canonical_matrix();
    from_ = m.presentation().from_canonical_matrix();
    actions = c.actions();
  }
  for (const auto& d : d_) {
    if (d == 0) throw Error(ErrorCode::InfiniteOrder, "brute force needs a finite module");
    if (!d.fits_ulong_p() || size_ > budget / d.get_ui())
      throw Error(ErrorCode::BudgetExceeded, "module larger than the enumeration budget");
    size_ *= d.get_ui();
  }
  const int n = m.group().order();
  std::uint64_t total = 1;
  for (int s = 1; s < n; ++s) {
    if (total > budget / size_)
      throw Error(ErrorCode::BudgetExceeded, "|M|^(|G|-1) exceeds the enumeration budget " + std::to_string(budget));
    total *= size_;
  }

  act_.assign(static_cast<std::size_t>(n), std::vector<Code>(size_));
  for (int s = 0; s < n; ++s)
    for (Code x = 0; x < size_; ++x) act_[s][x] = encode_element(actions[s] * decode_element(x));

  auto add = [&](Code a, Code b) {
    IntVector x = decode_element(a), y = decode_element(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return encode_element(x);
  };
  std::vector<Code> c(static_cast<std::size_t>(n), 0);
  for (Code code = 0; code < total; ++code) {
    Code rest = code;
    for (int s = 1; s < n; ++s) {
      c[s] = rest % size_;
      rest /= size_;
    }
    bool ok = true;
    for (int s = 1; s < n && ok; ++s)
      for (int t = 1; t < n && ok; ++t)
        if (c[m.group().mul(s, t)] != add(c[s], act_[s][c[t]])) ok = false;
    if (ok) cocycles_.push_back(code);
  }

  for (Code x = 0; x < size_; ++x) {
    Code code = 0;
    for (int s = n - 1; s >= 1; --s) {
      IntVector v = decode_element(act_[s][x]), w = decode_element(x);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
      code = code * size_ + encode_element(v);
    }
    coboundaries_.push_back(code);
  }
  std::sort(coboundaries_.begin(), coboundaries_.end());
  coboundaries_.erase(std::unique(coboundaries_.begin(), coboundaries_.end()), coboundaries_.end());

  // Invariant factors from the l-torsion counts of H^1.
  std::uint64_t h = cocycles_.size() / coboundaries_.size();
  std::map<std::uint64_t, std::vector<int>> exponents;  // prime -> exponents, descending
  std::uint64_t rest = h;
  for (std::uint64_t l = 2; rest > 1; ++l) {
    if (rest % l != 0) continue;
    std::uint64_t lpart = 1;
    while (rest % l == 0) rest /= l, lpart *= l;
    std::vector<std::uint64_t> counts = {1};
    Int lk = 1;
    while (counts.back() < lpart) {
      lk *= static_cast<unsigned long>(l);
      std::uint64_t hit = 0;
      for (Code z : cocycles_) {
        IntVector acc(static_cast<std::size_t>(n - 1) * d_.size());
        Code zz = z;
        Code mult = 0, place = 1;
        for (int s = 1; s < n; ++s) {
          IntVector v = decode_element(zz % size_);
          zz /= size_;
          for (auto& x : v) x *= lk;
          mult += encode_element(v) * place;
          place *= size_;
        }
        if (std::binary_search(coboundaries_.begin(), coboundaries_.end(), mult)) ++hit;
      }
      counts.push_back(hit / coboundaries_.size());
    }
    std::vector<int> at_least;  // at_least[k-1] = #factors with exponent >= k
    for (std::size_t k = 1; k < counts.size(); ++k) {
      int r = 0;
      for (std::uint64_t ratio = counts[k] / counts[k - 1]; ratio > 1; ratio /= l) ++r;
      at_least.push_back(r);
    }
    std::vector<int> exps;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      for (int j = 0; j < at_least[k] - next; ++j) exps.push_back(static_cast<int>(k + 1));
    }
    std::sort(exps.rbegin(), exps.rend());
    exponents[l] = exps;
  }
  std::size_t len = 0;
  for (const auto& [l, e] : exponents) len = std::max(len, e.size());
  for (std::size_t j = 0; j < len; ++j) {
    Int f = 1;
    for (const auto& [l, e] : exponents)
      if (j < e.size())
        for (int k = 0; k < e[j]; ++k) f *= static_cast<unsigned long>(l);
    factors_.push_back(f);
  }
  std::reverse(factors_.begin(), factors_.end());
}

Int BruteForceH1::order() const {
  return Int(static_cast<unsigned long>(cocycles_.size() / coboundaries_.size()));
}

BruteForceH1::Code BruteForceH1::encode_element(const IntVector& v) const {
  Code code = 0;
  for (std::size_t i = d_.size(); i-- > 0;) code = code * d_[i].get_ui() + mod_nonneg(v[i], d_[i]).get_ui();
  return code;
}

IntVector BruteForceH1::decode_element(Code code) const {
  IntVector v(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) {
    v[i] = static_cast<unsigned long>(code % d_[i].get_ui());
    code /= d_[i].get_ui();
  }
  return v;
}

BruteForceH1::Code BruteForceH1::encode_cocycle(const Cocycle& c) const {
  const int n = module_.group().order();
  if (static_cast<int>(c.values.size()) != n) throw Error(ErrorCode::DimensionMismatch, "cocycle has wrong length");
  Code code = 0;
  for (int s = n - 1; s >= 1; --s) code = code * size_ + encode_element(to_ * c.values[s]);
  return code;
}

Cocycle BruteForceH1::decode_cocycle(Code code) const {
  const int n = module_.group().order();
  Cocycle c;
  c.values.push_back(module_.zero());
  for (int s = 1; s < n; ++s) {
    c.values.push_back(module_.reduce(from_ * decode_element(code % size_)));
    code /= size_;
  }
  return c;
}

BruteForceH1::Code BruteForceH1::add_cocycles(Code a, Code b) const {
  const int n = module_.group().order();
  Code out = 0, place = 1;
  for (int s = 1; s < n; ++s) {
    IntVector x = decode_element(a % size_), y = decode_element(b % size_);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    out += encode_element(x) * place;
    place *= size_;
    a /= size_;
    b /= size_;
  }
  return out;
}

bool BruteForceH1::is_cocycle(const Cocycle& c) const {
  return std::binary_search(cocycles_.begin(), cocycles_.end(), encode_cocycle(c));
}

bool BruteForceH1::is_coboundary(const Cocycle& c) const {
  return std::binary_search(coboundaries_.begin(), coboundaries_.end(), encode_cocycle(c));
}

Int BruteForceH1::class_order(const Cocycle& c) const {
  const Code z = encode_cocycle(c);
  if (!std::binary_search(cocycles_.begin(), cocycles_.end(), z))
    throw Error(ErrorCode::NotACocycle, "map does not satisfy the cocycle identity");
  Code acc = z;
  unsigned long k = 1;
  while (!std::binary_search(coboundaries_.begin(), coboundaries_.end(), acc)) {
    acc = add_cocycles(acc, z);
    ++k;
  }
  return Int(k);
}

void BruteForceH1::build_class_ids() const {
  if (!class_ids_.empty()) return;
  std::size_t next = 0;
  for (Code z : cocycles_) {
    if (class_ids_.count(z)) continue;
    for (Code b : coboundaries_) class_ids_[add_cocycles(z, b)] = next;
    ++next;
  }
}

std::size_t BruteForceH1::class_id(const Cocycle& c) const {
  build_class_ids();
  const auto it = class_ids_.find(encode_cocycle(c));
  if (it == class_ids_.end()) throw Error(ErrorCode::NotACocycle, "map does not satisfy the cocycle identity");
  return it->second;
}

std::set<std::size_t> BruteForceH1::image_of(const BruteForceH1& source, const IntMatrix& phi) const {
  std::set<std::size_t> ids;
  for (Code z : source.cocycles_) {
    const Cocycle c = source.decode_cocycle(z);
    Cocycle mapped;
    for (const auto& v : c.values) mapped.values.push_back(phi * v);
    ids.insert(class_id(mapped));
  }
  return ids;
}

std::set<std::size_t> BruteForceH1::cyclic_subgroup(const Cocycle& c) const {
  build_class_ids();
  const Code z = encode_cocycle(c);
  std::set<std::size_t> ids = {0};
  Code acc = z;
  for (;;) {
    const auto it = class_ids_.find(acc);
    if (it == class_ids_.end()) throw Error(ErrorCode::NotACocycle, "map does not satisfy the cocycle identity");
    if (!ids.insert(it->second).second) break;
    acc = add_cocycles(acc, z);
  }
  return ids;
}

}  // namespace ramcoh
