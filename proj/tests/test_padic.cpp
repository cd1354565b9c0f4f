#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ramcoh/padic.hpp"
#include "ramcoh/residue_field.hpp"

using namespace ramcoh;

namespace {

// Smallest x in [0, m) with a x = 1 mod m, by search.
long inverse_by_search(long a, long m) {
  for (long x = 0; x < m; ++x)
    if ((a * x) % m == 1) return x;
  return -1;
}

}  // namespace

TEST(CoeffRing, InvertMatchesSearch) {
  CoeffRing r(2, 4);
  EXPECT_EQ(r.invert(3), inverse_by_search(3, 16));
  EXPECT_EQ(r.invert(3), 11);
  CoeffRing r5(5, 3);
  for (long a = 1; a < 125; ++a)
    if (a % 5 != 0) EXPECT_EQ(r5.invert(a), inverse_by_search(a, 125)) << a;
}

TEST(CoeffRing, AddWrapsAround) {
  CoeffRing r(3, 2);
  EXPECT_EQ(r.add(8, 1), 0);
  EXPECT_EQ(r.sub(0, 1), 8);
  EXPECT_EQ(r.neg(3), 6);
}

TEST(CoeffRing, InvertNonUnitThrows) {
  CoeffRing r(2, 4);
  try {
    r.invert(2);
    FAIL() << "expected NonUnit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUnit);
  }
}

TEST(CoeffRing, RejectsComposite) {
  EXPECT_THROW(CoeffRing(6, 3), Error);
  EXPECT_THROW(CoeffRing(1, 3), Error);
}

TEST(CoeffRing, Valuation) {
  CoeffRing r(3, 5);
  EXPECT_EQ(r.valuation(0), 5);
  EXPECT_EQ(r.valuation(18), 2);
  EXPECT_EQ(r.valuation(243), 5);
  EXPECT_EQ(r.valuation(1), 0);
}

TEST(CoeffRing, RandomRingAxioms) {
  std::mt19937_64 rng(7);
  CoeffRing r(7, 6);
  for (int it = 0; it < 200; ++it) {
    const Int a = static_cast<unsigned long>(rng() % 117649), b = static_cast<unsigned long>(rng() % 117649);
    EXPECT_EQ(r.mul(a, b), Int((a * b) % 117649));
    EXPECT_EQ(r.add(r.sub(a, b), b), a);
    if (a % 7 != 0) EXPECT_EQ(r.mul(a, r.invert(a)), 1);
  }
}

TEST(Hensel, SquareRootOfMinusSeven) {
  CoeffRing r(2, 6);
  const Poly<Int> f = {7, 0, 1};
  const Int root = hensel_lift_root(r, f, Int(1), 6);
  EXPECT_EQ((root * root + 7) % 64, 0);
  // Agrees with r0 = 1 to v(f(1)) - v(f'(1)) = 3 - 1 = 2 digits.
  EXPECT_EQ(root % 4, 1);
  std::vector<long> roots;
  for (long x = 0; x < 64; ++x)
    if ((x * x + 7) % 64 == 0) roots.push_back(x);
  EXPECT_NE(std::find(roots.begin(), roots.end(), root.get_si()), roots.end());
}

TEST(Hensel, LinearPolynomial) {
  for (int m : {1, 3, 9}) {
    CoeffRing r(5, m);
    EXPECT_EQ(r.reduce(hensel_lift_root(r, Poly<Int>{-5, 1}, Int(5), m)), r.reduce(5));
  }
}

TEST(Hensel, DegenerateDerivative) {
  CoeffRing r(3, 6);
  for (const Poly<Int>& f : {Poly<Int>{0, 0, 1}, Poly<Int>{3, 0, 1}}) {
    try {
      hensel_lift_root(r, f, Int(0), 6);
      FAIL() << "expected HenselFailure";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::HenselFailure);
    }
  }
}

TEST(Hensel, CubeRootOfUnity) {
  CoeffRing r(7, 8);
  const Int root = hensel_lift_root(r, Poly<Int>{1, 1, 1}, Int(2), 8);
  EXPECT_EQ(r.reduce(root * root + root + 1), 0);
  EXPECT_EQ(root % 7, 2);
}

TEST(Hensel, TargetBeyondPrecision) {
  CoeffRing r(2, 4);
  EXPECT_THROW(hensel_lift_root(r, Poly<Int>{7, 0, 1}, Int(1), 5), Error);
}

TEST(FiniteField, IrreducibilityCheck) {
  EXPECT_TRUE(is_irreducible_mod_p({1, 1, 1}, 2));
  EXPECT_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));
  EXPECT_TRUE(is_irreducible_mod_p({1, 0, 1}, 3));
  EXPECT_FALSE(is_irreducible_mod_p({1, 0, 1}, 5));
  EXPECT_TRUE(is_irreducible_mod_p({1, 1, 0, 1}, 2));
}

TEST(FiniteField, F4Arithmetic) {
  FiniteField k(2, {1, 1, 1});
  EXPECT_EQ(k.order(), 4);
  const auto y = k.generator();
  EXPECT_EQ(k.add(k.mul(y, y), k.add(y, k.one())), k.zero());
  EXPECT_EQ(k.pow(y, 3), k.one());
  EXPECT_EQ(k.frobenius(y, 1), k.mul(y, y));
  EXPECT_EQ(k.frobenius(y, 2), y);
}

TEST(FiniteField, DiscreteLogRoundTrip) {
  FiniteField k(3, {2, 2, 0, 1});  // y^3 + 2y + 2, irreducible over F_3
  ASSERT_EQ(k.order(), 27);
  EXPECT_EQ(k.multiplicative_order(k.primitive_element()), 26);
  for (std::uint64_t i = 1; i < 27; ++i) {
    const auto a = k.element(i);
    EXPECT_EQ(k.pow(k.primitive_element(), static_cast<std::uint64_t>(k.discrete_log(a))), a);
    EXPECT_EQ(k.mul(a, k.inv(a)), k.one());
  }
}

TEST(FiniteField, LinearMapMatrix) {
  FiniteField k(2, {1, 1, 1});
  const auto c = k.generator();
  const auto m = k.linear_map_matrix(c, 1);
  for (std::uint64_t i = 0; i < 4; ++i) {
    const auto x = k.element(i);
    const auto want = k.mul(c, k.frobenius(x, 1));
    for (int r = 0; r < 2; ++r) {
      std::int64_t acc = 0;
      for (int j = 0; j < 2; ++j) acc += m[r][j] * x[j];
      EXPECT_EQ(acc % 2, want[r]);
    }
  }
}
