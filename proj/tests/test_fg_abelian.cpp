#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "ramcoh/fg_abelian.hpp"

using namespace ramcoh;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, long bound) {
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  return a;
}

Int mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

TEST(IntMatrix, Basics) {
  const IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  EXPECT_EQ(a.transpose(), IntMatrix::from_rows({{1, 3}, {2, 4}}));
  EXPECT_EQ(a * IntMatrix::identity(2), a);
  EXPECT_EQ((a * IntVector{Int(1), Int(1)}), (IntVector{Int(3), Int(7)}));
  EXPECT_EQ(IntMatrix::hconcat(a, a).cols(), 4u);
  EXPECT_EQ(IntMatrix::vconcat(a, a).rows(), 4u);
  EXPECT_EQ(determinant(a), -2);
  EXPECT_EQ(determinant(IntMatrix::from_rows({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}})), 0);
}

TEST(Smith, DiagonalTwoThree) {
  const SmithForm s = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  EXPECT_EQ(s.diagonal(), (IntVector{Int(1), Int(6)}));
  EXPECT_EQ(s.U * IntMatrix::from_rows({{2, 0}, {0, 3}}) * s.V, s.D);
}

TEST(Smith, IdentityAndZero) {
  const SmithForm id = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(id.D, IntMatrix::identity(3));
  EXPECT_EQ(id.rank, 3u);
  const SmithForm z = smith_normal_form(IntMatrix(1, 1));
  EXPECT_EQ(z.D, IntMatrix(1, 1));
  EXPECT_EQ(z.rank, 0u);
}

TEST(Smith, MatchesGcdOfMinors) {
  // d_1 = gcd of entries, d_1 d_2 = |det| for a 2x2 of full rank.
  std::mt19937_64 rng(2);
  for (int it = 0; it < 100; ++it) {
    const IntMatrix a = random_matrix(rng, 2, 2, 30);
    const Int det = determinant(a);
    if (det == 0) continue;
    Int g = 0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) g = gcd(g, a(i, j));
    const IntVector d = smith_normal_form(a).diagonal();
    EXPECT_EQ(d[0], g);
    EXPECT_EQ(d[0] * d[1], abs(det));
  }
}

TEST(Smith, RandomProperties) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 60; ++it) {
    const std::size_t m = 1 + rng() % 7, n = 1 + rng() % 7;
    const IntMatrix a = random_matrix(rng, m, n, 20);
    const SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.U * a * s.V, s.D);
    EXPECT_EQ(s.U * s.U_inv, IntMatrix::identity(m));
    EXPECT_EQ(abs(determinant(s.U)), 1);
    EXPECT_EQ(abs(determinant(s.V)), 1);
    const IntVector d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      EXPECT_GE(d[i], 0);
      if (d[i] == 0) EXPECT_EQ(d[i + 1], 0);
      else EXPECT_EQ(d[i + 1] % d[i], 0);
    }
  }
}

TEST(Hermite, ColumnEchelon) {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 30; ++it) {
    const IntMatrix a = random_matrix(rng, 4, 6, 9);
    const IntMatrix h = column_hermite_form(a);
    std::size_t last = 0;
    bool first = true;
    for (std::size_t c = 0; c < h.cols(); ++c) {
      std::size_t r = 0;
      while (r < h.rows() && h(r, c) == 0) ++r;
      ASSERT_LT(r, h.rows());
      EXPECT_GT(h(r, c), 0);
      if (!first) EXPECT_GT(r, last);
      for (std::size_t left = 0; left < c; ++left) {
        EXPECT_GE(h(r, left), 0);
        EXPECT_LT(h(r, left), h(r, c));
      }
      last = r;
      first = false;
    }
    // Same lattice: each column of a solves against h exactly.
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const auto sol = solve_mod_lattice(h, a.column(c), IntMatrix(4, 0));
      EXPECT_TRUE(std::holds_alternative<LatticeSolution>(sol));
    }
  }
}

TEST(KernelMod, AgainstEnumeration) {
  const IntMatrix a = IntMatrix::from_rows({{2, 3}, {1, 1}});
  const IntVector moduli = {Int(6), Int(4)};
  const IntMatrix k = kernel_mod(a, moduli);
  // Count x in [0,12)^2 in the kernel and compare with the lattice index 144 / |det K| * ...
  long count = 0;
  for (long x = 0; x < 12; ++x)
    for (long y = 0; y < 12; ++y) {
      const bool in = (2 * x + 3 * y) % 6 == 0 && (x + y) % 4 == 0;
      if (in) ++count;
      const auto sol = solve_mod_lattice(k, {Int(x), Int(y)}, IntMatrix(2, 0));
      EXPECT_EQ(std::holds_alternative<LatticeSolution>(sol), in) << x << "," << y;
    }
  EXPECT_EQ(count * abs(determinant(k)), 144);
}

TEST(SolveModLattice, Examples) {
  const auto s = solve_mod_lattice(IntMatrix::from_rows({{2}}), {Int(1)}, IntMatrix::from_rows({{5}}));
  ASSERT_TRUE(std::holds_alternative<LatticeSolution>(s));
  EXPECT_EQ(mod(std::get<LatticeSolution>(s).particular[0], 5), 3);

  const auto z = solve_mod_lattice(IntMatrix::from_rows({{2, 1}, {0, 3}}), {Int(0), Int(0)}, IntMatrix::from_rows({{7}, {7}}));
  ASSERT_TRUE(std::holds_alternative<LatticeSolution>(z));
  EXPECT_EQ(std::get<LatticeSolution>(z).particular, (IntVector{Int(0), Int(0)}));

  const auto none = solve_mod_lattice(IntMatrix::from_rows({{2}}), {Int(1)}, IntMatrix::from_rows({{4}}));
  ASSERT_TRUE(std::holds_alternative<NoSolution>(none));
  const NoSolution& cert = std::get<NoSolution>(none);
  // y [A | R] = 0 and y b != 0 modulo the certificate modulus.
  const Int m = cert.modulus;
  auto reduce = [&](const Int& v) { return m == 0 ? v : mod(v, m); };
  EXPECT_EQ(reduce(cert.functional[0] * 2), 0);
  EXPECT_EQ(reduce(cert.functional[0] * 4), 0);
  EXPECT_NE(reduce(cert.functional[0] * 1), 0);
}

TEST(SolveModLattice, RandomAgainstEnumeration) {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 40; ++it) {
    const IntMatrix a = random_matrix(rng, 2, 2, 6);
    const IntMatrix r = IntMatrix::diagonal({Int(2 + static_cast<long>(rng() % 5)), Int(2 + static_cast<long>(rng() % 5))});
    const IntVector b = {Int(static_cast<long>(rng() % 7)), Int(static_cast<long>(rng() % 7))};
    bool exists = false;
    for (long x = 0; x < 36 && !exists; ++x)
      for (long y = 0; y < 36 && !exists; ++y)
        exists = mod(a(0, 0) * x + a(0, 1) * y - b[0], r(0, 0)) == 0 && mod(a(1, 0) * x + a(1, 1) * y - b[1], r(1, 1)) == 0;
    const auto sol = solve_mod_lattice(a, b, r);
    EXPECT_EQ(std::holds_alternative<LatticeSolution>(sol), exists);
    if (const auto* ls = std::get_if<LatticeSolution>(&sol)) {
      const IntVector ax = a * ls->particular;
      EXPECT_EQ(mod(ax[0] - b[0], r(0, 0)), 0);
      EXPECT_EQ(mod(ax[1] - b[1], r(1, 1)), 0);
    }
  }
}

TEST(Presentation, ElementOrder) {
  const auto z6 = FgAbelianPresentation::diagonal({Int(6)});
  EXPECT_EQ(z6.element_order({Int(0)}), 1);
  EXPECT_EQ(z6.element_order({Int(2)}), 3);
  const auto p = FgAbelianPresentation::diagonal({Int(4), Int(2)});
  EXPECT_EQ(p.element_order({Int(1), Int(1)}), 4);
  EXPECT_EQ(p.order(), 8);
}

TEST(Presentation, NonDiagonalRelations) {
  // Z^2 / <(2,4), (6,2)>: SNF gives Z/2 x Z/10.
  const FgAbelianPresentation p(2, IntMatrix::from_rows({{2, 6}, {4, 2}}));
  EXPECT_EQ(p.invariant_factors(), (IntVector{Int(2), Int(10)}));
  EXPECT_EQ(p.order(), 20);
  EXPECT_TRUE(p.is_zero({Int(2), Int(4)}));
  EXPECT_FALSE(p.is_zero({Int(1), Int(0)}));
  for (long x = -3; x < 4; ++x)
    for (long y = -3; y < 4; ++y) {
      const IntVector v = {Int(x), Int(y)};
      EXPECT_TRUE(p.equal(p.from_canonical(p.to_canonical(v)), v));
    }
}

TEST(Presentation, TrivialFactorsDropped) {
  const auto p = FgAbelianPresentation::diagonal({Int(1), Int(3), Int(1)});
  EXPECT_EQ(p.invariant_factors(), (IntVector{Int(3)}));
  EXPECT_TRUE(p.is_finite());
  const FgAbelianPresentation free(2, IntMatrix(2, 0));
  EXPECT_FALSE(free.is_finite());
}

TEST(Quotient, Examples) {
  const auto q1 = quotient_presentation(FgAbelianPresentation::diagonal({Int(4)}), {{Int(2)}});
  EXPECT_EQ(q1.quotient.order(), 2);
  const auto q2 = quotient_presentation(FgAbelianPresentation::diagonal({Int(2), Int(2)}), {{Int(1), Int(1)}});
  EXPECT_EQ(q2.quotient.order(), 2);
  const auto p = FgAbelianPresentation::diagonal({Int(3), Int(9)});
  const auto q3 = quotient_presentation(p, {});
  EXPECT_EQ(q3.quotient.invariant_factors(), p.invariant_factors());
}

TEST(Subgroup, MembershipAndOrder) {
  const auto p = FgAbelianPresentation::diagonal({Int(4), Int(2)});
  const FgSubgroup s(p, {{Int(2), Int(1)}});
  EXPECT_EQ(s.order(), 2);
  EXPECT_TRUE(s.contains(IntVector{Int(2), Int(1)}));
  EXPECT_TRUE(s.contains(IntVector{Int(0), Int(0)}));
  EXPECT_FALSE(s.contains(IntVector{Int(0), Int(1)}));
  const FgSubgroup all(p, {{Int(1), Int(0)}, {Int(0), Int(1)}});
  EXPECT_EQ(all.order(), 8);
  EXPECT_TRUE(all.contains(s));
  EXPECT_FALSE(s.contains(all));
  EXPECT_EQ(all.invariant_factors(), (IntVector{Int(2), Int(4)}));
  const FgSubgroup twice(p, {{Int(2), Int(1)}, {Int(6), Int(3)}});
  EXPECT_TRUE(twice == s);
}
