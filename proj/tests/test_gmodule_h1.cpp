#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "ramcoh/brute_force.hpp"
#include "ramcoh/h1.hpp"
#include "random_modules.hpp"

using namespace ramcoh;
using namespace ramcoh::testing;

namespace {

GModule cyclic_on_zk(int n, long k, long generator_acts_by) {
  std::vector<IntMatrix> act;
  Int a = 1;
  for (int s = 0; s < n; ++s) {
    act.push_back(IntMatrix::diagonal({a}));
    a *= generator_acts_by;
  }
  return GModule(FiniteGroup::cyclic(n), FgAbelianPresentation::diagonal({Int(k)}), act);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ConfigError;
}

}  // namespace

TEST(BruteForce, SmallExamples) {
  EXPECT_EQ(BruteForceH1(cyclic_on_zk(2, 2, 1)).invariant_factors(), (IntVector{Int(2)}));
  // Negation on Z/4: Z^1 = {c : c(s) in Z/4 with c(s) - c(s) = 0} = Z/4, B^1 = 2Z/4.
  const BruteForceH1 neg(cyclic_on_zk(2, 4, -1));
  EXPECT_EQ(neg.invariant_factors(), (IntVector{Int(2)}));
  EXPECT_EQ(neg.num_cocycles(), 4u);
  EXPECT_EQ(neg.num_coboundaries(), 2u);
  EXPECT_EQ(BruteForceH1(cyclic_on_zk(1, 7, 1)).order(), 1);
}

TEST(BruteForce, Budget) {
  EXPECT_EQ(code_of([] { BruteForceH1(cyclic_on_zk(4, 64, 1), 1000); }), ErrorCode::BudgetExceeded);
}

TEST(H1, SmallExamples) {
  EXPECT_EQ(CohomologyGroup::compute(cyclic_on_zk(2, 2, 1))->invariant_factors(), (IntVector{Int(2)}));
  EXPECT_EQ(CohomologyGroup::compute(cyclic_on_zk(2, 4, -1))->invariant_factors(), (IntVector{Int(2)}));
  EXPECT_EQ(CohomologyGroup::compute(cyclic_on_zk(1, 9, 1))->order(), 1);
  EXPECT_EQ(CohomologyGroup::compute(cyclic_on_zk(2, 3, -1))->order(), 1);
}

TEST(H1, TrivialActionIsHom) {
  for (int n = 1; n <= 6; ++n)
    for (long k = 1; k <= 12; ++k) {
      const auto h = CohomologyGroup::compute(cyclic_on_zk(n, k, 1));
      EXPECT_EQ(h->order(), std::gcd(static_cast<long>(n), k)) << n << " " << k;
      EXPECT_LE(h->num_generators(), 1u);
    }
}

TEST(H1, CyclicGroupFormula) {
  // For cyclic G = <g>, H^1 = ker(N) / (g - 1)M. With g acting by a on Z/k this is
  // an order computed by counting.
  for (int n : {2, 3, 4})
    for (long k : {5L, 7L, 8L, 9L})
      for (long a = 1; a < k; ++a) {
        long an = 1;
        for (int i = 0; i < n; ++i) an = an * a % k;
        if (an != 1) continue;
        long ker = 0, im = 0;
        std::vector<bool> hit(static_cast<std::size_t>(k), false);
        for (long x = 0; x < k; ++x) {
          long norm = 0, pw = 1;
          for (int i = 0; i < n; ++i) {
            norm = (norm + pw * x) % k;
            pw = pw * a % k;
          }
          if (norm == 0) ++ker;
          hit[static_cast<std::size_t>(((a - 1) * x % k + k) % k)] = true;
        }
        for (bool b : hit) im += b;
        EXPECT_EQ(CohomologyGroup::compute(cyclic_on_zk(n, k, a))->order(), ker / im) << n << " " << k << " " << a;
      }
}

TEST(H1, AgreesWithBruteForceOnRandomModules) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 40; ++it) {
    const RandomModule rm = random_module(rng, 64);
    const auto h = CohomologyGroup::compute(rm.module);
    const BruteForceH1 bf(rm.module);
    EXPECT_EQ(h->invariant_factors(), bf.invariant_factors()) << rm.description;
    EXPECT_EQ(Int(bf.num_cocycles()), bf.order() * Int(bf.num_coboundaries()));
  }
}

TEST(H1, ClassesAndSections) {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 25; ++it) {
    const RandomModule rm = random_module(rng, 48);
    const auto h = CohomologyGroup::compute(rm.module);
    const BruteForceH1 bf(rm.module);
    for (int k = 0; k < 5; ++k) {
      IntVector coords;
      for (const Int& d : h->invariant_factors()) coords.push_back(Int(uniform(rng, 0, d.get_si() - 1)));
      IntVector x;
      for (std::size_t j = 0; j < rm.module.rank(); ++j) x.push_back(Int(uniform(rng, -5, 5)));
      const Cocycle c = add_cocycles(rm.module, h->section(coords), coboundary(rm.module, x));
      ASSERT_TRUE(is_cocycle(rm.module, c)) << rm.description;
      ASSERT_TRUE(bf.is_cocycle(c));
      const CohomologyClass cls = h->class_of(c);
      EXPECT_TRUE(cls == h->make_class(coords)) << rm.description;
      EXPECT_EQ(cls.order(), bf.class_order(c)) << rm.description;
      EXPECT_EQ(cls.is_zero(), bf.is_coboundary(c));
      EXPECT_TRUE(h->class_of(cls.representative()) == cls);
    }
  }
}

TEST(H1, IsCoboundaryWitness) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 25; ++it) {
    const RandomModule rm = random_module(rng, 48);
    const GModule& m = rm.module;
    IntVector x;
    for (std::size_t j = 0; j < m.rank(); ++j) x.push_back(Int(uniform(rng, -9, 9)));
    const Cocycle c = coboundary(m, x);
    const CoboundaryResult r = is_coboundary(m, c);
    ASSERT_TRUE(r.is_coboundary);
    const Cocycle again = coboundary(m, r.witness);
    for (int s = 0; s < m.group().order(); ++s)
      EXPECT_TRUE(m.presentation().equal(again.values[s], c.values[s])) << rm.description;

    const auto h = CohomologyGroup::compute(m);
    if (h->order() == 1) continue;
    const CoboundaryResult nr = is_coboundary(m, h->section(h->generator(0).coords()));
    EXPECT_FALSE(nr.is_coboundary);
    EXPECT_TRUE(nr.certificate.has_value());
  }
}

TEST(H1, CocycleArithmetic) {
  const GModule m = cyclic_on_zk(2, 4, -1);
  const auto h = CohomologyGroup::compute(m);
  const Cocycle c{{IntVector{Int(0)}, IntVector{Int(1)}}};
  ASSERT_TRUE(is_cocycle(m, c));
  EXPECT_EQ(h->class_of(c).order(), 2);
  EXPECT_TRUE(h->class_of(add_cocycles(m, c, c)).is_zero());
  EXPECT_TRUE(h->class_of(scale_cocycle(m, c, Int(3))) == h->class_of(c));
  EXPECT_FALSE(is_cocycle(m, Cocycle{{IntVector{Int(1)}, IntVector{Int(1)}}}));
}

TEST(H1, InducedMaps) {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 20; ++it) {
    const RandomModule rm = random_module(rng, 64);
    const auto h = CohomologyGroup::compute(rm.module);
    const std::size_t n = rm.module.rank();
    const IntMatrix id = induced_map(IntMatrix::identity(n), *h, *h);
    for (std::size_t j = 0; j < h->num_generators(); ++j) {
      const CohomologyClass g = h->generator(j);
      EXPECT_TRUE(apply_induced(id, *h, g) == g);
      // Multiplication by 3 on M induces multiplication by 3 on H^1.
      const IntMatrix three = induced_map(IntMatrix::diagonal(IntVector(n, Int(3))), *h, *h);
      EXPECT_TRUE(apply_induced(three, *h, g) == g * Int(3)) << rm.description;
    }
  }
}

TEST(H1, InducedMapMatchesBruteForceImage) {
  // Z/8 -> Z/4 reduction under trivial C2, and Z/4 -> Z/8 by 2.
  const GModule z8 = cyclic_on_zk(2, 8, 1), z4 = cyclic_on_zk(2, 4, 1);
  const auto h8 = CohomologyGroup::compute(z8), h4 = CohomologyGroup::compute(z4);
  const BruteForceH1 b8(z8), b4(z4);
  const IntMatrix red = IntMatrix::identity(1), dbl = IntMatrix::diagonal({Int(2)});
  const FgSubgroup im1(h4->presentation(), {induced_map(red, *h8, *h4).column(0)});
  EXPECT_EQ(im1.order(), Int(b4.image_of(b8, red).size()));
  const FgSubgroup im2(h8->presentation(), {induced_map(dbl, *h4, *h8).column(0)});
  EXPECT_EQ(im2.order(), Int(b8.image_of(b4, dbl).size()));
  EXPECT_EQ(im2.order(), 2);  // g -> 2 in Z/4 goes to g -> 4, the generator of Hom(C2, Z/8)
}

TEST(H1, Restriction) {
  const GModule m = cyclic_on_zk(4, 4, 1);
  const auto h = CohomologyGroup::compute(m);
  ASSERT_EQ(h->invariant_factors(), (IntVector{Int(4)}));
  const std::vector<int> sub = {0, 2};
  const auto hr = CohomologyGroup::compute(m.restrict_to(sub));
  EXPECT_EQ(hr->invariant_factors(), (IntVector{Int(2)}));
  // The homomorphism g -> 1 restricts to g^2 -> 2, of order 2.
  const Cocycle c{{IntVector{Int(0)}, IntVector{Int(1)}, IntVector{Int(2)}, IntVector{Int(3)}}};
  const CohomologyClass res = restriction(*hr, sub, h->class_of(c));
  EXPECT_EQ(res.order(), 2);
  EXPECT_TRUE(restriction(*hr, sub, h->class_of(c) * Int(2)).is_zero());
}

TEST(H1, CanonicalModuleHasSameCohomology) {
  std::mt19937_64 rng(47);
  for (int it = 0; it < 15; ++it) {
    const RandomModule rm = random_module(rng, 64);
    const GModule c = rm.module.canonical();
    EXPECT_EQ(c.presentation().invariant_factors(), rm.module.presentation().invariant_factors());
    EXPECT_EQ(CohomologyGroup::compute(c)->invariant_factors(), CohomologyGroup::compute(rm.module)->invariant_factors());
  }
}

TEST(H1, ClassSubgroup) {
  const GModule m = cyclic_on_zk(4, 8, 1);
  const auto h = CohomologyGroup::compute(m);
  const CohomologyClass g = h->generator(0);
  EXPECT_EQ(class_subgroup(*h, {g * Int(2)}).order(), 2);
  EXPECT_EQ(class_subgroup(*h, {g}).order(), 4);
  EXPECT_EQ(class_subgroup(*h, {}).order(), 1);
}

TEST(GModuleErrors, Codes) {
  const auto z4 = FgAbelianPresentation::diagonal({Int(4)});
  // Order-3 automorphism requested for C2.
  EXPECT_EQ(code_of([&] { GModule(FiniteGroup::cyclic(2), z4, {IntMatrix::identity(1), IntMatrix::diagonal({Int(2)})}); }),
            ErrorCode::NotAModule);
  // Z/2 x Z/4 with (1,0) -> (0,1) does not preserve relations.
  const auto p = FgAbelianPresentation::diagonal({Int(2), Int(4)});
  const IntMatrix swap = IntMatrix::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(code_of([&] { GModule(FiniteGroup::cyclic(2), p, {IntMatrix::identity(2), swap}); }), ErrorCode::NotAModule);

  const GModule triv = cyclic_on_zk(2, 4, 1), neg = cyclic_on_zk(2, 4, -1);
  EXPECT_EQ(code_of([&] { check_equivariant(triv, neg, IntMatrix::identity(1)); }), ErrorCode::NotEquivariant);
  EXPECT_EQ(code_of([&] { check_equivariant(cyclic_on_zk(2, 2, 1), triv, IntMatrix::identity(1)); }),
            ErrorCode::NotEquivariant);
  EXPECT_NO_THROW(check_equivariant(triv, triv, IntMatrix::diagonal({Int(3)})));

  const auto h = CohomologyGroup::compute(triv);
  EXPECT_EQ(code_of([&] { h->class_of(Cocycle{{IntVector{Int(1)}, IntVector{Int(0)}}}); }), ErrorCode::NotACocycle);

  const GModule free(FiniteGroup::cyclic(2), FgAbelianPresentation(1, IntMatrix(1, 0)), {IntMatrix::identity(1), IntMatrix::identity(1)});
  EXPECT_EQ(code_of([&] { CohomologyGroup::compute(free); }), ErrorCode::InfiniteOrder);
}
