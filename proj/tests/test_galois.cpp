#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ramcoh/galois.hpp"
#include "support.hpp"

using namespace ramcoh;
using namespace ramcoh::testing;

namespace {

std::shared_ptr<const GaloisGroup> galois(const TowerSpec& s, int n = 12) {
  return GaloisGroup::compute(LocalField::build(s, n));
}

// nu_L read straight off the coordinates: min over j, l of e v_p(c_{j,l}) + j.
int coordinate_valuation(const LocalField& L, const FieldElement& x) {
  const int e = L.ramification_index(), f = L.residue_degree();
  int best = L.absolute_precision();
  for (int j = 0; j < e; ++j)
    for (int l = 0; l < f; ++l) {
      const Int& c = x.coords[static_cast<std::size_t>(j * f + l)];
      if (c == 0) continue;
      best = std::min(best, e * p_valuation(c, L.prime(), L.coefficient_precision()) + j);
    }
  return best;
}

int nonidentity(const GaloisGroup& g) {
  for (int s = 1; s < g.order(); ++s) return s;
  return 0;
}

}  // namespace

TEST(FiniteGroup, Factories) {
  const FiniteGroup c4 = FiniteGroup::cyclic(4);
  EXPECT_EQ(c4.order(), 4);
  EXPECT_EQ(c4.element_order(1), 4);
  EXPECT_EQ(c4.element_order(2), 2);
  EXPECT_EQ(c4.inverse(1), 3);
  const FiniteGroup v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  EXPECT_EQ(v4.order(), 4);
  for (int s = 1; s < 4; ++s) EXPECT_EQ(v4.element_order(s), 2);
  EXPECT_EQ(FiniteGroup::trivial().order(), 1);
}

TEST(FiniteGroup, Subgroups) {
  const FiniteGroup c6 = FiniteGroup::cyclic(6);
  EXPECT_TRUE(c6.is_subgroup({0, 2, 4}));
  EXPECT_TRUE(c6.is_subgroup({0, 3}));
  EXPECT_FALSE(c6.is_subgroup({0, 1}));
  EXPECT_FALSE(c6.is_subgroup({2, 4}));
  EXPECT_TRUE(c6.is_normal({0, 3}));
  EXPECT_EQ(c6.subgroup({4, 0, 2}).order(), 3);
  EXPECT_THROW(c6.subgroup({0, 1}), Error);
}

TEST(FiniteGroup, RejectsBadTables) {
  EXPECT_THROW(FiniteGroup(std::vector<std::vector<int>>{{0, 1}, {1, 1}}), Error);
  EXPECT_THROW(FiniteGroup(std::vector<std::vector<int>>{{1, 0}, {0, 1}}), Error);
  EXPECT_THROW(FiniteGroup(std::vector<std::vector<int>>{{0, 1}, {1, 2}}), Error);
}

TEST(GaloisGroup, Q2iConjugation) {
  const auto g = galois(q2_i());
  const LocalField& L = g->field();
  ASSERT_EQ(g->order(), 2);
  const int s = nonidentity(*g);
  const FieldElement pi = L.uniformizer();
  // The other root of x^2 + 2x + 2 is -2 - pi.
  EXPECT_TRUE(L.equal(g->apply(s, pi), L.sub(L.from_integer(-2), pi)));
  const FieldElement i = L.add(pi, L.one());
  EXPECT_TRUE(L.equal(g->apply(s, i), L.neg(i)));
  EXPECT_TRUE(L.equal(g->apply(0, i), i));
}

TEST(GaloisGroup, Zeta3) {
  const auto g = galois(q3_zeta3());
  const LocalField& L = g->field();
  ASSERT_EQ(g->order(), 2);
  const int s = nonidentity(*g);
  const FieldElement z = L.add(L.uniformizer(), L.one());
  EXPECT_TRUE(L.equal(g->apply(s, z), L.mul(z, z)));
  EXPECT_TRUE(L.equal(g->apply(s, L.uniformizer()), L.sub(L.from_integer(-3), L.uniformizer())));
}

TEST(GaloisGroup, UnramifiedFrobenius) {
  for (const auto& spec : {q2_unramified(), q3_unramified()}) {
    const auto g = galois(spec);
    const LocalField& L = g->field();
    ASSERT_EQ(g->order(), 2);
    const int s = nonidentity(*g);
    EXPECT_EQ(g->frobenius_exponent(s), 1);
    const FiniteField& k = L.residue_field();
    EXPECT_EQ(L.residue(g->apply(s, L.unramified_generator())), k.frobenius(k.generator(), 1));
  }
}

TEST(GaloisGroup, OrdersOfCorpusAndTowers) {
  for (const auto& c : corpus()) EXPECT_EQ(galois(c.spec)->order(), c.e * c.f) << c.label;
  const auto z8 = galois(q2_zeta8(), 16);
  EXPECT_EQ(z8->order(), 4);
  EXPECT_EQ(z8->breaks(), (std::vector<int>{1, 3}));
}

TEST(GaloisGroup, AutomorphismsAreRingMapsPreservingValuation) {
  std::mt19937_64 rng(17);
  for (const auto& c : corpus()) {
    const auto g = galois(c.spec);
    const LocalField& L = g->field();
    for (int it = 0; it < 5; ++it) {
      const FieldElement x = L.shift_up(L.random_unit(rng), it);
      const FieldElement y = L.random_integral(rng);
      for (int s = 0; s < g->order(); ++s) {
        EXPECT_TRUE(L.equal(g->apply(s, L.mul(x, y)), L.mul(g->apply(s, x), g->apply(s, y))));
        EXPECT_TRUE(L.equal(g->apply(s, L.add(x, y)), L.add(g->apply(s, x), g->apply(s, y))));
        EXPECT_EQ(L.valuation(g->apply(s, x)), L.valuation(x));
        EXPECT_TRUE(L.equal(g->apply(s, L.from_integer(it + 5)), L.from_integer(it + 5)));
      }
    }
  }
}

TEST(GaloisGroup, CompositionMatchesTable) {
  std::mt19937_64 rng(23);
  for (const auto& spec : {q2_mixed(), q2_zeta8()}) {
    const auto g = galois(spec, 14);
    const LocalField& L = g->field();
    const FieldElement x = L.random_integral(rng);
    for (int s = 0; s < g->order(); ++s)
      for (int t = 0; t < g->order(); ++t)
        EXPECT_TRUE(L.equal(g->apply(s, g->apply(t, x)), g->apply(g->group().mul(s, t), x)));
  }
}

TEST(GaloisGroup, NotGalois) {
  for (const auto& spec : {TowerSpec{5, {}, {{{-5}, {0}, {0}, {1}}}}, TowerSpec{2, {}, {{{-2}, {0}, {0}, {1}}}}}) {
    try {
      galois(spec);
      FAIL() << "expected NotGalois";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotGalois);
    }
  }
}

TEST(Ramification, BreaksMatchCoordinateOracle) {
  for (const auto& c : corpus()) {
    const auto g = galois(c.spec);
    const LocalField& L = g->field();
    const FieldElement pi = L.uniformizer();
    for (int s = 1; s < g->order(); ++s) {
      const bool inertial = L.residue(g->apply(s, L.unramified_generator())) == L.residue(L.unramified_generator());
      if (!inertial) {
        EXPECT_EQ(g->break_of(s), -1) << c.label;
        continue;
      }
      EXPECT_EQ(g->break_of(s), coordinate_valuation(L, L.sub(g->apply(s, pi), pi)) - 1) << c.label;
    }
    EXPECT_FALSE(g->break_of(0).has_value());
    EXPECT_EQ(g->breaks(), c.breaks) << c.label;
  }
}

TEST(Ramification, FiltrationProperties) {
  for (const auto& c : corpus()) {
    const auto g = galois(c.spec);
    const int p = static_cast<int>(c.spec.p);
    EXPECT_EQ(static_cast<int>(g->ramification_subgroup(-1).size()), g->order());
    EXPECT_EQ(static_cast<int>(g->inertia().size()), c.e);
    EXPECT_EQ(g->tame_index(), c.t) << c.label;
    EXPECT_EQ(g->wild_index(), c.w) << c.label;
    EXPECT_EQ(g->tame_index() * g->wild_index(), c.e);
    EXPECT_EQ(std::gcd(g->tame_index(), p), 1);
    int w = g->wild_index();
    while (w % p == 0) w /= p;
    EXPECT_EQ(w, 1);
    for (int i = -1; i <= g->max_break() + 1; ++i) {
      const auto gi = g->ramification_subgroup(i);
      const auto next = g->ramification_subgroup(i + 1);
      EXPECT_TRUE(g->group().is_normal(gi));
      EXPECT_TRUE(std::includes(gi.begin(), gi.end(), next.begin(), next.end()));
    }
    EXPECT_EQ(g->ramification_subgroup(g->max_break() + 1).size(), 1u);
  }
}

TEST(Ramification, CorpusFiltrations) {
  const auto z3 = galois(q3_zeta3());
  EXPECT_EQ(z3->inertia().size(), 2u);
  EXPECT_EQ(z3->ramification_subgroup(1).size(), 1u);
  const auto qi = galois(q2_i());
  EXPECT_EQ(qi->ramification_subgroup(1).size(), 2u);
  EXPECT_EQ(qi->ramification_subgroup(2).size(), 1u);
  const auto s2 = galois(q2_sqrt2());
  EXPECT_EQ(s2->ramification_subgroup(2).size(), 2u);
  EXPECT_EQ(s2->ramification_subgroup(3).size(), 1u);
}

TEST(Ramification, Zeta5IsTame) {
  const auto g = galois({5, {}, {{{5}, {10}, {10}, {5}, {1}}}});
  EXPECT_EQ(g->order(), 4);
  EXPECT_EQ(g->tame_index(), 4);
  EXPECT_EQ(g->wild_index(), 1);
}

TEST(Theta, Examples) {
  const auto z3 = galois(q3_zeta3());
  const FiniteField& k3 = z3->field().residue_field();
  EXPECT_EQ(z3->theta(0, 0), k3.one());
  const int s = nonidentity(*z3);
  EXPECT_EQ(z3->theta(0, s), k3.from_integer(2));
  EXPECT_EQ(k3.multiplicative_order(z3->theta(0, s)), 2);
  EXPECT_THROW(z3->theta(1, s), Error);

  const auto qi = galois(q2_i());
  const FiniteField& k2 = qi->field().residue_field();
  EXPECT_EQ(qi->theta(1, 0), k2.zero());
  EXPECT_EQ(qi->theta(1, nonidentity(*qi)), k2.one());
  try {
    qi->theta(2, nonidentity(*qi));
    FAIL() << "expected NotInLevel";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInLevel);
  }
}

TEST(Theta, HomomorphismOnG1) {
  const auto g = galois(q2_zeta8(), 16);
  const FiniteField& k = g->field().residue_field();
  for (int i : g->breaks()) {
    if (i < 1) continue;
    const auto gi = g->ramification_subgroup(i);
    for (int s : gi)
      for (int t : gi) EXPECT_EQ(g->theta(i, g->group().mul(s, t)), k.add(g->theta(i, s), g->theta(i, t)));
  }
}

TEST(RootsInField, SquareRootsOfMinusOne) {
  const auto L = LocalField::build(q2_i(), 12);
  const Poly<FieldElement> f = {L->one(), L->zero(), L->one()};
  const auto roots = roots_in_field(*L, f, 10);
  ASSERT_EQ(roots.size(), 2u);
  for (const auto& r : roots) EXPECT_TRUE(L->equal(L->add(L->mul(r, r), L->one()), L->zero()));
}
