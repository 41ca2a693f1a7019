#include <doctest.h>

#include <cmath>

#include "cayley/error.hpp"
#include "cayley/walks.hpp"

using namespace cayley;

TEST_CASE("wreath multiplication") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  WreathElement id;
  WreathElement a;
  a.shift = 2;
  a.lamps = {{-1, 1}, {3, 1}};
  CHECK(wreath_multiply(a, id, z2) == a);
  CHECK(wreath_multiply(id, a, z2) == a);

  // torsion: a lamp of order 2 squared is trivial
  WreathElement lamp;
  lamp.lamps = {{0, 1}};
  CHECK(wreath_multiply(lamp, lamp, z2).is_identity());

  // generator pairs t g_i and g_i^-1 t^-1 cancel
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  for (int i = 0; i < 3; ++i) {
    WreathElement tg;
    tg.shift = 1;
    if (i != 0) tg.lamps = {{1, i}};
    WreathElement ginv_tinv;
    ginv_tinv.shift = -1;
    if (i != 0) ginv_tinv.lamps = {{0, z3.inverse(i)}};
    CHECK(wreath_multiply(tg, ginv_tinv, z3).is_identity());
    CHECK(wreath_multiply(ginv_tinv, tg, z3).is_identity());
    CHECK(wreath_inverse(tg, z3) == ginv_tinv);
  }

  // associativity on a few samples
  WreathElement b;
  b.shift = -1;
  b.lamps = {{0, 2}};
  WreathElement c;
  c.shift = 1;
  c.lamps = {{-2, 1}, {1, 2}};
  CHECK(wreath_multiply(wreath_multiply(a, b, z3), c, z3) ==
        wreath_multiply(a, wreath_multiply(b, c, z3), z3));
}

TEST_CASE("step distribution") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  auto dist = step_distribution(z2);
  REQUIRE(dist.size() == 4);
  for (const auto& [e, p] : dist) {
    CHECK(p == Rat(1, 4));
    CHECK((e.shift == 1 || e.shift == -1));
  }
  // closed under inversion as a multiset
  for (const auto& [e, p] : dist) {
    WreathElement inv = wreath_inverse(e, z2);
    bool found = false;
    for (const auto& [f, q] : dist)
      if (f == inv) found = true;
    CHECK(found);
  }
  // t g_i moves right and recolours the new position
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  auto dist3 = step_distribution(z3);
  CHECK(dist3[1].first.shift == 1);
  CHECK(dist3[1].first.lamps == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(dist3[3 + 1].first.shift == -1);
  CHECK(dist3[3 + 1].first.lamps == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("return probabilities") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  CHECK(return_probability(z2, 0) == 1);
  for (int m : {1, 3, 5, 7}) CHECK(return_probability(z2, m) == 0);
  CHECK(return_probability(z2, 2) == Rat(1, 4));
  CHECK(return_probability(FiniteGroup::cyclic(3), 2) == Rat(1, 6));

  // half-step split equals the full convolution
  for (int m = 0; m <= 8; ++m) {
    WalkDistribution full(z2, m);
    CHECK(full.identity_mass() == return_probability(z2, m));
  }

  CHECK_THROWS_WITH_AS(return_probability(z2, 100), doctest::Contains("budget-exceeded"),
                       DomainError);
}

TEST_CASE("walk distribution invariants") {
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  for (int m = 0; m <= 6; ++m) {
    WalkDistribution d(z3, m);
    CHECK(d.total_mass() == 1);
  }
  for (int m = 0; m <= 5; ++m) {
    WalkDistribution d(z3, m);
    CHECK(d.inversion_symmetric());
  }
}

TEST_CASE("groups of equal order give the same chain") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  FiniteGroup v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  for (int m = 0; m <= 10; ++m) CHECK(return_probability(z4, m) == return_probability(v4, m));
}

TEST_CASE("kesten moments") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  std::vector<Rat> moments = kesten_moments(z2, 6);
  REQUIRE(moments.size() == 7);
  CHECK(moments[0] == 1);
  CHECK(moments[1] == 0);
  CHECK(moments[2] == Rat(1, 4));
  CHECK(moments[3] == 0);
  CHECK(moments[4] == Rat(1, 8));
  CHECK(moments[6] == Rat(19, 256));
}

TEST_CASE("monte carlo mode") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  double mc = monte_carlo_return(z2, 4, 20000, 42);
  CHECK(std::fabs(mc - 0.125) < 0.02);
  // deterministic for a fixed seed
  CHECK(mc == monte_carlo_return(z2, 4, 20000, 42));
}
