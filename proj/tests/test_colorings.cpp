#include <algorithm>

#include "doctest.h"
#include "dichro/colorings.hpp"
#include "dichro/errors.hpp"
#include "dichro/families.hpp"
#include "oracles.hpp"

using namespace dichro;

TEST_CASE("Coloring accessors and validation") {
  const Coloring c{{1, 3, 1, 3}, 3};
  CHECK(c.used_colors() == 2);
  CHECK(c.color_class(1) == std::vector<vertex_id>{0, 2});
  CHECK(c.color_class(2).empty());
  CHECK_NOTHROW(validate(c));
  CHECK_THROWS_AS(validate(Coloring{{0, 1}, 2}), parameter_error);
  CHECK_THROWS_AS(validate(Coloring{{1, 3}, 2}), parameter_error);
}

TEST_CASE("clamped-min coloring examples") {
  const Coloring petersen = clamped_min_coloring(5, 2, 0);
  CHECK(petersen.palette == 3);
  // colex: {1,2} {1,3} {2,3} {1,4} {2,4} {3,4} {1,5} {2,5} {3,5} {4,5}
  CHECK(petersen.colors == std::vector<int>{1, 1, 2, 1, 2, 3, 1, 2, 3, 3});

  const Coloring k6 = clamped_min_coloring(4, 2, 1);
  CHECK(k6.palette == 3);
  CHECK(k6.colors == std::vector<int>{1, 1, 2, 1, 2, 3});

  CHECK_THROWS_AS(clamped_min_coloring(5, 2, 2), parameter_error);
  CHECK_THROWS_AS(clamped_min_coloring(5, 3, 0), parameter_error);
  CHECK_THROWS_AS(clamped_min_coloring(5, 2, -1), parameter_error);
}

TEST_CASE("block coloring examples") {
  const Coloring j42 = block_coloring_johnson(4, 2);
  CHECK(j42.palette == 2);
  CHECK(j42.colors == std::vector<int>{1, 1, 1, 1, 1, 2});
  const Coloring j73 = block_coloring_johnson(7, 3);
  CHECK(j73.palette == 3);
  CHECK(j73.colors.back() == 2);  // {5,6,7}
  CHECK_THROWS_AS(block_coloring_johnson(4, 0), parameter_error);
}

TEST_CASE("property: clamped palette is min(t, n-k+1) and colors agree with the formula") {
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (int s = 0; s < k; ++s) {
        const int t = n - 2 * k + s + 2;
        const Coloring c = clamped_min_coloring(n, k, s);
        CHECK(c.palette == t);
        CHECK(c.used_colors() == std::min(t, n - k + 1));
        const auto sets = oracle::ksubsets(n, k);
        for (std::size_t v = 0; v < sets.size(); ++v) CHECK(c.colors[v] == std::min(sets[v][0], t));
      }
}

TEST_CASE("property: the clamped coloring is acyclic under the min rule with an independent top class") {
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (int s = 0; s < k; ++s) {
        const FamilyGraph g = gen_generalized_kneser(n, k, s);
        const Coloring c = clamped_min_coloring(n, k, s);
        const VerifyReport report = verify_acyclic_coloring(orient_min_rule(g), c);
        CHECK(report.proper);
        CHECK(report.per_class.size() == static_cast<std::size_t>(c.palette));
        CHECK_FALSE(verify_independent_class(g, c, c.palette).has_value());
      }
}

TEST_CASE("property: block classes are acyclic under the sum rule") {
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= n; ++k) {
      const FamilyGraph g = gen_johnson(n, k);
      const Coloring c = block_coloring_johnson(n, k);
      CHECK(verify_acyclic_coloring(orient_sum_rule(g), c).proper);
    }
  // not proper in the undirected sense: {1,2} ~ {1,3} share block 1
  CHECK_FALSE(is_proper_coloring(gen_johnson(4, 2), block_coloring_johnson(4, 2)));
  // J(n,1) = K_n gets n singleton classes
  CHECK(is_proper_coloring(gen_johnson(6, 1), block_coloring_johnson(6, 1)));
}

TEST_CASE("property: a proper coloring is acyclic under every orientation") {
  const FamilyGraph g = gen_generalized_kneser(6, 2, 0);
  const Coloring c = clamped_min_coloring(6, 2, 0);
  REQUIRE(is_proper_coloring(g, c));
  for (std::uint64_t seed = 0; seed < 100; ++seed) CHECK(verify_acyclic_coloring(random_orientation(g, seed), c).proper);
}

TEST_CASE("verify_acyclic_coloring reports the offending class") {
  const Digraph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  const VerifyReport bad = verify_acyclic_coloring(triangle, Coloring{{1, 1, 1}, 1});
  CHECK_FALSE(bad.proper);
  REQUIRE(bad.violating_class.has_value());
  CHECK(*bad.violating_class == 1);
  REQUIRE(std::holds_alternative<DirectedCycle>(bad.per_class[0]));
  CHECK(std::get<DirectedCycle>(bad.per_class[0]).vertices == std::vector<vertex_id>{0, 1, 2});

  const VerifyReport good = verify_acyclic_coloring(triangle, Coloring{{1, 1, 2}, 2});
  CHECK(good.proper);
  CHECK(check_certificate(triangle, good.per_class[0]) == false);  // class-local order, not a full one
  CHECK(std::get<TopoOrder>(good.per_class[0]).order == std::vector<vertex_id>{0, 1});

  CHECK_THROWS_AS(verify_acyclic_coloring(triangle, Coloring{{1, 1}, 1}), parameter_error);
}

TEST_CASE("verify_independent_class and is_proper_coloring") {
  const FamilyGraph path(3, {{0, 1}, {1, 2}});
  const Coloring c{{1, 2, 1}, 2};
  CHECK(is_proper_coloring(path, c));
  CHECK_FALSE(verify_independent_class(path, c, 1).has_value());
  const Coloring bad{{1, 1, 2}, 2};
  CHECK_FALSE(is_proper_coloring(path, bad));
  REQUIRE(verify_independent_class(path, bad, 1).has_value());
  CHECK(*verify_independent_class(path, bad, 1) == Edge{0, 1});
}
