#include <algorithm>

#include "doctest.h"
#include "dichro/errors.hpp"
#include "dichro/families.hpp"
#include "oracles.hpp"

using namespace dichro;

namespace {

bool regular(const FamilyGraph& g, std::size_t degree) {
  for (vertex_id v = 0; v < g.vertex_count(); ++v)
    if (g.neighbors(v).size() != degree) return false;
  return true;
}

// Adjacency from an independent pairwise scan of the subsets.
template <class Adjacent>
void check_against_scan(const FamilyGraph& g, int n, int k, Adjacent adjacent) {
  const auto sets = oracle::ksubsets(n, k);
  REQUIRE(g.vertex_count() == sets.size());
  std::size_t edges = 0;
  for (std::size_t u = 0; u < sets.size(); ++u) {
    CHECK(g.labels()[u].elements() == sets[u]);
    for (std::size_t v = u + 1; v < sets.size(); ++v) {
      const bool want = adjacent(oracle::intersect(sets[u], sets[v]));
      edges += want;
      CHECK(g.adjacent(static_cast<vertex_id>(u), static_cast<vertex_id>(v)) == want);
    }
  }
  CHECK(g.edge_count() == edges);
}

}  // namespace

TEST_CASE("generalized Kneser examples") {
  const FamilyGraph petersen = gen_generalized_kneser(5, 2, 0);
  CHECK(petersen.vertex_count() == 10);
  CHECK(petersen.edge_count() == 15);
  CHECK(regular(petersen, 3));

  const FamilyGraph k6 = gen_generalized_kneser(4, 2, 1);
  CHECK(k6.vertex_count() == 6);
  CHECK(k6.edge_count() == 15);

  CHECK(gen_generalized_kneser(3, 2, 0).edge_count() == 0);
  // s = k: every distinct pair is adjacent
  CHECK(gen_generalized_kneser(5, 2, 2).edge_count() == 45);
}

TEST_CASE("generalized Kneser parameter errors and caps") {
  CHECK_THROWS_AS(gen_generalized_kneser(5, 2, 3), parameter_error);
  CHECK_THROWS_AS(gen_generalized_kneser(5, 6, 0), parameter_error);
  CHECK_THROWS_AS(gen_generalized_kneser(5, 0, 0), parameter_error);
  CHECK_THROWS_AS(gen_generalized_kneser(5, 2, -1), parameter_error);
  CHECK_THROWS_AS(gen_generalized_kneser(65, 2, 0), parameter_error);
  CHECK_THROWS_AS(gen_generalized_kneser(20, 10, 0), cap_exceeded);
  CHECK_THROWS_AS(gen_generalized_kneser(6, 3, 0, 19), cap_exceeded);
  CHECK_NOTHROW(gen_generalized_kneser(6, 3, 0, 20));
}

TEST_CASE("generalized Kneser matches a pairwise scan") {
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k)
      for (int s = 0; s <= k; ++s)
        check_against_scan(gen_generalized_kneser(n, k, s), n, k, [&](int i) { return i <= s; });
}

TEST_CASE("property: Kneser degree is C(n-k,k) and edges grow with s") {
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      CHECK(regular(gen_generalized_kneser(n, k, 0), binomial(n - k, k)));
      std::size_t previous = 0;
      for (int s = 0; s <= k; ++s) {
        const std::size_t e = gen_generalized_kneser(n, k, s).edge_count();
        CHECK(e >= previous);
        previous = e;
      }
    }
}

TEST_CASE("Johnson examples") {
  const FamilyGraph j42 = gen_johnson(4, 2);
  CHECK(j42.vertex_count() == 6);
  CHECK(j42.edge_count() == 12);
  CHECK(regular(j42, 4));

  const FamilyGraph j52 = gen_johnson(5, 2);
  CHECK(j52.edge_count() == 30);
  CHECK(regular(j52, 6));

  for (int n = 1; n <= 8; ++n) {
    const FamilyGraph jn1 = gen_johnson(n, 1);
    CHECK(jn1.edge_count() == static_cast<std::size_t>(n * (n - 1) / 2));
  }
  CHECK_THROWS_AS(gen_johnson(4, 0), parameter_error);
  CHECK_THROWS_AS(gen_johnson(4, 5), parameter_error);
}

TEST_CASE("Johnson matches a pairwise scan and has degree k(n-k)") {
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k) {
      const FamilyGraph g = gen_johnson(n, k);
      check_against_scan(g, n, k, [&](int i) { return i == k - 1; });
      CHECK(regular(g, static_cast<std::size_t>(k * (n - k))));
    }
}

TEST_CASE("generate dispatches on family") {
  CHECK(generate({Family::johnson, 4, 2, 0}).edge_count() == 12);
  CHECK(generate({Family::generalized_kneser, 5, 2, 0}).edge_count() == 15);
}

TEST_CASE("min rule examples") {
  const FamilyGraph g = gen_generalized_kneser(5, 2, 0);
  const Digraph d = orient_min_rule(g);
  const auto id = [](std::vector<int> e) { return static_cast<vertex_id>(rank(KSubset::from_elements(e, 5))); };
  CHECK(d.has_arc(id({1, 2}), id({3, 4})));
  CHECK(d.has_arc(id({2, 5}), id({3, 4})));
  CHECK(d.has_arc(id({1, 5}), id({2, 3})));
  CHECK(d.arc_count() == g.edge_count());

  const Digraph k6 = orient_min_rule(gen_generalized_kneser(4, 2, 1));
  CHECK(k6.has_arc(id({1, 3}), id({2, 3})));
  CHECK(k6.has_arc(id({1, 4}), id({2, 3})));
}

TEST_CASE("property: min rule is the lexicographic total order, hence acyclic") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      for (int s = 0; s < k; ++s) {
        const FamilyGraph g = gen_generalized_kneser(n, k, s);
        const Digraph d = orient_min_rule(g);
        CHECK(d.arc_count() == g.edge_count());
        CHECK(is_topo_order(is_acyclic(d)));
        for (auto [u, v] : d.arcs()) {
          // arcs go from the lexicographically smaller sorted element list
          CHECK(g.labels()[u].elements() < g.labels()[v].elements());
        }
      }
}

TEST_CASE("sum rule") {
  // {1,4} ~ {2,3} in KG(4,2,0), both sums 5
  CHECK_THROWS_AS(orient_sum_rule(gen_generalized_kneser(4, 2, 0)), parameter_error);
  for (int n = 2; n <= 9; ++n) {
    const Digraph d = orient_sum_rule(gen_johnson(n, 1));
    CHECK(is_topo_order(is_acyclic(d)));
    for (auto [u, v] : d.arcs()) CHECK(u < v);
  }
  // Johnson neighbors differ in one swapped element, so sums never tie
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; k <= n; ++k) {
      const FamilyGraph g = gen_johnson(n, k);
      const Digraph d = orient_sum_rule(g);
      CHECK(is_topo_order(is_acyclic(d)));
      for (auto [u, v] : d.arcs()) CHECK(g.labels()[u].element_sum() < g.labels()[v].element_sum());
    }
  CHECK_THROWS_AS(orient_min_rule(FamilyGraph(2, {{0, 1}})), parameter_error);
}

TEST_CASE("fixed-core embedding with s = 0 is the identity") {
  const CoreEmbedding e = embed_fixed_core(6, 2, 0);
  const FamilyGraph g = gen_generalized_kneser(6, 2, 0);
  CHECK(e.core_graph.vertex_count() == g.vertex_count());
  CHECK(e.core_graph.edges() == g.edges());
  for (std::size_t v = 0; v < e.image.size(); ++v) CHECK(e.image[v] == g.labels()[v]);
  CHECK_FALSE(verify_core_isomorphism(e, g).has_value());
}

TEST_CASE("fixed-core embedding of (6,3,1) is the Petersen graph") {
  const CoreEmbedding e = embed_fixed_core(6, 3, 1, initial_segment(1, 6));
  CHECK(e.core_graph.vertex_count() == 10);
  CHECK(e.core_graph.edge_count() == 15);
  CHECK_FALSE(verify_core_isomorphism(e, gen_generalized_kneser(5, 2, 0)).has_value());
  // every label contains 1
  for (const KSubset& a : e.core_graph.labels()) CHECK(a.contains(1));
}

TEST_CASE("fixed-core embedding with a non-initial core") {
  const KSubset core = KSubset::from_elements({2, 5}, 7);
  const CoreEmbedding e = embed_fixed_core(7, 3, 2, core);
  CHECK(e.core_graph.vertex_count() == 5);
  CHECK(e.image[0].elements() == std::vector<int>{1});  // {1,2,5} minus core
  CHECK(e.image[2].elements() == std::vector<int>{3});  // {2,4,5} -> 4 is the 3rd remaining element
  CHECK_FALSE(verify_core_isomorphism(e, gen_generalized_kneser(5, 1, 0)).has_value());
  CHECK_THROWS_AS(embed_fixed_core(7, 3, 2, KSubset::from_elements({2}, 7)), parameter_error);
}

TEST_CASE("verify_core_isomorphism reports a wrong target") {
  const CoreEmbedding e = embed_fixed_core(6, 3, 1);
  const auto failure = verify_core_isomorphism(e, gen_generalized_kneser(5, 2, 1));
  REQUIRE(failure.has_value());
  CHECK(failure->u != failure->v);
  CHECK_FALSE(failure->adjacent_in_core);
  CHECK(verify_core_isomorphism(e, gen_generalized_kneser(6, 2, 0)).has_value());
}

TEST_CASE("property: the core embedding is an isomorphism onto KG(n-s,k-s)") {
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= std::min(n, 4); ++k)
      for (int s = 0; s < k; ++s) {
        const CoreEmbedding e = embed_fixed_core(n, k, s);
        CHECK_FALSE(verify_core_isomorphism(e, gen_generalized_kneser(n - s, k - s, 0)).has_value());
      }
}
