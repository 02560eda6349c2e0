#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dichro/digraph.hpp"
#include "dichro/setfam.hpp"

namespace dichro {

enum class Family { generalized_kneser, johnson };

struct FamilySpec {
  Family family = Family::generalized_kneser;
  int n = 0;
  int k = 0;
  int s = 0;  // ignored for johnson
};

inline constexpr std::size_t default_vertex_cap = 10000;

// KG(n,k,s): k-subsets of [n], A ~ B iff A != B and |A & B| <= s.
// Requires 0 <= s <= k <= n; s < k <= n/2 is a theorem hypothesis, not checked here.
FamilyGraph gen_generalized_kneser(int n, int k, int s, std::size_t vertex_cap = default_vertex_cap);

// J(n,k): k-subsets of [n], A ~ B iff |A & B| = k-1.
FamilyGraph gen_johnson(int n, int k, std::size_t vertex_cap = default_vertex_cap);

FamilyGraph generate(const FamilySpec& spec, std::size_t vertex_cap = default_vertex_cap);

// A -> B iff min(A \ B) < min(B \ A). Needs labels.
Digraph orient_min_rule(const FamilyGraph& g);

// Arc from the endpoint with the smaller element sum. Equal sums on an edge
// throw parameter_error.
Digraph orient_sum_rule(const FamilyGraph& g);

// Subgraph of KG(n,k,s) induced on the k-sets containing the s-set `core`,
// together with the map A -> A \ core, written over the relabeled ground
// set [n-s] (the elements of [n] \ core in increasing order).
struct CoreEmbedding {
  FamilyGraph core_graph;
  std::vector<KSubset> image;  // image[v] is phi(label of v), a (k-s)-subset of [n-s]
};

// `core` defaults to {1, ..., s} (empty when s = 0).
CoreEmbedding embed_fixed_core(int n, int k, int s, std::optional<KSubset> core = std::nullopt);

// {1, ..., s}; only valid for s >= 1.
KSubset initial_segment(int s, int n);

struct IsomorphismFailure {
  vertex_id u = 0;
  vertex_id v = 0;
  bool adjacent_in_core = false;  // the images disagree on this pair
};

// Checks that phi is a bijection onto V(target) (colex ids) preserving
// adjacency and non-adjacency. Returns the first offending pair, if any; a
// non-bijective image reports u == v.
std::optional<IsomorphismFailure> verify_core_isomorphism(const CoreEmbedding& embedding,
                                                          const FamilyGraph& target);

}  // namespace dichro
