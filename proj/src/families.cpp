#include "dichro/families.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dichro/errors.hpp"

namespace dichro {

namespace {

std::vector<KSubset> capped_vertices(int n, int k, std::size_t vertex_cap) {
  if (k < 1 || k > n || n > max_ground_size) throw parameter_error("need 1 <= k <= n <= 64");
  const std::uint64_t count = binomial(n, k);
  if (count > vertex_cap)
    throw cap_exceeded("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(count) +
                       " vertices exceeds cap " + std::to_string(vertex_cap));
  return enumerate_ksubsets(n, k);
}

template <class Adjacent>
FamilyGraph pairwise_graph(std::vector<KSubset> vertices, Adjacent adjacent) {
  std::vector<Edge> edges;
  for (vertex_id u = 0; u < vertices.size(); ++u) {
    for (vertex_id v = u + 1; v < vertices.size(); ++v) {
      if (adjacent(std::popcount(vertices[u].mask() & vertices[v].mask()))) edges.emplace_back(u, v);
    }
  }
  const std::size_t n = vertices.size();
  return FamilyGraph(n, std::move(edges), std::move(vertices));
}

void require_labels(const FamilyGraph& g) {
  if (!g.has_labels()) throw parameter_error("orientation rule needs k-subset labels");
}

}  // namespace

FamilyGraph gen_generalized_kneser(int n, int k, int s, std::size_t vertex_cap) {
  if (s < 0 || s > k) throw parameter_error("need 0 <= s <= k, got s=" + std::to_string(s));
  return pairwise_graph(capped_vertices(n, k, vertex_cap), [s](int common) { return common <= s; });
}

FamilyGraph gen_johnson(int n, int k, std::size_t vertex_cap) {
  return pairwise_graph(capped_vertices(n, k, vertex_cap), [k](int common) { return common == k - 1; });
}

FamilyGraph generate(const FamilySpec& spec, std::size_t vertex_cap) {
  return spec.family == Family::johnson ? gen_johnson(spec.n, spec.k, vertex_cap)
                                        : gen_generalized_kneser(spec.n, spec.k, spec.s, vertex_cap);
}

Digraph orient_min_rule(const FamilyGraph& g) {
  require_labels(g);
  const auto& labels = g.labels();
  std::vector<Edge> arcs;
  arcs.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    if (min_diff_element(labels[u], labels[v]).second == Side::in_a) arcs.emplace_back(u, v);
    else arcs.emplace_back(v, u);
  }
  return Digraph(g.vertex_count(), std::move(arcs), labels);
}

Digraph orient_sum_rule(const FamilyGraph& g) {
  require_labels(g);
  const auto& labels = g.labels();
  std::vector<Edge> arcs;
  arcs.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    const int su = labels[u].element_sum(), sv = labels[v].element_sum();
    if (su == sv)
      throw parameter_error("sum rule undefined on edge " + labels[u].to_string() + " - " +
                            labels[v].to_string() + " (equal sums " + std::to_string(su) + ")");
    if (su < sv) arcs.emplace_back(u, v);
    else arcs.emplace_back(v, u);
  }
  return Digraph(g.vertex_count(), std::move(arcs), labels);
}

KSubset initial_segment(int s, int n) {
  if (s < 1 || s > n) throw parameter_error("initial segment needs 1 <= s <= n");
  return KSubset(s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1, n);
}

namespace {

// Drops the bits of `core` from `mask`, shifting the remaining bits down.
std::uint64_t squeeze(std::uint64_t mask, std::uint64_t core) {
  std::uint64_t out = 0;
  int position = 0;
  for (int bit = 0; bit < 64; ++bit) {
    if ((core >> bit) & 1U) continue;
    if ((mask >> bit) & 1U) out |= std::uint64_t{1} << position;
    ++position;
  }
  return out;
}

// Inverse of squeeze: spreads the bits of `small` over the positions outside `core`.
std::uint64_t spread(std::uint64_t small, std::uint64_t core, int n) {
  std::uint64_t out = 0;
  int position = 0;
  for (int bit = 0; bit < n; ++bit) {
    if ((core >> bit) & 1U) continue;
    if ((small >> position) & 1U) out |= std::uint64_t{1} << bit;
    ++position;
  }
  return out;
}

}  // namespace

CoreEmbedding embed_fixed_core(int n, int k, int s, std::optional<KSubset> core_set) {
  if (s < 0 || s >= k) throw parameter_error("fixed-core embedding needs 0 <= s < k");
  if (k > n || n > max_ground_size) throw parameter_error("need k <= n <= 64");
  if (core_set) {
    if (core_set->n() != n) throw parameter_error("core lives over a different ground set");
    if (core_set->k() != s)
      throw parameter_error("core has size " + std::to_string(core_set->k()) + ", expected s=" +
                            std::to_string(s));
  }
  const std::uint64_t core = core_set ? core_set->mask() : (s == 0 ? 0 : initial_segment(s, n).mask());

  // k-sets containing the core, in colex order of the full sets.
  std::vector<KSubset> labels;
  std::vector<KSubset> image;
  for (const KSubset& rest : enumerate_ksubsets(n - s, k - s)) {
    labels.emplace_back(spread(rest.mask(), core, n) | core, n);
  }
  std::sort(labels.begin(), labels.end());
  image.reserve(labels.size());
  for (const KSubset& a : labels) image.emplace_back(squeeze(a.mask(), core), n - s);

  std::vector<Edge> edges;
  for (vertex_id u = 0; u < labels.size(); ++u) {
    for (vertex_id v = u + 1; v < labels.size(); ++v) {
      if (intersection_size(labels[u], labels[v]) <= s) edges.emplace_back(u, v);
    }
  }
  const std::size_t count = labels.size();
  return {FamilyGraph(count, std::move(edges), std::move(labels)), std::move(image)};
}

std::optional<IsomorphismFailure> verify_core_isomorphism(const CoreEmbedding& embedding,
                                                          const FamilyGraph& target) {
  const FamilyGraph& h = embedding.core_graph;
  const std::size_t n = h.vertex_count();
  if (n != target.vertex_count() || embedding.image.size() != n) return IsomorphismFailure{0, 0, false};
  std::vector<vertex_id> target_id(n);
  std::vector<bool> hit(n, false);
  for (vertex_id v = 0; v < n; ++v) {
    const std::uint64_t r = rank(embedding.image[v]);
    if (r >= n || hit[r] || target.labels()[r] != embedding.image[v]) return IsomorphismFailure{v, v, false};
    hit[r] = true;
    target_id[v] = static_cast<vertex_id>(r);
  }
  for (vertex_id u = 0; u < n; ++u) {
    for (vertex_id v = u + 1; v < n; ++v) {
      const bool in_core = h.adjacent(u, v);
      if (in_core != target.adjacent(target_id[u], target_id[v])) return IsomorphismFailure{u, v, in_core};
    }
  }
  return std::nullopt;
}

}  // namespace dichro
