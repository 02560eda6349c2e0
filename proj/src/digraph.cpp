#include "dichro/digraph.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "dichro/errors.hpp"

namespace dichro {

namespace {

void check_vertex(vertex_id v, std::size_t n) {
  if (v >= n) throw parameter_error("vertex id " + std::to_string(v) + " out of range");
}

void check_labels(const std::vector<KSubset>& labels, std::size_t n) {
  if (!labels.empty() && labels.size() != n) throw parameter_error("label count does not match vertex count");
}

// Uniform double in [0, 1) from the top 53 bits; portable across standard libraries.
double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

FamilyGraph::FamilyGraph(std::size_t n_vertices, std::vector<Edge> edges, std::vector<KSubset> labels)
    : adjacency_(n_vertices), labels_(std::move(labels)) {
  check_labels(labels_, n_vertices);
  for (auto& [u, v] : edges) {
    check_vertex(u, n_vertices);
    check_vertex(v, n_vertices);
    if (u == v) throw parameter_error("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw parameter_error("duplicate edge");
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool FamilyGraph::adjacent(vertex_id u, vertex_id v) const {
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

Digraph::Digraph(std::size_t n_vertices, std::vector<Edge> arcs, std::vector<KSubset> labels)
    : out_(n_vertices), in_(n_vertices), labels_(std::move(labels)) {
  check_labels(labels_, n_vertices);
  for (auto [u, v] : arcs) {
    check_vertex(u, n_vertices);
    check_vertex(v, n_vertices);
    if (u == v) throw parameter_error("self-loop at vertex " + std::to_string(u));
  }
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) throw parameter_error("duplicate arc");
  arcs_ = std::move(arcs);
  for (auto [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& row : in_) std::sort(row.begin(), row.end());
}

bool Digraph::has_arc(vertex_id u, vertex_id v) const {
  const auto& row = out_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

Digraph Digraph::reversed() const {
  std::vector<Edge> arcs;
  arcs.reserve(arcs_.size());
  for (auto [u, v] : arcs_) arcs.emplace_back(v, u);
  return Digraph(vertex_count(), std::move(arcs), labels_);
}

FamilyGraph Digraph::underlying() const {
  std::vector<Edge> edges;
  edges.reserve(arcs_.size());
  for (auto [u, v] : arcs_) {
    if (u < v || !has_arc(v, u)) edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return FamilyGraph(vertex_count(), std::move(edges), labels_);
}

AcyclicityCertificate is_acyclic(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  enum : std::uint8_t { white, gray, black };
  std::vector<std::uint8_t> state(n, white);
  std::vector<vertex_id> postorder;
  postorder.reserve(n);
  // (vertex, next out-neighbor position)
  std::vector<std::pair<vertex_id, std::size_t>> stack;

  // Roots in descending order so an arcless digraph yields 0, 1, ..., n-1.
  for (std::size_t r = n; r-- > 0;) {
    if (state[r] != white) continue;
    stack.emplace_back(static_cast<vertex_id>(r), 0);
    state[r] = gray;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      const auto out = d.out_neighbors(v);
      if (pos == out.size()) {
        state[v] = black;
        postorder.push_back(v);
        stack.pop_back();
        continue;
      }
      const vertex_id w = out[pos++];
      if (state[w] == white) {
        state[w] = gray;
        stack.emplace_back(w, 0);
      } else if (state[w] == gray) {
        DirectedCycle cycle;
        auto it = std::find_if(stack.begin(), stack.end(), [w](const auto& e) { return e.first == w; });
        for (; it != stack.end(); ++it) cycle.vertices.push_back(it->first);
        std::rotate(cycle.vertices.begin(),
                    std::min_element(cycle.vertices.begin(), cycle.vertices.end()), cycle.vertices.end());
        return cycle;
      }
    }
  }
  std::reverse(postorder.begin(), postorder.end());
  return TopoOrder{std::move(postorder)};
}

bool check_certificate(const Digraph& d, const AcyclicityCertificate& cert) {
  const std::size_t n = d.vertex_count();
  if (const auto* topo = std::get_if<TopoOrder>(&cert)) {
    if (topo->order.size() != n) return false;
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const vertex_id v = topo->order[i];
      if (v >= n || position[v] != n) return false;
      position[v] = i;
    }
    return std::all_of(d.arcs().begin(), d.arcs().end(),
                       [&](const Edge& a) { return position[a.first] < position[a.second]; });
  }
  const auto& cycle = std::get<DirectedCycle>(cert).vertices;
  if (cycle.size() < 2) return false;
  for (vertex_id v : cycle)
    if (v >= n) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!d.has_arc(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

namespace {

std::vector<vertex_id> sorted_subset(std::span<const vertex_id> subset, std::size_t n,
                                     std::vector<vertex_id>& new_id) {
  std::vector<vertex_id> original(subset.begin(), subset.end());
  std::sort(original.begin(), original.end());
  original.erase(std::unique(original.begin(), original.end()), original.end());
  constexpr vertex_id absent = ~vertex_id{0};
  new_id.assign(n, absent);
  for (std::size_t i = 0; i < original.size(); ++i) {
    check_vertex(original[i], n);
    new_id[original[i]] = static_cast<vertex_id>(i);
  }
  return original;
}

template <class Labels>
std::vector<KSubset> pick_labels(const Labels& labels, const std::vector<vertex_id>& original) {
  std::vector<KSubset> out;
  if (labels.empty()) return out;
  out.reserve(original.size());
  for (vertex_id v : original) out.push_back(labels[v]);
  return out;
}

}  // namespace

InducedDigraph induced_subdigraph(const Digraph& d, std::span<const vertex_id> subset) {
  std::vector<vertex_id> new_id;
  auto original = sorted_subset(subset, d.vertex_count(), new_id);
  constexpr vertex_id absent = ~vertex_id{0};
  std::vector<Edge> arcs;
  for (auto [u, v] : d.arcs()) {
    if (new_id[u] != absent && new_id[v] != absent) arcs.emplace_back(new_id[u], new_id[v]);
  }
  auto labels = pick_labels(d.labels(), original);
  return {Digraph(original.size(), std::move(arcs), std::move(labels)), std::move(original)};
}

InducedGraph induced_subgraph(const FamilyGraph& g, std::span<const vertex_id> subset) {
  std::vector<vertex_id> new_id;
  auto original = sorted_subset(subset, g.vertex_count(), new_id);
  constexpr vertex_id absent = ~vertex_id{0};
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (new_id[u] != absent && new_id[v] != absent) edges.emplace_back(new_id[u], new_id[v]);
  }
  auto labels = pick_labels(g.labels(), original);
  return {FamilyGraph(original.size(), std::move(edges), std::move(labels)), std::move(original)};
}

Digraph categorical_product(const Digraph& d1, const Digraph& d2, std::size_t vertex_cap) {
  const std::size_t n1 = d1.vertex_count(), n2 = d2.vertex_count();
  if (n2 != 0 && n1 > vertex_cap / n2)
    throw cap_exceeded("product has " + std::to_string(n1 * n2) + " vertices, cap is " +
                       std::to_string(vertex_cap));
  std::vector<Edge> arcs;
  arcs.reserve(d1.arc_count() * d2.arc_count());
  for (auto [u1, v1] : d1.arcs()) {
    for (auto [u2, v2] : d2.arcs()) {
      arcs.emplace_back(static_cast<vertex_id>(u1 * n2 + u2), static_cast<vertex_id>(v1 * n2 + v2));
    }
  }
  return Digraph(n1 * n2, std::move(arcs));
}

FamilyGraph categorical_product(const FamilyGraph& g1, const FamilyGraph& g2, std::size_t vertex_cap) {
  const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
  if (n2 != 0 && n1 > vertex_cap / n2)
    throw cap_exceeded("product has " + std::to_string(n1 * n2) + " vertices, cap is " +
                       std::to_string(vertex_cap));
  std::vector<Edge> edges;
  edges.reserve(2 * g1.edge_count() * g2.edge_count());
  for (auto [u1, v1] : g1.edges()) {
    for (auto [u2, v2] : g2.edges()) {
      edges.emplace_back(static_cast<vertex_id>(u1 * n2 + u2), static_cast<vertex_id>(v1 * n2 + v2));
      edges.emplace_back(static_cast<vertex_id>(u1 * n2 + v2), static_cast<vertex_id>(v1 * n2 + u2));
    }
  }
  return FamilyGraph(n1 * n2, std::move(edges));
}

Digraph orientation(const FamilyGraph& g, std::uint64_t mask) {
  std::vector<Edge> arcs;
  arcs.reserve(g.edge_count());
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const bool flip = i < 64 && ((mask >> i) & 1U);
    arcs.push_back(flip ? Edge{edges[i].second, edges[i].first} : edges[i]);
  }
  return Digraph(g.vertex_count(), std::move(arcs), g.labels());
}

OrientationRange::OrientationRange(const FamilyGraph& g, std::size_t edge_cap) : graph_(&g) {
  if (g.edge_count() > edge_cap || g.edge_count() >= 64)
    throw cap_exceeded("graph has " + std::to_string(g.edge_count()) + " edges, orientation cap is " +
                       std::to_string(edge_cap));
}

Digraph random_orientation(const FamilyGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> arcs;
  arcs.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    if (rng() >> 63) arcs.emplace_back(v, u);
    else arcs.emplace_back(u, v);
  }
  return Digraph(g.vertex_count(), std::move(arcs), g.labels());
}

Digraph random_digraph(std::size_t n_vertices, double density, std::uint64_t seed) {
  if (density < 0.0 || density > 1.0) throw parameter_error("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> arcs;
  for (vertex_id u = 0; u < n_vertices; ++u) {
    for (vertex_id v = 0; v < n_vertices; ++v) {
      if (u != v && unit_interval(rng) < density) arcs.emplace_back(u, v);
    }
  }
  return Digraph(n_vertices, std::move(arcs));
}

Digraph paley_tournament(std::size_t p) {
  bool prime = p >= 3;
  for (std::size_t q = 2; prime && q * q <= p; ++q) prime = p % q != 0;
  if (!prime || p % 4 != 3) throw parameter_error("paley order must be a prime congruent to 3 mod 4");
  if (p > 4096) throw cap_exceeded("paley order above 4096");
  std::vector<bool> square(p, false);
  for (std::size_t x = 1; x < p; ++x) square[x * x % p] = true;
  std::vector<Edge> arcs;
  for (vertex_id u = 0; u < p; ++u) {
    for (vertex_id v = 0; v < p; ++v) {
      if (u != v && square[(v + p - u) % p]) arcs.emplace_back(u, v);
    }
  }
  return Digraph(p, std::move(arcs));
}

}  // namespace dichro
