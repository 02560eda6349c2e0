#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "dichro/setfam.hpp"

namespace dichro {

using vertex_id = std::uint32_t;
using Edge = std::pair<vertex_id, vertex_id>;

// Undirected loop-free simple graph, optionally labeled by k-subsets.
// Edges are stored once as (u, v) with u < v, sorted; the position of an
// edge in edges() is its bit in an orientation mask.
class FamilyGraph {
 public:
  FamilyGraph() = default;
  FamilyGraph(std::size_t n_vertices, std::vector<Edge> edges, std::vector<KSubset> labels = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const vertex_id> neighbors(vertex_id v) const { return adjacency_[v]; }
  bool adjacent(vertex_id u, vertex_id v) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<KSubset>& labels() const { return labels_; }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<vertex_id>> adjacency_;
  std::vector<KSubset> labels_;
};

// Loop-free digraph with at most one arc per ordered pair (digons allowed).
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t n_vertices, std::vector<Edge> arcs, std::vector<KSubset> labels = {});

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  // Sorted lexicographically.
  const std::vector<Edge>& arcs() const { return arcs_; }
  std::span<const vertex_id> out_neighbors(vertex_id v) const { return out_[v]; }
  std::span<const vertex_id> in_neighbors(vertex_id v) const { return in_[v]; }
  bool has_arc(vertex_id u, vertex_id v) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<KSubset>& labels() const { return labels_; }

  Digraph reversed() const;
  // Symmetrization: {u,v} is an edge iff u->v or v->u.
  FamilyGraph underlying() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_.size() == b.out_.size() && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<Edge> arcs_;
  std::vector<std::vector<vertex_id>> out_;
  std::vector<std::vector<vertex_id>> in_;
  std::vector<KSubset> labels_;
};

struct TopoOrder {
  std::vector<vertex_id> order;
};

// v1 -> v2 -> ... -> vt -> v1, rotated so the smallest id comes first.
struct DirectedCycle {
  std::vector<vertex_id> vertices;
};

using AcyclicityCertificate = std::variant<TopoOrder, DirectedCycle>;

inline bool is_topo_order(const AcyclicityCertificate& c) { return std::holds_alternative<TopoOrder>(c); }

AcyclicityCertificate is_acyclic(const Digraph& d);

// Independent O(V+E) check of either certificate kind against d.
bool check_certificate(const Digraph& d, const AcyclicityCertificate& cert);

struct InducedDigraph {
  Digraph digraph;
  std::vector<vertex_id> original;  // new id -> old id
};

// Vertices of `subset` are renumbered in ascending id order.
InducedDigraph induced_subdigraph(const Digraph& d, std::span<const vertex_id> subset);

struct InducedGraph {
  FamilyGraph graph;
  std::vector<vertex_id> original;
};

InducedGraph induced_subgraph(const FamilyGraph& g, std::span<const vertex_id> subset);

inline constexpr std::size_t default_product_cap = 4096;

// Categorical (tensor) product; vertex (u1, u2) has id u1 * |V2| + u2.
Digraph categorical_product(const Digraph& d1, const Digraph& d2,
                            std::size_t vertex_cap = default_product_cap);

// Undirected categorical product: (u1,u2) ~ (v1,v2) iff u1 ~ v1 and u2 ~ v2.
FamilyGraph categorical_product(const FamilyGraph& g1, const FamilyGraph& g2,
                                std::size_t vertex_cap = default_product_cap);

inline constexpr std::size_t default_orientation_cap = 24;

// Orientation with index `mask`: bit i of the mask reverses edge i, so
// mask 0 sends every edge from its smaller to its larger id. The reverse of
// orientation m is orientation ~m.
Digraph orientation(const FamilyGraph& g, std::uint64_t mask);

// All 2^|E| orientations of a graph, indexed by edge-direction mask.
// Disjoint index ranges can be consumed independently.
class OrientationRange {
 public:
  explicit OrientationRange(const FamilyGraph& g, std::size_t edge_cap = default_orientation_cap);

  std::uint64_t size() const { return std::uint64_t{1} << graph_->edge_count(); }
  Digraph operator[](std::uint64_t mask) const { return orientation(*graph_, mask); }

  class iterator {
   public:
    using value_type = Digraph;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const FamilyGraph* g, std::uint64_t mask) : graph_(g), mask_(mask) {}
    Digraph operator*() const { return orientation(*graph_, mask_); }
    std::uint64_t index() const { return mask_; }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++mask_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    const FamilyGraph* graph_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {graph_, 0}; }
  iterator end() const { return {graph_, size()}; }

 private:
  const FamilyGraph* graph_;
};

inline OrientationRange orientations_iter(const FamilyGraph& g,
                                          std::size_t edge_cap = default_orientation_cap) {
  return OrientationRange(g, edge_cap);
}

// Fair coin per edge from a seeded mt19937_64.
Digraph random_orientation(const FamilyGraph& g, std::uint64_t seed);

// Each ordered pair (u, v), u != v, becomes an arc with probability `density`.
Digraph random_digraph(std::size_t n_vertices, double density, std::uint64_t seed);

// Quadratic-residue tournament on Z_p: u->v iff v-u is a nonzero square mod p.
// p must be a prime with p = 3 mod 4, so exactly one of v-u, u-v is a square.
Digraph paley_tournament(std::size_t p);

}  // namespace dichro
