#pragma once

// Word-sized adjacency for digraphs with at most 64 vertices.

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro::detail {

using word = std::uint64_t;

inline word bit(unsigned v) { return word{1} << v; }

struct BitDigraph {
  unsigned n = 0;
  std::array<word, 64> out{};
  std::array<word, 64> in{};

  explicit BitDigraph(const Digraph& d) : n(static_cast<unsigned>(d.vertex_count())) {
    for (auto [u, v] : d.arcs()) {
      out[u] |= bit(v);
      in[v] |= bit(u);
    }
  }

  // Vertices of `within` reachable from `seeds` along arcs inside `within`.
  word forward_closure(word seeds, word within) const { return closure(out, seeds & within, within); }
  word backward_closure(word seeds, word within) const { return closure(in, seeds & within, within); }

  // Adding v to the acyclic set `members` keeps it acyclic.
  bool insertable(unsigned v, word members) const {
    return (forward_closure(out[v], members) & in[v]) == 0;
  }

  bool acyclic(word members) const {
    // Peel sources until nothing is left or every remaining vertex has an in-arc.
    word left = members;
    bool changed = true;
    while (left && changed) {
      changed = false;
      for (word m = left; m; m &= m - 1) {
        const unsigned v = static_cast<unsigned>(std::countr_zero(m));
        if ((in[v] & left) == 0) {
          left &= ~bit(v);
          changed = true;
        }
      }
    }
    return left == 0;
  }

 private:
  static word closure(const std::array<word, 64>& rows, word reach, word within) {
    word frontier = reach;
    while (frontier) {
      const unsigned u = static_cast<unsigned>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      const word fresh = rows[u] & within & ~reach;
      reach |= fresh;
      frontier |= fresh;
    }
    return reach;
  }
};

// Maximum clique of the undirected graph given by symmetric rows (n <= 64).
inline int max_clique(const std::array<word, 64>& adj, word candidates, int best_so_far = 0) {
  struct Search {
    const std::array<word, 64>& adj;
    int best;
    void run(word cand, int size) {
      if (cand == 0) {
        if (size > best) best = size;
        return;
      }
      while (cand) {
        if (size + std::popcount(cand) <= best) return;
        const unsigned v = static_cast<unsigned>(std::countr_zero(cand));
        cand &= cand - 1;
        run(cand & adj[v], size + 1);
      }
    }
  } search{adj, best_so_far};
  search.run(candidates, 0);
  return search.best;
}

// Removal order of repeated minimum-degree deletion (ties: smaller id),
// reversed so the last-removed (densest core) vertices come first.
inline std::vector<unsigned> descending_degeneracy_order(const std::vector<std::vector<vertex_id>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = adj[v].size();
  std::vector<bool> removed(n, false);
  std::vector<unsigned> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (pick == n || degree[v] < degree[pick])) pick = v;
    }
    removed[pick] = true;
    order.push_back(static_cast<unsigned>(pick));
    for (vertex_id w : adj[pick])
      if (!removed[w]) --degree[w];
  }
  return {order.rbegin(), order.rend()};
}

}  // namespace dichro::detail
