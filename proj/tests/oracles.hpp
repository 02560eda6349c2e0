#pragma once

// Brute-force reference computations for tests. Nothing here calls into the
// solver paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "dichro/digraph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix arc_matrix(const dichro::Digraph& d) {
  Matrix m(d.vertex_count(), std::vector<bool>(d.vertex_count(), false));
  for (auto [u, v] : d.arcs()) m[u][v] = true;
  return m;
}

// Repeatedly strips vertices with no out-arc inside the set.
inline bool acyclic(const Matrix& m, std::vector<int> members) {
  bool changed = true;
  while (!members.empty() && changed) {
    changed = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      bool sink = true;
      for (int w : members) sink = sink && !m[members[i]][w];
      if (sink) {
        members.erase(members.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return members.empty();
}

// Visits every set partition of {0..n-1} as a restricted growth string.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> block(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      visit(block, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) visit(block, 0);
  else rec(0, 0);
}

// Minimum number of acyclic blocks over all set partitions.
inline int dichromatic(const dichro::Digraph& d) {
  const Matrix m = arc_matrix(d);
  const int n = static_cast<int>(d.vertex_count());
  int best = n;
  for_each_partition(n, [&](const std::vector<int>& block, int blocks) {
    if (blocks >= best) return;
    for (int b = 0; b < blocks; ++b) {
      std::vector<int> members;
      for (int v = 0; v < n; ++v)
        if (block[v] == b) members.push_back(v);
      if (!acyclic(m, members)) return;
    }
    best = blocks;
  });
  return best;
}

inline int count_partitions(int n) {
  int count = 0;
  for_each_partition(n, [&](const std::vector<int>&, int) { ++count; });
  return count;
}

// All k-subsets of [n] as ascending element lists, by scanning every mask.
inline std::vector<std::vector<int>> ksubsets(int n, int k) {
  std::vector<std::pair<std::uint64_t, std::vector<int>>> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1U) elems.push_back(i + 1);
    if (static_cast<int>(elems.size()) == k) found.emplace_back(mask, elems);
  }
  std::vector<std::vector<int>> out;
  for (auto& f : found) out.push_back(f.second);
  return out;
}

inline int intersect(const std::vector<int>& a, const std::vector<int>& b) {
  int c = 0;
  for (int x : a) c += std::count(b.begin(), b.end(), x) > 0;
  return c;
}

// Acceptable acyclic coloring exists for these lists (plain backtracking).
inline bool list_colorable(const Matrix& m, const std::vector<std::vector<int>>& lists) {
  const int n = static_cast<int>(m.size());
  std::vector<int> pick(n, 0);
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) {
      std::vector<int> colors;
      for (int c : pick) colors.push_back(c);
      std::sort(colors.begin(), colors.end());
      colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
      for (int c : colors) {
        std::vector<int> members;
        for (int w = 0; w < n; ++w)
          if (pick[w] == c) members.push_back(w);
        if (!acyclic(m, members)) return false;
      }
      return true;
    }
    for (int c : lists[v]) {
      pick[v] = c;
      if (rec(v + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

// Every assignment of t-subsets of a palette of `palette` colors, no symmetry reduction.
inline bool list_at_most(const dichro::Digraph& d, int t, int palette) {
  const Matrix m = arc_matrix(d);
  const auto choices = ksubsets(palette, t);
  const int n = static_cast<int>(d.vertex_count());
  std::vector<std::vector<int>> lists(n);
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return list_colorable(m, lists);
    for (const auto& c : choices) {
      lists[v] = c;
      if (!rec(v + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

// Chromatic number by partition enumeration into independent blocks.
inline int chromatic(const dichro::FamilyGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  int best = n;
  for_each_partition(n, [&](const std::vector<int>& block, int blocks) {
    if (blocks >= best) return;
    for (auto [u, v] : g.edges())
      if (block[u] == block[v]) return;
    best = blocks;
  });
  return best;
}

// Maximum over all 2^|E| orientations, no symmetry reduction.
inline int max_over_orientations(const dichro::FamilyGraph& g) {
  const auto& edges = g.edges();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<dichro::Edge> arcs;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if ((mask >> i) & 1U) std::swap(u, v);
      arcs.emplace_back(u, v);
    }
    best = std::max(best, dichromatic(dichro::Digraph(g.vertex_count(), arcs)));
  }
  return best;
}

// Largest acyclic subset, by checking every subset.
inline int max_acyclic_subset(const dichro::Digraph& d) {
  const Matrix m = arc_matrix(d);
  const int n = static_cast<int>(d.vertex_count());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) members.push_back(v);
    if (static_cast<int>(members.size()) > best && acyclic(m, members)) best = static_cast<int>(members.size());
  }
  return best;
}

}  // namespace oracle
