#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "bitgraph.hpp"
#include "dichro/errors.hpp"
#include "dichro/parallel.hpp"
#include "dichro/solvers.hpp"

namespace dichro {

using detail::bit;
using detail::word;
using Clock = std::chrono::steady_clock;

void validate(const SolveBudget& budget) {
  if (budget.node_limit == 0 || !(budget.time_limit > 0.0) || budget.orientation_cap == 0 ||
      budget.sample_count == 0)
    throw parameter_error("solve budget entries must be positive");
}

namespace {

struct BudgetExhausted {};

Clock::time_point deadline_after(double seconds) {
  const auto span = std::chrono::duration<double>(std::min(seconds, 1e9));
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(span);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::vector<vertex_id>> undirected_adjacency(const Digraph& d) {
  std::vector<std::vector<vertex_id>> adj(d.vertex_count());
  const FamilyGraph g = d.underlying();
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Branch-and-bound over assignments of vertices (descending degeneracy
// order) to acyclic classes. Each class keeps a topological order that is
// repaired locally on insertion.
class AcyclicPartitionSearch {
 public:
  AcyclicPartitionSearch(const Digraph& d, std::uint64_t node_limit, Clock::time_point deadline)
      : graph_(d),
        order_(detail::descending_degeneracy_order(undirected_adjacency(d))),
        color_(graph_.n, -1),
        node_limit_(node_limit),
        deadline_(deadline) {}

  std::uint64_t nodes() const { return nodes_; }

  std::vector<int> greedy() {
    reset(static_cast<int>(graph_.n));
    for (unsigned v : order_) {
      int c = 0;
      while (c < used_ && !graph_.insertable(v, members_[c])) ++c;
      if (c == used_) ++used_;
      insert(v, c);
    }
    return color_;
  }

  // Coloring with at most `limit` classes, or nullopt. Throws BudgetExhausted.
  std::optional<std::vector<int>> find(int limit) {
    reset(limit);
    if (!place(0)) return std::nullopt;
    check_class_orders();
    return color_;
  }

 private:
  void reset(int limit) {
    limit_ = limit;
    used_ = 0;
    members_.assign(limit, 0);
    topo_.assign(limit, {});
    std::fill(color_.begin(), color_.end(), -1);
  }

  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++nodes_ > node_limit_) throw BudgetExhausted{};
    if ((nodes_ & 0xfff) == 0 && Clock::now() > deadline_) throw BudgetExhausted{};
    const unsigned v = order_[depth];
    for (int c = 0; c < used_; ++c) {
      if (!graph_.insertable(v, members_[c])) continue;
      insert(v, c);
      if (place(depth + 1)) return true;
      erase(v, c);
    }
    if (used_ < limit_) {
      ++used_;
      insert(v, used_ - 1);
      if (place(depth + 1)) return true;
      erase(v, used_ - 1);
      --used_;
    }
    return false;
  }

  void insert(unsigned v, int c) {
    const word forward = graph_.forward_closure(graph_.out[v], members_[c]);
    auto& order = topo_[c];
    order.push_back(v);
    if (forward != 0) {
      // v sits last; move its ancestors ahead of it and its descendants
      // behind it, reusing the slots the affected vertices occupied.
      const word backward = graph_.backward_closure(graph_.in[v], members_[c]);
      const word affected = forward | backward | bit(v);
      std::vector<std::size_t> slots;
      std::vector<unsigned> before, after;
      for (std::size_t i = 0; i < order.size(); ++i) {
        const unsigned w = order[i];
        if (!(affected & bit(w))) continue;
        slots.push_back(i);
        if (backward & bit(w)) before.push_back(w);
        else if (forward & bit(w)) after.push_back(w);
      }
      std::size_t s = 0;
      for (unsigned w : before) order[slots[s++]] = w;
      order[slots[s++]] = v;
      for (unsigned w : after) order[slots[s++]] = w;
    }
    members_[c] |= bit(v);
    color_[v] = c;
  }

  void erase(unsigned v, int c) {
    auto& order = topo_[c];
    order.erase(std::find(order.begin(), order.end(), v));
    members_[c] &= ~bit(v);
    color_[v] = -1;
  }

  void check_class_orders() const {
    std::vector<std::size_t> position(graph_.n);
    for (int c = 0; c < used_; ++c) {
      for (std::size_t i = 0; i < topo_[c].size(); ++i) position[topo_[c][i]] = i;
      for (unsigned u : topo_[c]) {
        for (word m = graph_.out[u] & members_[c]; m; m &= m - 1) {
          if (position[u] >= position[std::countr_zero(m)])
            throw std::logic_error("class topological order out of sync");
        }
      }
    }
  }

  detail::BitDigraph graph_;
  std::vector<unsigned> order_;
  std::vector<int> color_;
  std::vector<word> members_;
  std::vector<std::vector<unsigned>> topo_;
  int used_ = 0;
  int limit_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t node_limit_;
  Clock::time_point deadline_;
};

Coloring to_coloring(const std::vector<int>& zero_based) {
  Coloring c;
  c.colors.reserve(zero_based.size());
  for (int x : zero_based) c.colors.push_back(x + 1);
  c.palette = zero_based.empty() ? 0 : *std::max_element(c.colors.begin(), c.colors.end());
  return c;
}

// First-fit over ids with per-class acyclicity re-checked from scratch; for
// digraphs too large for word-sized state.
Coloring first_fit_large(const Digraph& d) {
  std::vector<std::vector<vertex_id>> classes;
  std::vector<int> color(d.vertex_count(), 0);
  for (vertex_id v = 0; v < d.vertex_count(); ++v) {
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      auto candidate = classes[c];
      candidate.push_back(v);
      if (is_topo_order(is_acyclic(induced_subdigraph(d, candidate).digraph))) break;
    }
    if (c == classes.size()) classes.emplace_back();
    classes[c].push_back(v);
    color[v] = static_cast<int>(c);
  }
  return to_coloring(color);
}

int digon_clique_bound(const Digraph& d) {
  std::array<word, 64> digon{};
  const detail::BitDigraph g(d);
  for (unsigned v = 0; v < g.n; ++v) digon[v] = g.out[v] & g.in[v];
  const word all = g.n == 64 ? ~word{0} : bit(g.n) - 1;
  return detail::max_clique(digon, all);
}

SolveResult solve_dichromatic(const Digraph& d, std::uint64_t node_limit, Clock::time_point deadline) {
  const auto start = Clock::now();
  SolveResult result;
  const std::size_t n = d.vertex_count();
  if (n == 0) {
    result.exact = true;
    return result;
  }
  if (is_topo_order(is_acyclic(d))) {
    result.lower = result.upper = 1;
    result.exact = true;
    result.coloring = Coloring{std::vector<int>(n, 1), 1};
    result.seconds = seconds_since(start);
    return result;
  }
  result.lower = 2;
  if (is_tournament(d)) {
    // Acyclic classes of a tournament are transitive subtournaments.
    std::vector<vertex_id> all(n);
    for (vertex_id v = 0; v < n; ++v) all[v] = v;
    if (auto chain = max_transitive_subtournament(d, all, node_limit))
      result.lower = static_cast<int>((n + chain->size() - 1) / chain->size());
  }
  if (n > max_exact_vertices) {
    result.coloring = first_fit_large(d);
    result.upper = result.coloring.palette;
    result.exact = result.upper == result.lower;
    result.seconds = seconds_since(start);
    return result;
  }
  result.lower = std::max(result.lower, digon_clique_bound(d));
  AcyclicPartitionSearch search(d, node_limit, deadline);
  result.coloring = to_coloring(search.greedy());
  result.upper = result.coloring.palette;
  try {
    while (result.upper > result.lower) {
      auto found = search.find(result.upper - 1);
      if (!found) {
        result.lower = result.upper;
        break;
      }
      result.coloring = to_coloring(*found);
      result.upper = result.coloring.palette;
    }
  } catch (const BudgetExhausted&) {
  }
  result.exact = result.lower == result.upper;
  result.nodes = search.nodes();
  result.seconds = seconds_since(start);
  return result;
}

struct OrientationOutcome {
  int lower = 0;
  int upper = 0;
  bool exact = true;
  bool full = false;  // false: only known to be <= the block threshold
  std::uint64_t nodes = 0;
};

OrientationOutcome evaluate_orientation(const Digraph& d, int threshold, std::uint64_t node_limit,
                                        Clock::time_point deadline) {
  OrientationOutcome out;
  if (threshold >= 1) {
    AcyclicPartitionSearch search(d, node_limit, deadline);
    try {
      const bool fits = search.find(threshold).has_value();
      out.nodes = search.nodes();
      if (fits) {
        out.upper = threshold;
        return out;
      }
    } catch (const BudgetExhausted&) {
      out.nodes = search.nodes();
    }
  }
  const SolveResult r = solve_dichromatic(d, node_limit, deadline);
  out.lower = r.lower;
  out.upper = r.upper;
  out.exact = r.exact;
  out.full = true;
  out.nodes += r.nodes;
  return out;
}

}  // namespace

SolveResult dichromatic_number(const Digraph& d, const SolveBudget& budget) {
  validate(budget);
  return solve_dichromatic(d, budget.node_limit, deadline_after(budget.time_limit));
}

std::optional<Coloring> acyclic_coloring_within(const Digraph& d, int colors, const SolveBudget& budget,
                                                bool* aborted, std::uint64_t* nodes) {
  validate(budget);
  if (d.vertex_count() > max_exact_vertices)
    throw cap_exceeded("exact acyclic coloring supports at most 64 vertices");
  if (aborted) *aborted = false;
  if (colors < 1) {
    if (d.vertex_count() == 0) return Coloring{};
    return std::nullopt;
  }
  AcyclicPartitionSearch search(d, budget.node_limit, deadline_after(budget.time_limit));
  std::optional<Coloring> out;
  try {
    if (auto found = search.find(colors)) out = to_coloring(*found);
  } catch (const BudgetExhausted&) {
    if (aborted) *aborted = true;
  }
  if (nodes) *nodes = search.nodes();
  return out;
}

namespace {

// Throws unless d orients every edge of g exactly once.
void require_orientation(const FamilyGraph& g, const Digraph& d) {
  bool ok = d.vertex_count() == g.vertex_count() && d.arc_count() == g.edge_count();
  for (std::size_t i = 0; ok && i < g.edges().size(); ++i) {
    const auto [u, v] = g.edges()[i];
    ok = d.has_arc(u, v) != d.has_arc(v, u);
  }
  if (!ok) throw parameter_error("digraph is not an orientation of the graph");
}

}  // namespace

std::uint64_t orientation_mask(const FamilyGraph& g, const Digraph& d) {
  require_orientation(g, d);
  if (g.edge_count() > 64) throw cap_exceeded("orientation masks cover at most 64 edges");
  std::uint64_t mask = 0;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (d.has_arc(edges[i].second, edges[i].first)) mask |= std::uint64_t{1} << i;
  return mask;
}

SolveResult dichromatic_number_graph(const FamilyGraph& g, OrientationMode mode, const SolveBudget& budget,
                                     std::span<const Digraph> witnesses) {
  validate(budget);
  const auto start = Clock::now();
  const auto deadline = deadline_after(budget.time_limit);
  const std::size_t m = g.edge_count();
  if (mode == OrientationMode::exhaustive && (m > budget.orientation_cap || m >= 64))
    throw cap_exceeded("graph has " + std::to_string(m) + " edges, orientation cap is " +
                       std::to_string(budget.orientation_cap));

  SolveResult result;
  if (g.vertex_count() == 0) {
    result.exact = true;
    return result;
  }
  // Every proper coloring is acyclic under every orientation.
  const SolveResult chromatic = chromatic_number(g, budget);
  const int ceiling = chromatic.upper;
  result.nodes = chromatic.nodes;

  int best_lower = 1;
  int best_upper = 1;
  std::optional<std::uint64_t> witness = 0;
  std::optional<Digraph> witness_digraph;
  bool covered_all = true;

  if (mode == OrientationMode::exhaustive) {
    // An orientation and its reverse (mask complement) share a value, so
    // masks with the top edge unflipped suffice.
    const std::uint64_t count = m == 0 ? 1 : std::uint64_t{1} << (m - 1);
    constexpr std::uint64_t block = 2048;
    for (std::uint64_t first = 0; first < count; first += block) {
      if (best_lower >= ceiling) {
        covered_all = false;
        break;
      }
      if (Clock::now() > deadline) {
        covered_all = false;
        break;
      }
      const std::uint64_t size = std::min(block, count - first);
      const int threshold = best_lower;
      std::vector<OrientationOutcome> outcomes(size);
      parallel_for(size, budget.threads, [&](std::uint64_t i) {
        outcomes[i] = evaluate_orientation(orientation(g, first + i), threshold, budget.node_limit, deadline);
      });
      for (std::uint64_t i = 0; i < size; ++i) {
        const auto& o = outcomes[i];
        result.nodes += o.nodes;
        best_upper = std::max(best_upper, o.upper);
        if (!o.full) continue;
        if (o.lower > best_lower) {
          best_lower = o.lower;
          witness = first + i;
        }
      }
    }
    witness_digraph = orientation(g, *witness);
  } else {
    std::vector<Digraph> pool;
    pool.reserve(budget.sample_count + witnesses.size());
    for (std::uint64_t i = 0; i < budget.sample_count; ++i) pool.push_back(random_orientation(g, budget.seed + i));
    for (const Digraph& w : witnesses) {
      require_orientation(g, w);
      pool.push_back(w);
    }
    std::vector<SolveResult> solved(pool.size());
    parallel_for(pool.size(), budget.threads,
                 [&](std::uint64_t i) { solved[i] = solve_dichromatic(pool[i], budget.node_limit, deadline); });
    std::size_t pick = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      result.nodes += solved[i].nodes;
      if (solved[i].lower > best_lower) {
        best_lower = solved[i].lower;
        pick = i;
      }
    }
    witness_digraph = pool[pick];
    witness = m <= 64 ? std::optional(orientation_mask(g, pool[pick])) : std::nullopt;
    covered_all = false;
  }

  const SolveResult on_witness = solve_dichromatic(*witness_digraph, budget.node_limit, deadline);
  result.nodes += on_witness.nodes;
  result.coloring = on_witness.coloring;
  result.lower = best_lower;
  result.upper = covered_all ? std::max(best_upper, best_lower) : std::max(ceiling, best_lower);
  result.exact = mode == OrientationMode::exhaustive && result.lower == result.upper;
  result.witness_orientation_mask = witness;
  result.witness = std::move(witness_digraph);
  result.seconds = seconds_since(start);
  return result;
}

}  // namespace dichro
