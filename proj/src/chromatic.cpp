#include <algorithm>
#include <chrono>
#include <numeric>

#include "bitgraph.hpp"
#include "dichro/solvers.hpp"

namespace dichro {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExhausted {};

int greedy_clique(const FamilyGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 64) {
    std::array<detail::word, 64> adj{};
    for (auto [u, v] : g.edges()) {
      adj[u] |= detail::bit(v);
      adj[v] |= detail::bit(u);
    }
    return detail::max_clique(adj, n == 64 ? ~detail::word{0} : detail::bit(static_cast<unsigned>(n)) - 1);
  }
  int best = n > 0 ? 1 : 0;
  for (vertex_id start = 0; start < n; ++start) {
    std::vector<vertex_id> clique{start};
    for (vertex_id w : g.neighbors(start)) {
      if (std::all_of(clique.begin(), clique.end(), [&](vertex_id c) { return g.adjacent(c, w); }))
        clique.push_back(w);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

// Exact coloring by DSATUR branching: pick the uncolored vertex seeing the
// most distinct colors (ties: more uncolored neighbors, then smaller id).
class Dsatur {
 public:
  Dsatur(const FamilyGraph& g, std::uint64_t node_limit, Clock::time_point deadline)
      : g_(g), n_(g.vertex_count()), node_limit_(node_limit), deadline_(deadline) {}

  std::uint64_t nodes() const { return nodes_; }

  // Heuristic DSATUR run: a first upper bound.
  std::vector<int> heuristic() {
    std::size_t max_degree = 0;
    for (vertex_id v = 0; v < n_; ++v) max_degree = std::max(max_degree, g_.neighbors(v).size());
    setup(static_cast<int>(max_degree) + 1);
    for (std::size_t step = 0; step < n_; ++step) {
      const vertex_id v = select();
      int c = 0;
      while (seen_[v * width_ + c] != 0) ++c;
      assign(v, c);
    }
    return color_;
  }

  // Improves on `best_colors` until it meets `lower`; throws BudgetExhausted.
  void improve(std::vector<int>& best, int& best_count, int lower) {
    setup(best_count);
    best_ = &best;
    best_count_ = &best_count;
    lower_ = lower;
    search(0, 0);
  }

 private:
  void setup(int width) {
    width_ = static_cast<std::size_t>(std::max(width, 1));
    color_.assign(n_, -1);
    seen_.assign(n_ * width_, 0);
    saturation_.assign(n_, 0);
    free_degree_.resize(n_);
    for (vertex_id v = 0; v < n_; ++v) free_degree_[v] = static_cast<int>(g_.neighbors(v).size());
  }

  vertex_id select() const {
    vertex_id pick = 0;
    bool have = false;
    for (vertex_id v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      if (!have || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] && free_degree_[v] > free_degree_[pick])) {
        pick = v;
        have = true;
      }
    }
    return pick;
  }

  void assign(vertex_id v, int c) {
    color_[v] = c;
    for (vertex_id w : g_.neighbors(v)) {
      --free_degree_[w];
      if (seen_[w * width_ + c]++ == 0) ++saturation_[w];
    }
  }

  void unassign(vertex_id v) {
    const int c = color_[v];
    color_[v] = -1;
    for (vertex_id w : g_.neighbors(v)) {
      ++free_degree_[w];
      if (--seen_[w * width_ + c] == 0) --saturation_[w];
    }
  }

  // Returns true once the lower bound is met.
  bool search(std::size_t colored, int used) {
    if (used >= *best_count_) return false;
    if (colored == n_) {
      *best_ = color_;
      *best_count_ = used;
      return used <= lower_;
    }
    if (++nodes_ > node_limit_) throw BudgetExhausted{};
    if ((nodes_ & 0xfff) == 0 && Clock::now() > deadline_) throw BudgetExhausted{};
    const vertex_id v = select();
    for (int c = 0; c < used; ++c) {
      if (seen_[v * width_ + c] != 0) continue;
      assign(v, c);
      const bool done = search(colored + 1, used);
      unassign(v);
      if (done) return true;
      if (used >= *best_count_) return false;
    }
    if (used + 1 < *best_count_) {
      assign(v, used);
      const bool done = search(colored + 1, used + 1);
      unassign(v);
      if (done) return true;
    }
    return false;
  }

  const FamilyGraph& g_;
  std::size_t n_;
  std::size_t width_ = 1;
  std::vector<int> color_;
  std::vector<int> seen_;
  std::vector<int> saturation_;
  std::vector<int> free_degree_;
  std::vector<int>* best_ = nullptr;
  int* best_count_ = nullptr;
  int lower_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t node_limit_;
  Clock::time_point deadline_;
};

}  // namespace

SolveResult chromatic_number(const FamilyGraph& g, const SolveBudget& budget) {
  validate(budget);
  const auto start = Clock::now();
  SolveResult result;
  const std::size_t n = g.vertex_count();
  if (n == 0) {
    result.exact = true;
    return result;
  }
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(std::min(budget.time_limit, 1e9)));
  result.lower = greedy_clique(g);
  Dsatur solver(g, budget.node_limit, deadline);
  std::vector<int> best = solver.heuristic();
  int best_count = *std::max_element(best.begin(), best.end()) + 1;
  if (best_count > result.lower) {
    try {
      solver.improve(best, best_count, result.lower);
      result.lower = best_count;
    } catch (const BudgetExhausted&) {
    }
  }
  result.upper = best_count;
  result.exact = result.lower == result.upper;
  result.coloring.palette = best_count;
  for (int c : best) result.coloring.colors.push_back(c + 1);
  result.nodes = solver.nodes();
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace dichro
