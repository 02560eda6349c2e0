#include <algorithm>
#include <bit>
#include <cstdint>

#include "dichro/errors.hpp"
#include "dichro/solvers.hpp"

namespace dichro {

namespace {

using word = std::uint64_t;

struct NodeLimitReached {};

// Every acyclic set in a tournament is a transitive chain, so a largest one
// is found by picking a source and recursing into its out-neighbourhood.
// One node per candidate source tried.
class TransitiveSearch {
 public:
  TransitiveSearch(const Digraph& d, std::span<const vertex_id> vertices, std::uint64_t node_limit)
      : ids_(vertices.begin(), vertices.end()),
        words_((ids_.size() + 63) / 64),
        out_(ids_.size(), std::vector<word>(words_, 0)),
        node_limit_(node_limit) {
    const std::size_t m = ids_.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const bool fwd = d.has_arc(ids_[i], ids_[j]);
        const bool back = d.has_arc(ids_[j], ids_[i]);
        if (fwd == back) throw parameter_error("vertices do not induce a tournament");
        if (fwd) set(out_[i], j);
        else set(out_[j], i);
      }
    }
  }

  std::vector<vertex_id> run() {
    const std::size_t m = ids_.size();
    if (m == 0) return {};
    std::vector<word> all(words_, 0);
    for (std::size_t i = 0; i < m; ++i) set(all, i);
    levels_.assign(m + 1, std::vector<word>(words_, 0));
    path_.clear();
    extend(all, 0);
    std::vector<vertex_id> out;
    for (std::size_t i : best_path_) out.push_back(ids_[i]);
    return out;
  }

 private:
  static void set(std::vector<word>& s, std::size_t i) { s[i / 64] |= word{1} << (i % 64); }

  std::size_t count(const std::vector<word>& s) const {
    std::size_t c = 0;
    for (word w : s) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  void extend(const std::vector<word>& pool, std::size_t depth) {
    if (depth > best_path_.size()) best_path_ = path_;
    std::vector<word>& next = levels_[depth];
    for (std::size_t w = 0; w < words_; ++w) {
      for (word bits = pool[w]; bits != 0; bits &= bits - 1) {
        if (++nodes_ > node_limit_) throw NodeLimitReached{};
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        for (std::size_t x = 0; x < words_; ++x) next[x] = pool[x] & out_[v][x];
        if (depth + 1 + count(next) <= best_path_.size()) continue;
        path_.push_back(v);
        extend(next, depth + 1);
        path_.pop_back();
      }
    }
  }

  std::vector<vertex_id> ids_;
  std::size_t words_;
  std::vector<std::vector<word>> out_;
  std::vector<std::vector<word>> levels_;
  std::vector<std::size_t> path_;
  std::vector<std::size_t> best_path_;
  std::uint64_t nodes_ = 0;
  std::uint64_t node_limit_;
};

}  // namespace

std::optional<std::vector<vertex_id>> max_transitive_subtournament(const Digraph& d,
                                                                   std::span<const vertex_id> vertices,
                                                                   std::uint64_t node_limit) {
  for (vertex_id v : vertices) {
    if (v >= d.vertex_count()) throw parameter_error("vertex id out of range");
  }
  TransitiveSearch search(d, vertices, node_limit);
  try {
    return search.run();
  } catch (const NodeLimitReached&) {
    return std::nullopt;
  }
}

bool is_tournament(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (d.arc_count() != n * (n - (n > 0 ? 1 : 0)) / 2) return false;
  for (auto [u, v] : d.arcs()) {
    if (d.has_arc(v, u)) return false;
  }
  return true;
}

}  // namespace dichro
