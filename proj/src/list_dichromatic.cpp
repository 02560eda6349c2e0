#include <algorithm>
#include <string>

#include "bitgraph.hpp"
#include "dichro/errors.hpp"
#include "dichro/solvers.hpp"

namespace dichro {

namespace {

using detail::bit;
using detail::word;

class ListChooser {
 public:
  ListChooser(const detail::BitDigraph& g, const ListAssignment& lists) : g_(g), lists_(lists) {
    int top = 0;
    for (const auto& l : lists) {
      for (int c : l) top = std::max(top, c);
    }
    members_.assign(top + 1, 0);
    chosen_.assign(g.n, 0);
  }

  bool solve(unsigned v = 0) {
    if (v == g_.n) return true;
    for (int c : lists_[v]) {
      if (!g_.insertable(v, members_[c])) continue;
      members_[c] |= bit(v);
      chosen_[v] = c;
      if (solve(v + 1)) return true;
      members_[c] &= ~bit(v);
    }
    return false;
  }

  const std::vector<int>& chosen() const { return chosen_; }

 private:
  const detail::BitDigraph& g_;
  const ListAssignment& lists_;
  std::vector<word> members_;
  std::vector<int> chosen_;
};

// Enumerates list assignments in which fresh colors are always the next
// unused indices, which reaches every assignment up to palette renaming.
class AssignmentEnumerator {
 public:
  AssignmentEnumerator(const detail::BitDigraph& g, int t, std::uint64_t cap) : g_(g), t_(t), cap_(cap) {
    lists_.assign(g.n, {});
  }

  ListResult run() {
    walk(0, 0);
    result_.holds = !result_.counterexample.has_value();
    return result_;
  }

 private:
  void walk(unsigned v, int used) {
    if (result_.counterexample) return;
    if (v == g_.n) {
      if (++result_.assignments > cap_)
        throw cap_exceeded("list probe exceeded " + std::to_string(cap_) + " assignments");
      ListChooser chooser(g_, lists_);
      if (!chooser.solve()) result_.counterexample = lists_;
      return;
    }
    for (int old = std::min(t_, used); old >= 0; --old) {
      const int fresh = t_ - old;
      std::vector<int> pick;
      choose_old(v, used, old, fresh, 0, pick);
      if (result_.counterexample) return;
    }
  }

  void choose_old(unsigned v, int used, int old, int fresh, int from, std::vector<int>& pick) {
    if (result_.counterexample) return;
    if (static_cast<int>(pick.size()) == old) {
      auto& list = lists_[v];
      list = pick;
      for (int j = 0; j < fresh; ++j) list.push_back(used + 1 + j);
      walk(v + 1, used + fresh);
      return;
    }
    for (int c = from; c < used; ++c) {
      if (used - c < old - static_cast<int>(pick.size())) break;
      pick.push_back(c + 1);
      choose_old(v, used, old, fresh, c + 1, pick);
      pick.pop_back();
    }
  }

  const detail::BitDigraph& g_;
  int t_;
  std::uint64_t cap_;
  ListAssignment lists_;
  ListResult result_;
};

}  // namespace

std::optional<Coloring> acceptable_coloring(const Digraph& d, const ListAssignment& lists) {
  if (d.vertex_count() > max_exact_vertices) throw cap_exceeded("list coloring supports at most 64 vertices");
  if (lists.size() != d.vertex_count()) throw parameter_error("one list per vertex required");
  for (const auto& l : lists) {
    for (int c : l)
      if (c < 1) throw parameter_error("list colors are 1-based");
  }
  const detail::BitDigraph g(d);
  ListChooser chooser(g, lists);
  if (!chooser.solve()) return std::nullopt;
  Coloring c;
  c.colors = chooser.chosen();
  for (int x : c.colors) c.palette = std::max(c.palette, x);
  return c;
}

ListResult list_dichromatic_at_most(const Digraph& d, int t, const ListCaps& caps) {
  if (t < 1) throw parameter_error("list size must be at least 1");
  if (d.vertex_count() > caps.max_vertices || d.vertex_count() > max_exact_vertices)
    throw cap_exceeded("list probe supports at most " + std::to_string(caps.max_vertices) + " vertices");
  if (t > caps.max_t) throw cap_exceeded("list probe supports lists of size at most " + std::to_string(caps.max_t));
  const detail::BitDigraph g(d);
  return AssignmentEnumerator(g, t, caps.max_assignments).run();
}

std::optional<int> list_dichromatic_number(const Digraph& d, const ListCaps& caps) {
  if (d.vertex_count() == 0) return 0;
  for (int t = 1; t <= caps.max_t; ++t) {
    if (list_dichromatic_at_most(d, t, caps).holds) return t;
  }
  return std::nullopt;
}

}  // namespace dichro
