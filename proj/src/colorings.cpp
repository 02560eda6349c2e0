#include "dichro/colorings.hpp"

#include <algorithm>
#include <string>

#include "dichro/errors.hpp"
#include "dichro/setfam.hpp"

namespace dichro {

int Coloring::used_colors() const {
  std::vector<int> distinct(colors);
  std::sort(distinct.begin(), distinct.end());
  return static_cast<int>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
}

std::vector<vertex_id> Coloring::color_class(int c) const {
  std::vector<vertex_id> out;
  for (vertex_id v = 0; v < colors.size(); ++v)
    if (colors[v] == c) out.push_back(v);
  return out;
}

void validate(const Coloring& c) {
  for (int color : c.colors) {
    if (color < 1 || color > c.palette)
      throw parameter_error("color " + std::to_string(color) + " outside palette [1, " +
                            std::to_string(c.palette) + "]");
  }
}

Coloring clamped_min_coloring(int n, int k, int s) {
  if (s < 0 || s >= k || 2 * k > n)
    throw parameter_error("clamped-min coloring needs 0 <= s < k <= n/2, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k) + " s=" + std::to_string(s));
  const int t = n - 2 * k + s + 2;
  Coloring c;
  c.palette = t;
  for (const KSubset& a : enumerate_ksubsets(n, k)) c.colors.push_back(std::min(a.min_element(), t));
  return c;
}

Coloring block_coloring_johnson(int n, int k) {
  if (k < 1 || k > n) throw parameter_error("block coloring needs 1 <= k <= n");
  Coloring c;
  c.palette = (n + k - 1) / k;
  for (const KSubset& a : enumerate_ksubsets(n, k)) c.colors.push_back((a.min_element() + k - 1) / k);
  return c;
}

VerifyReport verify_acyclic_coloring(const Digraph& d, const Coloring& c) {
  if (c.colors.size() != d.vertex_count())
    throw parameter_error("coloring has " + std::to_string(c.colors.size()) + " entries for " +
                          std::to_string(d.vertex_count()) + " vertices");
  validate(c);
  VerifyReport report;
  report.per_class.reserve(c.palette);
  for (int color = 1; color <= c.palette; ++color) {
    const auto members = c.color_class(color);
    const auto sub = induced_subdigraph(d, members);
    auto cert = is_acyclic(sub.digraph);
    if (auto* topo = std::get_if<TopoOrder>(&cert)) {
      for (auto& v : topo->order) v = sub.original[v];
    } else {
      for (auto& v : std::get<DirectedCycle>(cert).vertices) v = sub.original[v];
    }
    if (!is_topo_order(cert) && report.proper) {
      report.proper = false;
      report.violating_class = color;
    }
    report.per_class.push_back(std::move(cert));
  }
  return report;
}

std::optional<Edge> verify_independent_class(const FamilyGraph& g, const Coloring& c, int color) {
  if (c.colors.size() != g.vertex_count()) throw parameter_error("coloring length does not match graph");
  for (auto [u, v] : g.edges()) {
    if (c.colors[u] == color && c.colors[v] == color) return Edge{u, v};
  }
  return std::nullopt;
}

bool is_proper_coloring(const FamilyGraph& g, const Coloring& c) {
  if (c.colors.size() != g.vertex_count()) return false;
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return c.colors[e.first] == c.colors[e.second]; });
}

}  // namespace dichro
