#pragma once

#include <optional>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

// Total map vertex -> color in [1, palette].
struct Coloring {
  std::vector<int> colors;
  int palette = 0;

  // Number of distinct colors actually used.
  int used_colors() const;
  // Vertices of color c, ascending.
  std::vector<vertex_id> color_class(int c) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Throws parameter_error if some color lies outside [1, palette].
void validate(const Coloring& c);

// Palette t = n - 2k + s + 2; f(A) = min(A) clamped to t. Needs 0 <= s < k <= n/2.
Coloring clamped_min_coloring(int n, int k, int s);

// f(A) = ceil(min(A) / k) over V(J(n,k)); palette ceil(n/k).
Coloring block_coloring_johnson(int n, int k);

struct VerifyReport {
  bool proper = true;
  // Index c-1 holds the certificate for class c, in original vertex ids.
  std::vector<AcyclicityCertificate> per_class;
  std::optional<int> violating_class;
};

// Runs is_acyclic on the subdigraph induced by every color class.
VerifyReport verify_acyclic_coloring(const Digraph& d, const Coloring& c);

// Returns an edge of g inside class `color`, or nullopt if the class is independent.
std::optional<Edge> verify_independent_class(const FamilyGraph& g, const Coloring& c, int color);

// Every class independent in g.
bool is_proper_coloring(const FamilyGraph& g, const Coloring& c);

}  // namespace dichro
