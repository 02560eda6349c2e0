#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dichro/colorings.hpp"
#include "dichro/digraph.hpp"

namespace dichro {

struct SolveBudget {
  // Search-tree nodes allowed for a single digraph or graph solve.
  std::uint64_t node_limit = 100'000'000;
  // Wall-clock limit for the whole call, in seconds.
  double time_limit = 3600.0;
  std::size_t orientation_cap = default_orientation_cap;
  std::uint64_t sample_count = 100;
  std::uint64_t seed = 1;
  // Worker threads for orientation sweeps; 0 = hardware concurrency.
  unsigned threads = 0;
};

void validate(const SolveBudget& budget);

struct SolveResult {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  // Attains `upper`: acyclic classes for dichromatic results, independent
  // classes for chromatic ones. For graph mode, colors `witness`.
  Coloring coloring;
  std::optional<std::uint64_t> witness_orientation_mask;  // unset above 64 edges
  std::optional<Digraph> witness;
  std::uint64_t nodes = 0;
  double seconds = 0.0;

  int value() const { return upper; }
};

inline constexpr std::size_t max_exact_vertices = 64;

// Minimum number of acyclic classes. Exact for up to 64 vertices; larger
// digraphs get a heuristic interval with exact = false.
SolveResult dichromatic_number(const Digraph& d, const SolveBudget& budget = {});

// An acyclic coloring with at most `colors` classes, if one exists within budget.
// `aborted` is set when the node or time budget ran out before a decision.
std::optional<Coloring> acyclic_coloring_within(const Digraph& d, int colors, const SolveBudget& budget,
                                                bool* aborted = nullptr, std::uint64_t* nodes = nullptr);

enum class OrientationMode { exhaustive, sample };

// Maximum dichromatic number over orientations of g. Exhaustive mode covers
// all 2^|E| orientations (using reversal symmetry); sample mode reports a
// lower bound from seeded random orientations plus `witnesses`, exact = false.
SolveResult dichromatic_number_graph(const FamilyGraph& g, OrientationMode mode, const SolveBudget& budget = {},
                                     std::span<const Digraph> witnesses = {});

// Edge-direction mask of an orientation of g (throws if d is not one).
std::uint64_t orientation_mask(const FamilyGraph& g, const Digraph& d);

// Largest transitive subtournament among `vertices`, listed source first.
// Throws parameter_error unless every pair is joined by exactly one arc;
// nullopt if the node limit runs out.
std::optional<std::vector<vertex_id>> max_transitive_subtournament(const Digraph& d,
                                                                   std::span<const vertex_id> vertices,
                                                                   std::uint64_t node_limit = 100'000'000);

// True iff every pair of distinct vertices is joined by exactly one arc.
bool is_tournament(const Digraph& d);

SolveResult chromatic_number(const FamilyGraph& g, const SolveBudget& budget = {});

struct ListCaps {
  std::size_t max_vertices = 6;
  int max_t = 3;
  // Canonical list assignments examined before giving up.
  std::uint64_t max_assignments = 200'000'000;
};

// Lists are 1-based colors; palette colors are introduced in first-use order.
using ListAssignment = std::vector<std::vector<int>>;

struct ListResult {
  bool holds = true;
  std::optional<ListAssignment> counterexample;
  std::uint64_t assignments = 0;
};

// True iff every assignment of t-element lists admits an acceptable acyclic
// coloring. Assignments are enumerated up to renaming of palette colors.
ListResult list_dichromatic_at_most(const Digraph& d, int t, const ListCaps& caps = {});

// An acyclic coloring choosing from `lists`, if one exists.
std::optional<Coloring> acceptable_coloring(const Digraph& d, const ListAssignment& lists);

// Smallest t <= caps.max_t with list_dichromatic_at_most(d, t); nullopt if none.
std::optional<int> list_dichromatic_number(const Digraph& d, const ListCaps& caps = {});

}  // namespace dichro
