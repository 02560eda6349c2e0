#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dichro/digraph.hpp"
#include "dichro/families.hpp"
#include "dichro/solvers.hpp"

namespace dichro {

enum class Verdict { pass, fail, inconclusive };

const char* to_string(Verdict v);

struct IntRange {
  int first = 0;
  int last = -1;  // inclusive
  bool empty() const { return last < first; }
};

struct SweepModes {
  bool constructive_check = false;
  bool exact_chromatic = false;
  bool exact_dichromatic_graph = false;
  bool embedding = false;
  bool johnson_conjecture = false;
  bool product_check = false;
  bool list_probe = false;
};

struct SweepConfig {
  IntRange n, k, s;
  SweepModes modes;
  SolveBudget budget;
  std::filesystem::path out;
  std::string format = "csv";
  // Counterexample files land here; defaults to "<out>.certs".
  std::filesystem::path certificate_dir;
  bool timing = false;
  std::size_t vertex_cap = default_vertex_cap;
  std::optional<std::vector<int>> core;  // embedding core override, 1-based
  int product_pairs = 20;
  int product_max_vertices = 5;
  int list_digraphs = 10;
  int list_max_vertices = 5;
  int list_max_t = 3;
};

// Flat "key = value" text; ranges written "4..10". Budget keys
// (budget_nodes, budget_seconds, orientation_cap, sample_count) and seed are
// required. Throws parameter_error on unknown keys or bad values.
SweepConfig parse_sweep_config(const std::string& text);

struct SweepRow {
  std::string family;
  int n = 0, k = 0, s = 0;
  std::size_t vertices = 0, edges = 0;
  std::optional<int> palette, bound, chromatic, dichromatic_lo, dichromatic_hi;
  std::optional<bool> exact;
  Verdict verdict = Verdict::pass;
  std::string certificate;
  double seconds = 0.0;
};

inline constexpr const char* csv_header =
    "family,n,k,s,vertices,edges,palette,bound,chromatic,dichromatic_lo,dichromatic_hi,exact,verdict,certificate,"
    "seconds";

// Min-rule orientation + clamped-min coloring of KG(n,k,s) for s < k <= n/2.
std::vector<SweepRow> sweep_theorem_upper(const SweepConfig& cfg);
// Fixed-core subgraph of KG(n,k,s) against KG(n-s,k-s) for s < k <= n.
std::vector<SweepRow> sweep_lower_bound_embedding(const SweepConfig& cfg);
// Sum-rule orientation and block coloring of J(n,k) for 1 <= k <= n.
std::vector<SweepRow> check_johnson(const SweepConfig& cfg);

struct ProductReport {
  SolveResult first, second, product;
  int factor_min = 0;
  // Coloring of the product pulled back from the better factor's coloring.
  Coloring lifted;
  bool lifted_proper = false;
  bool bound_holds = false;   // product value <= factor_min
  bool equality = false;      // product value == factor_min, all exact
  Verdict verdict = Verdict::inconclusive;
};

ProductReport check_product(const SweepConfig& cfg, const Digraph& d1, const Digraph& d2);

struct GraphProductReport {
  SolveResult first, second, product;
  bool product_exhaustive = false;
  bool equality = false;  // all exact and product value == min of factor values
  Verdict verdict = Verdict::inconclusive;
};

// Max-over-orientations values of two graphs and of their categorical product.
// Orientations of the product are not products of orientations, so nothing is
// asserted: K3 x K2 is a 6-cycle. Verdict is PASS on equality, else INCONCLUSIVE.
GraphProductReport check_product(const SweepConfig& cfg, const FamilyGraph& g1, const FamilyGraph& g2);

// `product_pairs` seeded random digraph pairs with up to `product_max_vertices` vertices.
std::vector<SweepRow> sweep_products(const SweepConfig& cfg);
// `list_digraphs` seeded random digraphs: list dichromatic number against dichromatic number.
std::vector<SweepRow> probe_lists(const SweepConfig& cfg);

// Every enabled mode, in the order: constructive, embedding, johnson, product, list.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

std::string rows_to_csv(const std::vector<SweepRow>& rows, bool timing);
std::string rows_to_json(const std::vector<SweepRow>& rows, bool timing);

bool any_failed(const std::vector<SweepRow>& rows);

}  // namespace dichro
