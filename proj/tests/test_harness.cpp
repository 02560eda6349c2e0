#include <filesystem>
#include <sstream>
#include <variant>

#include "doctest.h"
#include "dichro/errors.hpp"
#include "dichro/graph_io.hpp"
#include "dichro/harness.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace dichro;

namespace {

const char* const budget_lines =
    "budget_nodes = 100000000\n"
    "budget_seconds = 600\n"
    "orientation_cap = 16\n"
    "sample_count = 20\n"
    "seed = 7\n"
    "threads = 2\n";

SweepConfig config(const std::string& extra) {
  SweepConfig cfg = parse_sweep_config(std::string(budget_lines) + extra);
  cfg.certificate_dir = std::filesystem::temp_directory_path() / "dichro_harness_certs";
  return cfg;
}

const SweepRow& find(const std::vector<SweepRow>& rows, int n, int k, int s) {
  for (const auto& r : rows)
    if (r.n == n && r.k == k && r.s == s) return r;
  FAIL("row not found");
  return rows.front();
}

}  // namespace

TEST_CASE("config parsing") {
  const SweepConfig cfg = config(
      "# comment\n"
      "n = 4..7\n"
      "k = 2\n"
      "s = 0..1   # trailing comment\n"
      "modes = constructive-check, exact-chromatic\n"
      "out = \"rows.csv\"\n"
      "timing = false\n"
      "core = 1,3\n");
  CHECK(cfg.n.first == 4);
  CHECK(cfg.n.last == 7);
  CHECK(cfg.k.first == 2);
  CHECK(cfg.k.last == 2);
  CHECK(cfg.modes.constructive_check);
  CHECK(cfg.modes.exact_chromatic);
  CHECK_FALSE(cfg.modes.list_probe);
  CHECK(cfg.out == "rows.csv");
  CHECK(cfg.budget.orientation_cap == 16);
  CHECK(cfg.budget.seed == 7);
  CHECK(*cfg.core == std::vector<int>{1, 3});
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_sweep_config("n = 4\nk = 2\ns = 0\nmodes = constructive-check\n"), parameter_error);
  CHECK_THROWS_AS(config("colour = red\n"), parameter_error);
  CHECK_THROWS_AS(config("seed = 3\n"), parameter_error);
  CHECK_THROWS_AS(config("modes = everything\n"), parameter_error);
  CHECK_THROWS_AS(config("n = 7..x\n"), parameter_error);
  CHECK_THROWS_AS(config("format = xml\n"), parameter_error);
  CHECK_THROWS_AS(config("n = 4\nk = 2\nmodes = constructive-check\n"), parameter_error);
  CHECK_THROWS_AS(config("just words\n"), parameter_error);
}

TEST_CASE("constructive rows") {
  const auto rows = sweep_theorem_upper(config("n = 4..6\nk = 1..3\ns = 0..2\nmodes = constructive-check\n"));
  // s < k <= n/2: (4,1,0) (4,2,0) (4,2,1) (5,1,0) (5,2,0) (5,2,1) (6,1,0) (6,2,0) (6,2,1) (6,3,0..2)
  CHECK(rows.size() == 12);
  const SweepRow& petersen = find(rows, 5, 2, 0);
  CHECK(petersen.family == "kneser");
  CHECK(petersen.vertices == 10);
  CHECK(petersen.edges == 15);
  CHECK(*petersen.palette == 3);
  CHECK(*petersen.bound == 3);
  CHECK(petersen.verdict == Verdict::pass);
  CHECK(petersen.certificate.empty());
  CHECK_FALSE(any_failed(rows));
}

TEST_CASE("constructive rows with exact solvers") {
  const auto rows = sweep_theorem_upper(
      config("n = 4..5\nk = 2\ns = 0..1\nmodes = constructive-check, exact-chromatic, exact-dichromatic-graph\n"));
  const SweepRow& k6 = find(rows, 4, 2, 1);
  CHECK(*k6.bound == 3);
  CHECK(*k6.chromatic == 6);
  CHECK(*k6.dichromatic_lo == oracle::max_over_orientations(gen_generalized_kneser(4, 2, 1)));
  CHECK(*k6.dichromatic_lo == *k6.dichromatic_hi);
  CHECK(*k6.exact);
  CHECK(k6.verdict == Verdict::pass);

  const SweepRow& petersen = find(rows, 5, 2, 0);
  CHECK(*petersen.chromatic == 3);
  // 15 edges fit the cap of 16
  CHECK(*petersen.exact);
  CHECK(*petersen.dichromatic_hi <= 3);

  // (5,2,1) has 45 edges: sampled lower bound only
  const SweepRow& dense = find(rows, 5, 2, 1);
  CHECK_FALSE(*dense.exact);
  CHECK(*dense.dichromatic_lo <= *dense.dichromatic_hi);
}

TEST_CASE("embedding rows") {
  const auto rows = sweep_lower_bound_embedding(config("n = 6..7\nk = 3\ns = 1..2\nmodes = embedding, exact-chromatic\n"));
  const SweepRow& petersen = find(rows, 6, 3, 1);
  CHECK(petersen.family == "kneser_core");
  CHECK(petersen.vertices == 10);
  CHECK(*petersen.bound == 3);
  CHECK(*petersen.chromatic == 3);
  CHECK(petersen.verdict == Verdict::pass);
  const SweepRow& k5 = find(rows, 7, 3, 2);
  CHECK(k5.vertices == 5);
  CHECK(k5.edges == 10);
  CHECK(*k5.bound == 5);
  CHECK(*k5.chromatic == 5);
  CHECK_FALSE(any_failed(rows));
}

TEST_CASE("embedding with a custom core") {
  const auto rows = sweep_lower_bound_embedding(config("n = 6\nk = 3\ns = 1\nmodes = embedding\ncore = 4\n"));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].verdict == Verdict::pass);
}

TEST_CASE("johnson rows") {
  const auto rows = check_johnson(config("n = 4\nk = 1..2\nmodes = johnson-conjecture, exact-dichromatic-graph\n"));
  REQUIRE(rows.size() == 2);
  const SweepRow& j42 = find(rows, 4, 2, 0);
  CHECK(j42.family == "johnson");
  CHECK(j42.vertices == 6);
  CHECK(j42.edges == 12);
  CHECK(*j42.bound == 2);
  CHECK(*j42.palette == 2);
  CHECK(*j42.exact);
  CHECK(*j42.dichromatic_lo == oracle::max_over_orientations(gen_johnson(4, 2)));
  CHECK(j42.verdict == Verdict::pass);
  const SweepRow& k4 = find(rows, 4, 1, 0);
  CHECK(*k4.palette == 4);
  CHECK(*k4.dichromatic_lo == 2);
}

TEST_CASE("product check on fixed digraphs") {
  const SweepConfig cfg = config("");
  const Digraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
  const ProductReport r = check_product(cfg, tri, tri);
  CHECK(r.first.value() == 2);
  CHECK(r.factor_min == 2);
  CHECK(r.product.value() == 2);
  CHECK(r.lifted_proper);
  CHECK(r.bound_holds);
  CHECK(r.equality);
  CHECK(r.verdict == Verdict::pass);

  const Digraph square(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const ProductReport mixed = check_product(cfg, tri, square);
  CHECK(mixed.product.exact);
  CHECK(mixed.product.value() == oracle::dichromatic(categorical_product(tri, square)));
  CHECK(mixed.product.value() <= 2);
  CHECK(mixed.verdict == Verdict::pass);

  const ProductReport acyclic = check_product(cfg, tri, Digraph(2, {{0, 1}}));
  CHECK(acyclic.factor_min == 1);
  CHECK(acyclic.product.value() == 1);
}

TEST_CASE("product check on graphs") {
  const SweepConfig cfg = config("");
  const FamilyGraph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  const GraphProductReport r = check_product(cfg, k3, FamilyGraph(2, {{0, 1}}));
  CHECK(r.first.value() == 2);
  CHECK(r.second.value() == 1);
  CHECK(r.product_exhaustive);
  // K3 x K2 is a 6-cycle, which orients to a directed cycle
  CHECK(r.product.value() == 2);
  CHECK_FALSE(r.equality);
  CHECK(r.verdict == Verdict::inconclusive);

  // 18 product edges exceed the cap of 16: sampled, never exact
  const GraphProductReport same = check_product(cfg, k3, k3);
  CHECK_FALSE(same.product_exhaustive);
  CHECK_FALSE(same.product.exact);
  CHECK(same.verdict == Verdict::inconclusive);
}

TEST_CASE("product and list sweeps") {
  const auto products = sweep_products(config("modes = product-check\nproduct_pairs = 6\nproduct_max_vertices = 4\n"));
  REQUIRE(products.size() == 6);
  for (const auto& row : products) {
    CHECK(row.family == "product");
    CHECK(row.verdict == Verdict::pass);
    CHECK(*row.dichromatic_hi <= *row.bound);
  }
  const auto lists = probe_lists(config("modes = list-probe\nlist_digraphs = 4\nlist_max_vertices = 4\nlist_max_t = 2\n"));
  REQUIRE(lists.size() == 4);
  for (const auto& row : lists) {
    CHECK(row.family == "list");
    CHECK(row.verdict != Verdict::fail);
    CHECK(*row.dichromatic_lo >= *row.bound);
  }
}

TEST_CASE("output formats and determinism") {
  const SweepConfig cfg =
      config("n = 4..6\nk = 1..2\ns = 0..1\nmodes = constructive-check, embedding, johnson-conjecture, product-check\n"
             "product_pairs = 3\n");
  const auto rows = run_sweep(cfg);
  const std::string csv = rows_to_csv(rows, false);
  CHECK(csv.rfind(
            "family,n,k,s,vertices,edges,palette,bound,chromatic,dichromatic_lo,dichromatic_hi,exact,verdict,"
            "certificate,seconds\n",
            0) == 0);
  CHECK(csv == rows_to_csv(run_sweep(cfg), false));
  CHECK(csv.find("kneser,5,2,0,10,15,3,3,,,,,PASS,,0.000\n") != std::string::npos);
  CHECK(rows.front().family == "kneser");
  CHECK(rows.back().family == "product");

  const auto parsed = nlohmann::json::parse(rows_to_json(rows, false));
  CHECK(parsed.size() == rows.size());
  CHECK(parsed[0]["verdict"] == "PASS");
  CHECK(parsed[0]["chromatic"].is_null());
}

TEST_CASE("planted Paley tournament exceeds the bound on KG(8,3,2)") {
  SweepConfig cfg = config("n = 6..8\nk = 3\ns = 2\nmodes = constructive-check, exact-dichromatic-graph\n");
  cfg.budget.node_limit = 200000;
  cfg.budget.sample_count = 2;
  const auto rows = sweep_theorem_upper(cfg);
  // K20 and K35 carry QR19 and QR31: ceil(19/5) = 4 and ceil(31/7) = 5 meet the bound.
  CHECK(find(rows, 6, 3, 2).verdict != Verdict::fail);
  CHECK(*find(rows, 6, 3, 2).dichromatic_lo == 4);
  CHECK(find(rows, 7, 3, 2).verdict != Verdict::fail);
  CHECK(*find(rows, 7, 3, 2).dichromatic_lo == 5);

  // K56 carries QR47 with largest transitive subtournament 7: ceil(47/7) = 7 > 6.
  const SweepRow& row = find(rows, 8, 3, 2);
  CHECK(*row.bound == 6);
  CHECK(*row.dichromatic_lo == 7);
  REQUIRE(row.verdict == Verdict::fail);
  const auto cert = nlohmann::json::parse(read_text(row.certificate));
  CHECK(cert["lower"] == 7);
  CHECK(cert["paley_order"] == 47);
  const auto clique = cert["clique"].get<std::vector<vertex_id>>();
  const auto chain = cert["largest_transitive"].get<std::vector<vertex_id>>();
  CHECK(clique.size() == 47);
  CHECK(chain.size() == 7);
  std::istringstream text(cert["witness"].get<std::string>());
  const Digraph witness = std::get<Digraph>(parse_exchange(text));
  CHECK(witness.underlying().edges() == gen_generalized_kneser(8, 3, 2).edges());
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j) CHECK(witness.has_arc(chain[i], chain[j]));
  const auto planted = induced_subdigraph(witness, clique).digraph;
  CHECK(planted == paley_tournament(47));
}

TEST_CASE("failures write certificates") {
  SweepRow row;
  row.verdict = Verdict::fail;
  CHECK(any_failed({row}));
  CHECK(std::string(to_string(Verdict::inconclusive)) == "INCONCLUSIVE");
}
