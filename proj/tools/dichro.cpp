// Command-line front end: graph generation, orientation, colorings,
// verification, exact solvers, sweeps and product checks.
//
// Exit codes: 0 completed / all checks passed, 1 a checked claim failed
// (counterexample written), 2 usage or budget error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dichro/colorings.hpp"
#include "dichro/errors.hpp"
#include "dichro/families.hpp"
#include "dichro/graph_io.hpp"
#include "dichro/harness.hpp"
#include "dichro/solvers.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace dichro;
using json = nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_claim_failed = 1;
constexpr int exit_usage = 2;

struct FamilyOptions {
  std::string family;
  int n = 0, k = 0, s = 0;
  std::size_t vertex_cap = default_vertex_cap;

  bool given() const { return !family.empty(); }

  FamilySpec spec() const {
    if (family == "kneser") return {Family::generalized_kneser, n, k, s};
    if (family == "johnson") return {Family::johnson, n, k, 0};
    throw parameter_error("--family must be kneser or johnson");
  }
};

void add_family_options(CLI::App* app, FamilyOptions& f) {
  app->add_option("--family", f.family, "kneser | johnson")->check(CLI::IsMember({"kneser", "johnson"}));
  app->add_option("--n", f.n, "ground set size");
  app->add_option("--k", f.k, "subset size");
  app->add_option("--s", f.s, "intersection threshold (kneser)");
  app->add_option("--vertex-cap", f.vertex_cap, "maximum vertex count");
}

void add_budget_options(CLI::App* app, SolveBudget& b) {
  app->add_option("--budget-nodes", b.node_limit, "search-tree node limit per solve");
  app->add_option("--budget-seconds", b.time_limit, "wall-clock limit in seconds");
  app->add_option("--orientation-cap", b.orientation_cap, "maximum edges for exhaustive orientation search");
  app->add_option("--samples", b.sample_count, "random orientations in sample mode");
  app->add_option("--seed", b.seed, "random seed");
  app->add_option("--threads", b.threads, "worker threads (0 = all cores)");
}

std::string stem_with(const fs::path& prefix, const std::string& suffix) { return prefix.string() + suffix; }

FamilyGraph graph_from(const FamilyOptions& f, const std::string& graph_file, const std::string& labels_file) {
  if (f.given()) return generate(f.spec(), f.vertex_cap);
  if (graph_file.empty()) throw parameter_error("give --graph or --family/--n/--k[/--s]");
  FamilyGraph g = read_graph(graph_file);
  if (labels_file.empty()) return g;
  auto labels = read_labels(labels_file, f.n > 0 ? f.n : 64);
  if (f.n == 0 && !labels.empty()) {
    // Ground size unknown: take the largest element present.
    int top = 1;
    for (const auto& a : labels) top = std::max(top, a.elements().back());
    labels = read_labels(labels_file, top);
  }
  return FamilyGraph(g.vertex_count(), g.edges(), std::move(labels));
}

void print_line(const std::string& s) { std::cout << s << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dichro: generalized Kneser and Johnson digraph workbench"};
  app.require_subcommand(1);

  // gen
  FamilyOptions gen_family;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "emit a family graph and its label sidecar");
  add_family_options(gen, gen_family);
  gen->add_option("--out", gen_out, "output prefix (<out>.graph, <out>.labels.json)")->required();

  // orient
  FamilyOptions orient_family;
  std::string orient_graph, orient_labels, orient_mode = "min", orient_out;
  std::optional<std::uint64_t> orient_index;
  SolveBudget orient_budget;
  auto* orient = app.add_subcommand("orient", "orient a graph (min | sum | enumerate | sample)");
  add_family_options(orient, orient_family);
  orient->add_option("--graph", orient_graph, "graph exchange file");
  orient->add_option("--labels", orient_labels, "label sidecar");
  orient->add_option("--mode", orient_mode, "min | sum | enumerate | sample")
      ->check(CLI::IsMember({"min", "sum", "enumerate", "sample"}));
  orient->add_option("--index", orient_index, "orientation index for enumerate (default: all)");
  orient->add_option("--seed", orient_budget.seed, "seed for sample");
  orient->add_option("--orientation-cap", orient_budget.orientation_cap, "edge cap for enumerate");
  orient->add_option("--out", orient_out, "output prefix")->required();

  // color
  FamilyOptions color_family;
  std::string color_out;
  auto* color = app.add_subcommand("color", "emit the constructive coloring of a family");
  add_family_options(color, color_family);
  color->add_option("--out", color_out, "coloring JSON")->required();

  // verify
  std::string verify_digraph, verify_coloring, verify_out;
  auto* verify = app.add_subcommand("verify", "check a coloring file against a digraph file");
  verify->add_option("--digraph", verify_digraph, "digraph exchange file")->required();
  verify->add_option("--coloring", verify_coloring, "coloring JSON")->required();
  verify->add_option("--out", verify_out, "certificate output (default <coloring>.cert.json)");

  // exact
  FamilyOptions exact_family;
  std::string exact_mode, exact_graph, exact_digraph, exact_labels, exact_orient = "min", exact_out;
  std::string exact_search = "exhaustive";
  int exact_t = 0;
  SolveBudget exact_budget;
  auto* exact = app.add_subcommand("exact", "chromatic | dichromatic | dichromatic-graph | list");
  add_family_options(exact, exact_family);
  add_budget_options(exact, exact_budget);
  exact->add_option("--mode", exact_mode, "chromatic | dichromatic | dichromatic-graph | list")
      ->required()
      ->check(CLI::IsMember({"chromatic", "dichromatic", "dichromatic-graph", "list"}));
  exact->add_option("--graph", exact_graph, "graph exchange file");
  exact->add_option("--digraph", exact_digraph, "digraph exchange file");
  exact->add_option("--labels", exact_labels, "label sidecar for --graph");
  exact->add_option("--orient", exact_orient, "orientation rule for --family digraphs: min | sum")
      ->check(CLI::IsMember({"min", "sum"}));
  exact->add_option("--search", exact_search, "exhaustive | sample (dichromatic-graph)")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  exact->add_option("--t", exact_t, "list size (list mode)");
  exact->add_option("--out", exact_out, "result JSON (default: stdout)");

  // sweep
  std::string sweep_config, sweep_out, sweep_format;
  std::optional<unsigned> sweep_threads;
  std::vector<int> sweep_core;
  bool sweep_timing = false;
  auto* sweep = app.add_subcommand("sweep", "run a sweep configuration file");
  sweep->add_option("--config", sweep_config, "flat key = value config")->required();
  sweep->add_option("--out", sweep_out, "override the config's output path");
  sweep->add_option("--format", sweep_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--threads", sweep_threads, "worker threads");
  sweep->add_option("--core", sweep_core, "embedding core, e.g. 2,5 (default 1..s)")->delimiter(',');
  sweep->add_flag("--timing", sweep_timing, "record wall-clock seconds (breaks byte-identical reruns)");

  // product
  std::string product_first, product_second, product_out;
  SolveBudget product_budget;
  auto* product = app.add_subcommand("product", "categorical product check");
  product->add_option("--first", product_first, "first factor (digraph or graph file)")->required();
  product->add_option("--second", product_second, "second factor (same kind)")->required();
  product->add_option("--out", product_out, "report JSON (default: stdout)");
  add_budget_options(product, product_budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*gen) {
      const FamilyGraph g = generate(gen_family.spec(), gen_family.vertex_cap);
      write_text(stem_with(gen_out, ".graph"), to_exchange(g));
      write_text(stem_with(gen_out, ".labels.json"), labels_to_json(g.labels()));
      print_line("wrote " + stem_with(gen_out, ".graph") + " (" + std::to_string(g.vertex_count()) + " vertices, " +
                 std::to_string(g.edge_count()) + " edges)");
      return exit_ok;
    }

    if (*orient) {
      const FamilyGraph g = graph_from(orient_family, orient_graph, orient_labels);
      auto emit = [&](const Digraph& d, const std::string& prefix) {
        write_text(prefix + ".dg", to_exchange(d));
        if (d.has_labels()) write_text(prefix + ".labels.json", labels_to_json(d.labels()));
      };
      if (orient_mode == "min") emit(orient_min_rule(g), orient_out);
      else if (orient_mode == "sum") emit(orient_sum_rule(g), orient_out);
      else if (orient_mode == "sample") emit(random_orientation(g, orient_budget.seed), orient_out);
      else {
        const OrientationRange range(g, orient_budget.orientation_cap);
        if (orient_index) {
          if (*orient_index >= range.size()) throw parameter_error("orientation index out of range");
          emit(range[*orient_index], orient_out);
        } else {
          for (auto it = range.begin(); it != range.end(); ++it)
            emit(*it, orient_out + "_" + std::to_string(it.index()));
        }
      }
      return exit_ok;
    }

    if (*color) {
      const FamilySpec spec = color_family.spec();
      const Coloring c = spec.family == Family::johnson ? block_coloring_johnson(spec.n, spec.k)
                                                        : clamped_min_coloring(spec.n, spec.k, spec.s);
      write_text(color_out, coloring_to_json(c));
      print_line("wrote " + color_out + " (palette " + std::to_string(c.palette) + ", " +
                 std::to_string(c.used_colors()) + " colors used)");
      return exit_ok;
    }

    if (*verify) {
      const Digraph d = read_digraph(verify_digraph);
      const Coloring c = read_coloring(verify_coloring);
      const VerifyReport report = verify_acyclic_coloring(d, c);
      const std::string cert_path = verify_out.empty() ? verify_coloring + ".cert.json" : verify_out;
      json classes = json::array();
      for (const auto& cert : report.per_class) classes.push_back(json::parse(certificate_to_json(cert)));
      json out{{"proper", report.proper},
               {"violating_class", report.violating_class ? json(*report.violating_class) : json(nullptr)},
               {"classes", classes}};
      write_text(cert_path, out.dump(2) + "\n");
      print_line(std::string(report.proper ? "PROPER" : "IMPROPER") + " certificate: " + cert_path);
      return report.proper ? exit_ok : exit_claim_failed;
    }

    if (*exact) {
      json out;
      bool complete = true;
      if (exact_mode == "chromatic" || exact_mode == "dichromatic-graph") {
        const FamilyGraph g = graph_from(exact_family, exact_graph, exact_labels);
        SolveResult r;
        if (exact_mode == "chromatic") {
          r = chromatic_number(g, exact_budget);
        } else {
          const auto mode = exact_search == "sample" ? OrientationMode::sample : OrientationMode::exhaustive;
          r = dichromatic_number_graph(g, mode, exact_budget);
          complete = mode == OrientationMode::sample || r.exact;
        }
        if (exact_mode == "chromatic") complete = r.exact;
        std::string coloring_file;
        if (!exact_out.empty()) {
          coloring_file = exact_out + ".coloring.json";
          write_text(coloring_file, coloring_to_json(r.coloring));
          if (r.witness) write_text(exact_out + ".witness.dg", to_exchange(*r.witness));
        }
        out = json::parse(solve_result_to_json(r, coloring_file, false));
      } else {
        Digraph d;
        if (!exact_digraph.empty()) d = read_digraph(exact_digraph);
        else {
          const FamilyGraph g = graph_from(exact_family, exact_graph, exact_labels);
          d = exact_orient == "sum" ? orient_sum_rule(g) : orient_min_rule(g);
        }
        if (exact_mode == "dichromatic") {
          const SolveResult r = dichromatic_number(d, exact_budget);
          complete = r.exact;
          std::string coloring_file;
          if (!exact_out.empty()) {
            coloring_file = exact_out + ".coloring.json";
            write_text(coloring_file, coloring_to_json(r.coloring));
          }
          out = json::parse(solve_result_to_json(r, coloring_file, false));
        } else {
          if (exact_t < 1) throw parameter_error("list mode needs --t >= 1");
          const ListResult r = list_dichromatic_at_most(d, exact_t);
          out = {{"t", exact_t},
                 {"holds", r.holds},
                 {"assignments", r.assignments},
                 {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)}};
        }
      }
      const std::string text = out.dump(2) + "\n";
      if (exact_out.empty()) std::cout << text;
      else write_text(exact_out, text);
      return complete ? exit_ok : exit_usage;
    }

    if (*sweep) {
      SweepConfig cfg = parse_sweep_config(read_text(sweep_config));
      if (!sweep_out.empty()) cfg.out = sweep_out;
      if (!sweep_format.empty()) cfg.format = sweep_format;
      if (sweep_threads) cfg.budget.threads = *sweep_threads;
      if (!sweep_core.empty()) cfg.core = sweep_core;
      if (sweep_timing) cfg.timing = true;
      const auto rows = run_sweep(cfg);
      const std::string text = cfg.format == "json" ? rows_to_json(rows, cfg.timing) : rows_to_csv(rows, cfg.timing);
      if (cfg.out.empty()) std::cout << text;
      else write_text(cfg.out, text);
      std::size_t failed = 0, inconclusive = 0;
      for (const auto& r : rows) {
        failed += r.verdict == Verdict::fail;
        inconclusive += r.verdict == Verdict::inconclusive;
      }
      std::cerr << rows.size() << " rows, " << failed << " FAIL, " << inconclusive << " INCONCLUSIVE\n";
      return failed ? exit_claim_failed : exit_ok;
    }

    if (*product) {
      SweepConfig cfg;
      cfg.budget = product_budget;
      const AnyGraph first = read_exchange(product_first);
      const AnyGraph second = read_exchange(product_second);
      if (first.index() != second.index()) throw parameter_error("factors must both be digraphs or both graphs");
      json out;
      Verdict verdict;
      if (const auto* d1 = std::get_if<Digraph>(&first)) {
        const ProductReport r = check_product(cfg, *d1, std::get<Digraph>(second));
        verdict = r.verdict;
        out = {{"first", r.first.upper},  {"second", r.second.upper},  {"product_lower", r.product.lower},
               {"product_upper", r.product.upper}, {"factor_min", r.factor_min}, {"lifted_proper", r.lifted_proper},
               {"bound_holds", r.bound_holds}, {"equality", r.equality}, {"verdict", to_string(r.verdict)}};
      } else {
        const GraphProductReport r = check_product(cfg, std::get<FamilyGraph>(first), std::get<FamilyGraph>(second));
        verdict = r.verdict;
        out = {{"first_lower", r.first.lower},       {"first_upper", r.first.upper},
               {"second_lower", r.second.lower},     {"second_upper", r.second.upper},
               {"product_lower", r.product.lower},   {"product_upper", r.product.upper},
               {"product_exhaustive", r.product_exhaustive}, {"equality", r.equality},
               {"verdict", to_string(r.verdict)}};
      }
      const std::string text = out.dump(2) + "\n";
      if (product_out.empty()) std::cout << text;
      else write_text(product_out, text);
      return verdict == Verdict::fail ? exit_claim_failed : exit_ok;
    }
  } catch (const parameter_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
