#include "dichro/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "dichro/colorings.hpp"
#include "dichro/errors.hpp"
#include "dichro/graph_io.hpp"
#include "dichro/parallel.hpp"
#include "json.hpp"

namespace dichro {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

long long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw parameter_error("config key '" + key + "': expected an integer, got '" + value + "'");
  }
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double x = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw parameter_error("config key '" + key + "': expected a number, got '" + value + "'");
  }
}

IntRange parse_range(const std::string& key, const std::string& value) {
  const auto dots = value.find("..");
  if (dots == std::string::npos) {
    const int x = static_cast<int>(parse_int(key, value));
    return {x, x};
  }
  IntRange r{static_cast<int>(parse_int(key, trim(value.substr(0, dots)))),
             static_cast<int>(parse_int(key, trim(value.substr(dots + 2))))};
  if (r.empty()) throw parameter_error("config key '" + key + "': empty range " + value);
  return r;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw parameter_error("config key '" + key + "': expected true or false");
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::filesystem::path certificate_dir(const SweepConfig& cfg) {
  if (!cfg.certificate_dir.empty()) return cfg.certificate_dir;
  if (!cfg.out.empty()) return std::filesystem::path(cfg.out.string() + ".certs");
  return "certs";
}

std::string write_certificate(const SweepConfig& cfg, const std::string& name, const json& body) {
  const auto path = certificate_dir(cfg) / (name + ".json");
  write_text(path, body.dump(2) + "\n");
  return path.generic_string();
}

json certificate_json(const AcyclicityCertificate& cert) { return json::parse(certificate_to_json(cert)); }

std::string instance_name(const std::string& family, int n, int k, int s) {
  return family + "_n" + std::to_string(n) + "_k" + std::to_string(k) + "_s" + std::to_string(s);
}

SweepRow make_row(std::string family, int n, int k, int s) {
  SweepRow row;
  row.family = std::move(family);
  row.n = n;
  row.k = k;
  row.s = s;
  return row;
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::pass;
}

struct Triple {
  int n, k, s;
};

template <class Keep>
std::vector<Triple> triples(const SweepConfig& cfg, Keep keep) {
  std::vector<Triple> out;
  for (int n = cfg.n.first; n <= cfg.n.last; ++n)
    for (int k = cfg.k.first; k <= cfg.k.last; ++k)
      for (int s = cfg.s.first; s <= cfg.s.last; ++s)
        if (keep(n, k, s)) out.push_back({n, k, s});
  return out;
}

template <class Job>
std::vector<SweepRow> run_rows(const SweepConfig& cfg, std::size_t count, Job job) {
  std::vector<SweepRow> rows(count);
  parallel_for(count, cfg.budget.threads, [&](std::uint64_t i) {
    const auto start = Clock::now();
    rows[i] = job(i);
    rows[i].seconds = seconds_since(start);
  });
  return rows;
}

// Budget for solves nested inside a parallel row: rows already use the pool.
SolveBudget row_budget(const SweepConfig& cfg) {
  SolveBudget b = cfg.budget;
  b.threads = 1;
  return b;
}

// Max over orientations of g: exhaustive within the cap, sampled otherwise.
SolveResult orientation_value(const SweepConfig& cfg, const FamilyGraph& g) {
  const auto mode = g.edge_count() <= cfg.budget.orientation_cap ? OrientationMode::exhaustive : OrientationMode::sample;
  return dichromatic_number_graph(g, mode, row_budget(cfg));
}

json optional_mask(const SolveResult& r) {
  return r.witness_orientation_mask ? json(*r.witness_orientation_mask) : json(nullptr);
}

void record_interval(SweepRow& row, const SolveResult& r) {
  row.dichromatic_lo = r.lower;
  row.dichromatic_hi = r.upper;
  row.exact = r.exact;
}

// Lower bound from a Paley tournament planted on a clique of g: some
// orientation of g contains QR_p, whose value is at least ceil(p / a) for a
// the largest transitive subtournament. QR_p is vertex-transitive, so a
// largest transitive set may be taken with source at position 0.
struct PaleyProbe {
  Digraph orientation;
  std::vector<vertex_id> clique;  // clique[i] plays residue i
  std::vector<vertex_id> chain;   // a largest transitive set, source first
  int bound = 0;
};

std::optional<PaleyProbe> paley_probe(const FamilyGraph& g, std::uint64_t node_limit) {
  std::vector<vertex_id> clique;
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    if (std::all_of(clique.begin(), clique.end(), [&](vertex_id u) { return g.adjacent(u, v); }))
      clique.push_back(v);
  }
  std::size_t p = 0;
  for (std::size_t q = 7; q <= std::min<std::size_t>(clique.size(), 4096); q += 4) {
    bool prime = true;
    for (std::size_t x = 2; prime && x * x <= q; ++x) prime = q % x != 0;
    if (prime) p = q;
  }
  if (p == 0) return std::nullopt;
  clique.resize(p);
  const Digraph qr = paley_tournament(p);
  std::vector<std::size_t> pos(g.vertex_count(), p);
  for (std::size_t i = 0; i < p; ++i) pos[clique[i]] = i;
  std::vector<Edge> arcs;
  for (auto [u, v] : g.edges()) {
    const bool planted = pos[u] < p && pos[v] < p;
    if (planted && qr.has_arc(static_cast<vertex_id>(pos[v]), static_cast<vertex_id>(pos[u])))
      arcs.emplace_back(v, u);
    else
      arcs.emplace_back(u, v);
  }
  PaleyProbe probe{Digraph(g.vertex_count(), std::move(arcs), g.labels()), clique, {}, 0};
  std::vector<vertex_id> after;
  for (vertex_id r : qr.out_neighbors(0)) after.push_back(clique[r]);
  const auto rest = max_transitive_subtournament(probe.orientation, after, node_limit);
  if (!rest) return std::nullopt;
  probe.chain.push_back(clique[0]);
  probe.chain.insert(probe.chain.end(), rest->begin(), rest->end());
  probe.bound = static_cast<int>((p + probe.chain.size() - 1) / probe.chain.size());
  return probe;
}

Digraph random_factor(std::uint64_t seed, int max_vertices) {
  std::mt19937_64 rng(seed);
  const int lo = std::min(2, max_vertices);
  const int n = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices - lo + 1));
  const double density = 0.3 + 0.4 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  return random_digraph(static_cast<std::size_t>(n), density, rng());
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text) {
  SweepConfig cfg;
  std::map<std::string, bool> seen;
  std::stringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw parameter_error("config line " + std::to_string(number) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (seen[key]) throw parameter_error("config key '" + key + "' given twice");
    seen[key] = true;

    if (key == "n") cfg.n = parse_range(key, value);
    else if (key == "k") cfg.k = parse_range(key, value);
    else if (key == "s") cfg.s = parse_range(key, value);
    else if (key == "modes") {
      for (const auto& mode : split_list(value)) {
        if (mode == "constructive-check") cfg.modes.constructive_check = true;
        else if (mode == "exact-chromatic") cfg.modes.exact_chromatic = true;
        else if (mode == "exact-dichromatic-graph") cfg.modes.exact_dichromatic_graph = true;
        else if (mode == "embedding") cfg.modes.embedding = true;
        else if (mode == "johnson-conjecture") cfg.modes.johnson_conjecture = true;
        else if (mode == "product-check") cfg.modes.product_check = true;
        else if (mode == "list-probe") cfg.modes.list_probe = true;
        else throw parameter_error("unknown mode '" + mode + "'");
      }
    } else if (key == "budget_nodes") cfg.budget.node_limit = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "budget_seconds") cfg.budget.time_limit = parse_double(key, value);
    else if (key == "orientation_cap") cfg.budget.orientation_cap = static_cast<std::size_t>(parse_int(key, value));
    else if (key == "sample_count") cfg.budget.sample_count = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "seed") cfg.budget.seed = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "threads") cfg.budget.threads = static_cast<unsigned>(parse_int(key, value));
    else if (key == "out") cfg.out = value;
    else if (key == "certificates") cfg.certificate_dir = value;
    else if (key == "format") {
      if (value != "csv" && value != "json") throw parameter_error("format must be csv or json");
      cfg.format = value;
    } else if (key == "timing") cfg.timing = parse_bool(key, value);
    else if (key == "vertex_cap") cfg.vertex_cap = static_cast<std::size_t>(parse_int(key, value));
    else if (key == "core") {
      std::vector<int> core;
      for (const auto& e : split_list(value)) core.push_back(static_cast<int>(parse_int(key, e)));
      cfg.core = core;
    } else if (key == "product_pairs") cfg.product_pairs = static_cast<int>(parse_int(key, value));
    else if (key == "product_max_vertices") cfg.product_max_vertices = static_cast<int>(parse_int(key, value));
    else if (key == "list_digraphs") cfg.list_digraphs = static_cast<int>(parse_int(key, value));
    else if (key == "list_max_vertices") cfg.list_max_vertices = static_cast<int>(parse_int(key, value));
    else if (key == "list_max_t") cfg.list_max_t = static_cast<int>(parse_int(key, value));
    else throw parameter_error("unknown config key '" + key + "'");
  }
  for (const char* required : {"budget_nodes", "budget_seconds", "orientation_cap", "sample_count", "seed"}) {
    if (!seen[required]) throw parameter_error(std::string("config is missing required key '") + required + "'");
  }
  validate(cfg.budget);
  const bool uses_family = cfg.modes.constructive_check || cfg.modes.embedding || cfg.modes.johnson_conjecture;
  if (uses_family && (cfg.n.empty() || cfg.k.empty())) throw parameter_error("config needs n and k ranges");
  if ((cfg.modes.constructive_check || cfg.modes.embedding) && cfg.s.empty())
    throw parameter_error("config needs an s range");
  return cfg;
}

std::vector<SweepRow> sweep_theorem_upper(const SweepConfig& cfg) {
  const auto jobs = triples(cfg, [](int n, int k, int s) { return s >= 0 && s < k && k >= 1 && 2 * k <= n; });
  return run_rows(cfg, jobs.size(), [&](std::size_t i) {
    const auto [n, k, s] = jobs[i];
    SweepRow row = make_row("kneser", n, k, s);
    const FamilyGraph g = gen_generalized_kneser(n, k, s, cfg.vertex_cap);
    const Digraph d = orient_min_rule(g);
    const Coloring c = clamped_min_coloring(n, k, s);
    const int t = n - 2 * k + s + 2;
    row.vertices = g.vertex_count();
    row.edges = g.edge_count();
    row.palette = c.used_colors();
    row.bound = t;
    const std::string name = instance_name("kneser", n, k, s);

    const VerifyReport report = verify_acyclic_coloring(d, c);
    const auto clash = verify_independent_class(g, c, t);
    if (!report.proper) {
      row.verdict = Verdict::fail;
      row.certificate = write_certificate(
          cfg, name + "_cycle",
          {{"claim", "clamped-min classes acyclic under the min rule"},
           {"color", *report.violating_class},
           {"certificate", certificate_json(report.per_class[*report.violating_class - 1])}});
    } else if (clash) {
      row.verdict = Verdict::fail;
      row.certificate = write_certificate(cfg, name + "_edge",
                                          {{"claim", "clamped class independent"},
                                           {"color", t},
                                           {"edge", {clash->first, clash->second}}});
    } else if (*row.palette > t) {
      row.verdict = Verdict::fail;
      row.certificate = write_certificate(cfg, name + "_palette", {{"claim", "palette within bound"},
                                                                    {"palette", *row.palette},
                                                                    {"bound", t}});
    }

    if (cfg.modes.exact_chromatic) {
      const SolveResult chi = chromatic_number(g, row_budget(cfg));
      if (chi.exact) row.chromatic = chi.upper;
      // Lovász: chi(KG(n,k)) = n - 2k + 2.
      if (s == 0 && chi.exact && chi.upper != n - 2 * k + 2 && row.verdict != Verdict::fail) {
        row.verdict = Verdict::fail;
        row.certificate = write_certificate(cfg, name + "_chromatic",
                                            {{"claim", "chromatic number equals n-2k+2"},
                                             {"chromatic", chi.upper},
                                             {"coloring", chi.coloring.colors}});
      } else if (s == 0 && !chi.exact) {
        row.verdict = combine(row.verdict, Verdict::inconclusive);
      }
    }

    if (cfg.modes.exact_dichromatic_graph) {
      const SolveResult r = orientation_value(cfg, g);
      record_interval(row, r);
      const auto probe = r.exact ? std::nullopt : paley_probe(g, cfg.budget.node_limit);
      if (probe && probe->bound > r.lower) {
        row.dichromatic_lo = probe->bound;
        row.exact = probe->bound == r.upper;
      }
      if (probe && probe->bound > t) {
        if (row.verdict != Verdict::fail)
          row.certificate = write_certificate(cfg, name + "_paley",
                                              {{"claim", "max-over-orientations value <= n-2k+s+2"},
                                               {"lower", probe->bound},
                                               {"bound", t},
                                               {"paley_order", probe->clique.size()},
                                               {"clique", probe->clique},
                                               {"largest_transitive", probe->chain},
                                               {"witness", to_exchange(probe->orientation)}});
        row.verdict = Verdict::fail;
      } else if (r.lower > t) {
        if (row.verdict != Verdict::fail)
          row.certificate = write_certificate(cfg, name + "_orientation",
                                              {{"claim", "max-over-orientations value <= n-2k+s+2"},
                                               {"lower", r.lower},
                                               {"bound", t},
                                               {"witness_orientation_mask", optional_mask(r)},
                                               {"witness", to_exchange(*r.witness)}});
        row.verdict = Verdict::fail;
      } else if (r.upper > t) {
        row.verdict = combine(row.verdict, Verdict::inconclusive);
      }
    }
    return row;
  });
}

std::vector<SweepRow> sweep_lower_bound_embedding(const SweepConfig& cfg) {
  const auto jobs = triples(cfg, [](int n, int k, int s) { return s >= 0 && s < k && k <= n; });
  return run_rows(cfg, jobs.size(), [&](std::size_t i) {
    const auto [n, k, s] = jobs[i];
    SweepRow row = make_row("kneser_core", n, k, s);
    std::optional<KSubset> core;
    // The override applies where it fits: s elements, all within [n].
    if (cfg.core && s > 0 && static_cast<int>(cfg.core->size()) == s &&
        *std::max_element(cfg.core->begin(), cfg.core->end()) <= n)
      core = KSubset::from_elements(*cfg.core, n);
    const CoreEmbedding e = embed_fixed_core(n, k, s, core);
    const FamilyGraph target = gen_generalized_kneser(n - s, k - s, 0, cfg.vertex_cap);
    row.vertices = e.core_graph.vertex_count();
    row.edges = e.core_graph.edge_count();
    // chi(KG(n-s, k-s)); the core graph is edgeless when n - s < 2(k - s).
    row.bound = std::max(1, n - 2 * k + s + 2);
    const std::string name = instance_name("kneser_core", n, k, s);
    if (const auto failure = verify_core_isomorphism(e, target)) {
      row.verdict = Verdict::fail;
      row.certificate = write_certificate(
          cfg, name + "_isomorphism",
          {{"claim", "A -> A minus core is an isomorphism onto KG(n-s,k-s)"},
           {"u", failure->u},
           {"v", failure->v},
           {"u_label", e.core_graph.labels()[failure->u].elements()},
           {"v_label", e.core_graph.labels()[failure->v].elements()},
           {"adjacent_in_core", failure->adjacent_in_core}});
      return row;
    }
    if (cfg.modes.exact_chromatic) {
      const SolveResult chi = chromatic_number(e.core_graph, row_budget(cfg));
      if (chi.exact) {
        row.chromatic = chi.upper;
        if (chi.upper != *row.bound) {
          row.verdict = Verdict::fail;
          row.certificate = write_certificate(cfg, name + "_chromatic",
                                              {{"claim", "chromatic number of the core equals n-2k+s+2"},
                                               {"chromatic", chi.upper},
                                               {"coloring", chi.coloring.colors}});
        }
      } else {
        row.verdict = combine(row.verdict, Verdict::inconclusive);
      }
    }
    if (cfg.modes.exact_dichromatic_graph) record_interval(row, orientation_value(cfg, e.core_graph));
    return row;
  });
}

std::vector<SweepRow> check_johnson(const SweepConfig& cfg) {
  std::vector<std::pair<int, int>> jobs;
  for (int n = cfg.n.first; n <= cfg.n.last; ++n)
    for (int k = cfg.k.first; k <= cfg.k.last; ++k)
      if (k >= 1 && k <= n) jobs.emplace_back(n, k);
  return run_rows(cfg, jobs.size(), [&](std::size_t i) {
    const auto [n, k] = jobs[i];
    SweepRow row = make_row("johnson", n, k, 0);
    const FamilyGraph g = gen_johnson(n, k, cfg.vertex_cap);
    const Digraph d = orient_sum_rule(g);
    const Coloring c = block_coloring_johnson(n, k);
    row.vertices = g.vertex_count();
    row.edges = g.edge_count();
    row.palette = c.used_colors();
    row.bound = (n + k - 1) / k;
    const std::string name = instance_name("johnson", n, k, 0);

    const auto whole = is_acyclic(d);
    const VerifyReport report = verify_acyclic_coloring(d, c);
    if (!is_topo_order(whole)) {
      row.verdict = Verdict::fail;
      row.certificate = write_certificate(
          cfg, name + "_cycle", {{"claim", "sum-rule orientation acyclic"}, {"certificate", certificate_json(whole)}});
    } else if (!report.proper) {
      row.verdict = Verdict::fail;
      row.certificate = write_certificate(cfg, name + "_class_cycle",
                                          {{"claim", "block classes acyclic under the sum rule"},
                                           {"color", *report.violating_class},
                                           {"certificate", certificate_json(report.per_class[*report.violating_class - 1])}});
    }
    if (cfg.modes.exact_chromatic) {
      const SolveResult chi = chromatic_number(g, row_budget(cfg));
      if (chi.exact) row.chromatic = chi.upper;
    }
    if (cfg.modes.exact_dichromatic_graph) record_interval(row, orientation_value(cfg, g));
    return row;
  });
}

ProductReport check_product(const SweepConfig& cfg, const Digraph& d1, const Digraph& d2) {
  ProductReport report;
  const SolveBudget budget = row_budget(cfg);
  report.first = dichromatic_number(d1, budget);
  report.second = dichromatic_number(d2, budget);
  const Digraph product = categorical_product(d1, d2);
  report.product = dichromatic_number(product, budget);
  const bool first_smaller = report.first.upper <= report.second.upper;
  report.factor_min = std::min(report.first.upper, report.second.upper);

  // Pull back the better factor's coloring through its projection.
  const std::size_t n2 = d2.vertex_count();
  const Coloring& base = first_smaller ? report.first.coloring : report.second.coloring;
  report.lifted.palette = base.palette;
  for (std::size_t v = 0; v < product.vertex_count(); ++v)
    report.lifted.colors.push_back(base.colors[first_smaller ? v / n2 : v % n2]);
  report.lifted_proper = product.vertex_count() == 0 || verify_acyclic_coloring(product, report.lifted).proper;

  report.bound_holds = report.product.lower <= report.factor_min && report.lifted_proper;
  const bool all_exact = report.first.exact && report.second.exact && report.product.exact;
  report.equality = all_exact && report.product.upper == report.factor_min;
  if (!report.bound_holds) report.verdict = Verdict::fail;
  else if (report.product.upper <= report.factor_min) report.verdict = Verdict::pass;
  else report.verdict = Verdict::inconclusive;
  return report;
}

GraphProductReport check_product(const SweepConfig& cfg, const FamilyGraph& g1, const FamilyGraph& g2) {
  GraphProductReport report;
  const SolveBudget budget = cfg.budget;
  auto value = [&](const FamilyGraph& g, bool& exhaustive) {
    exhaustive = g.edge_count() <= budget.orientation_cap;
    return dichromatic_number_graph(g, exhaustive ? OrientationMode::exhaustive : OrientationMode::sample, budget);
  };
  bool e1 = false, e2 = false;
  report.first = value(g1, e1);
  report.second = value(g2, e2);
  report.product = value(categorical_product(g1, g2), report.product_exhaustive);
  const int factor_min = std::min(report.first.upper, report.second.upper);
  const bool all_exact = report.first.exact && report.second.exact && report.product.exact;
  report.equality = all_exact && report.product.upper == factor_min;
  report.verdict = report.equality ? Verdict::pass : Verdict::inconclusive;
  return report;
}

std::vector<SweepRow> sweep_products(const SweepConfig& cfg) {
  if (cfg.product_max_vertices < 1) throw parameter_error("product_max_vertices must be positive");
  return run_rows(cfg, static_cast<std::size_t>(std::max(cfg.product_pairs, 0)), [&](std::size_t i) {
    const Digraph d1 = random_factor(mix(cfg.budget.seed, 2 * i), cfg.product_max_vertices);
    const Digraph d2 = random_factor(mix(cfg.budget.seed, 2 * i + 1), cfg.product_max_vertices);
    const ProductReport report = check_product(cfg, d1, d2);
    SweepRow row = make_row("product", static_cast<int>(d1.vertex_count()), static_cast<int>(d2.vertex_count()),
                 static_cast<int>(i));
    row.vertices = d1.vertex_count() * d2.vertex_count();
    row.edges = d1.arc_count() * d2.arc_count();
    row.palette = report.lifted.palette;
    row.bound = report.factor_min;
    record_interval(row, report.product);
    row.verdict = report.verdict;
    if (report.verdict == Verdict::fail) {
      row.certificate = write_certificate(cfg, "product_pair" + std::to_string(i),
                                          {{"claim", "product value <= min of factor values"},
                                           {"first", to_exchange(d1)},
                                           {"second", to_exchange(d2)},
                                           {"lifted_coloring", report.lifted.colors},
                                           {"product_lower", report.product.lower},
                                           {"factor_min", report.factor_min}});
    }
    return row;
  });
}

std::vector<SweepRow> probe_lists(const SweepConfig& cfg) {
  if (cfg.list_max_vertices < 1) throw parameter_error("list_max_vertices must be positive");
  ListCaps caps;
  caps.max_t = cfg.list_max_t;
  caps.max_vertices = static_cast<std::size_t>(std::max(cfg.list_max_vertices, 1));
  return run_rows(cfg, static_cast<std::size_t>(std::max(cfg.list_digraphs, 0)), [&](std::size_t i) {
    const Digraph d = random_factor(mix(cfg.budget.seed ^ 0x6c697374ULL, i), cfg.list_max_vertices);
    SweepRow row = make_row("list", static_cast<int>(d.vertex_count()), 0, static_cast<int>(i));
    row.vertices = d.vertex_count();
    row.edges = d.arc_count();
    const SolveResult chi = dichromatic_number(d, row_budget(cfg));
    row.palette = chi.upper;
    row.bound = chi.upper;
    // Smallest t whose every t-list assignment is colorable.
    std::optional<int> list_value;
    int refuted = 0;  // largest t with a non-colorable t-list assignment
    bool capped = false;
    for (int t = 1; t <= caps.max_t && !list_value && !capped; ++t) {
      try {
        if (list_dichromatic_at_most(d, t, caps).holds) list_value = t;
        else refuted = t;
      } catch (const cap_exceeded&) {
        capped = true;
      }
    }
    if (list_value) {
      row.dichromatic_lo = row.dichromatic_hi = *list_value;
      row.exact = true;
    } else {
      row.dichromatic_lo = refuted + 1;
      row.exact = false;
    }
    // Identical lists {1..t} reduce to plain t-colorings.
    if (list_value && *list_value < chi.lower) {
      row.verdict = Verdict::fail;
      row.certificate = write_certificate(cfg, "list_digraph" + std::to_string(i),
                                          {{"claim", "list value >= dichromatic number"},
                                           {"digraph", to_exchange(d)},
                                           {"list_value", *list_value},
                                           {"dichromatic", chi.lower}});
    } else if (*row.dichromatic_lo < chi.upper) {
      row.verdict = Verdict::inconclusive;
    }
    return row;
  });
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  std::vector<SweepRow> rows;
  auto append = [&rows](std::vector<SweepRow> more) {
    rows.insert(rows.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  if (cfg.modes.constructive_check) append(sweep_theorem_upper(cfg));
  if (cfg.modes.embedding) append(sweep_lower_bound_embedding(cfg));
  if (cfg.modes.johnson_conjecture) append(check_johnson(cfg));
  if (cfg.modes.product_check) append(sweep_products(cfg));
  if (cfg.modes.list_probe) append(probe_lists(cfg));
  return rows;
}

namespace {

std::string field(const std::optional<int>& x) { return x ? std::to_string(*x) : ""; }

std::string fixed3(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f", x);
  return buffer;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json optional_json(const std::optional<int>& x) { return x ? json(*x) : json(nullptr); }

}  // namespace

std::string rows_to_csv(const std::vector<SweepRow>& rows, bool timing) {
  std::string out = std::string(csv_header) + "\n";
  for (const auto& r : rows) {
    out += r.family + ',' + std::to_string(r.n) + ',' + std::to_string(r.k) + ',' + std::to_string(r.s) + ',' +
           std::to_string(r.vertices) + ',' + std::to_string(r.edges) + ',' + field(r.palette) + ',' +
           field(r.bound) + ',' + field(r.chromatic) + ',' + field(r.dichromatic_lo) + ',' +
           field(r.dichromatic_hi) + ',' + (r.exact ? (*r.exact ? "true" : "false") : "") + ',' +
           to_string(r.verdict) + ',' + csv_escape(r.certificate) + ',' + fixed3(timing ? r.seconds : 0.0) + '\n';
  }
  return out;
}

std::string rows_to_json(const std::vector<SweepRow>& rows, bool timing) {
  json out = json::array();
  for (const auto& r : rows) {
    json row;
    row["family"] = r.family;
    row["n"] = r.n;
    row["k"] = r.k;
    row["s"] = r.s;
    row["vertices"] = r.vertices;
    row["edges"] = r.edges;
    row["palette"] = optional_json(r.palette);
    row["bound"] = optional_json(r.bound);
    row["chromatic"] = optional_json(r.chromatic);
    row["dichromatic_lo"] = optional_json(r.dichromatic_lo);
    row["dichromatic_hi"] = optional_json(r.dichromatic_hi);
    row["exact"] = r.exact ? json(*r.exact) : json(nullptr);
    row["verdict"] = to_string(r.verdict);
    row["certificate"] = r.certificate;
    row["seconds"] = timing ? r.seconds : 0.0;
    out.push_back(std::move(row));
  }
  return out.dump(2) + "\n";
}

bool any_failed(const std::vector<SweepRow>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.verdict == Verdict::fail; });
}

}  // namespace dichro
