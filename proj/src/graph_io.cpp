#include "dichro/graph_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "dichro/errors.hpp"
#include "json.hpp"

namespace dichro {

using json = nlohmann::json;

namespace {

template <class Pairs>
std::string exchange_text(const char* kind, char tag, std::size_t n, const Pairs& pairs) {
  std::string out = std::string("p ") + kind + " " + std::to_string(n) + " " + std::to_string(pairs.size()) + "\n";
  for (auto [u, v] : pairs) {
    out += tag;
    out += ' ' + std::to_string(u) + ' ' + std::to_string(v) + '\n';
  }
  return out;
}

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw parameter_error("line " + std::to_string(line) + ": " + why);
}

}  // namespace

std::string to_exchange(const Digraph& d) { return exchange_text("digraph", 'a', d.vertex_count(), d.arcs()); }

std::string to_exchange(const FamilyGraph& g) { return exchange_text("graph", 'e', g.vertex_count(), g.edges()); }

AnyGraph parse_exchange(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  bool directed = false;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> pairs;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') malformed(number, "CR line endings are not accepted");
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (!have_header) {
      std::string kind;
      if (tag != "p" || !(fields >> kind >> n >> m) || (kind != "digraph" && kind != "graph"))
        malformed(number, "expected 'p digraph <n> <m>' or 'p graph <n> <m>'");
      directed = kind == "digraph";
      have_header = true;
      continue;
    }
    const std::string want = directed ? "a" : "e";
    long long u = -1, v = -1;
    if (tag != want || !(fields >> u >> v)) malformed(number, "expected '" + want + " <u> <v>'");
    std::string rest;
    if (fields >> rest) malformed(number, "trailing data");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      malformed(number, "vertex id out of range");
    pairs.emplace_back(static_cast<vertex_id>(u), static_cast<vertex_id>(v));
  }
  if (!have_header) throw parameter_error("missing 'p' header line");
  if (pairs.size() != m)
    throw parameter_error("header announces " + std::to_string(m) + " lines, found " + std::to_string(pairs.size()));
  if (directed) return Digraph(n, std::move(pairs));
  return FamilyGraph(n, std::move(pairs));
}

AnyGraph read_exchange(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parameter_error("cannot open " + path.string());
  return parse_exchange(in);
}

Digraph read_digraph(const std::filesystem::path& path) {
  auto any = read_exchange(path);
  if (auto* d = std::get_if<Digraph>(&any)) return std::move(*d);
  throw parameter_error(path.string() + " holds an undirected graph, expected a digraph");
}

FamilyGraph read_graph(const std::filesystem::path& path) {
  auto any = read_exchange(path);
  if (auto* g = std::get_if<FamilyGraph>(&any)) return std::move(*g);
  throw parameter_error(path.string() + " holds a digraph, expected an undirected graph");
}

std::string labels_to_json(const std::vector<KSubset>& labels) {
  json out = json::array();
  for (const auto& a : labels) out.push_back(a.elements());
  return out.dump() + "\n";
}

std::vector<KSubset> labels_from_json(const std::string& text, int n) {
  std::vector<KSubset> out;
  try {
    for (const auto& entry : json::parse(text)) {
      const auto elements = entry.get<std::vector<int>>();
      if (!std::is_sorted(elements.begin(), elements.end())) throw parameter_error("label elements must ascend");
      out.push_back(KSubset::from_elements(elements, n));
    }
  } catch (const json::exception& e) {
    throw parameter_error(std::string("bad label file: ") + e.what());
  }
  return out;
}

std::vector<KSubset> read_labels(const std::filesystem::path& path, int n) {
  return labels_from_json(read_text(path), n);
}

std::string coloring_to_json(const Coloring& c) {
  json out;
  out["palette"] = c.palette;
  out["colors"] = c.colors;
  return out.dump() + "\n";
}

Coloring coloring_from_json(const std::string& text) {
  Coloring c;
  try {
    const json in = json::parse(text);
    c.palette = in.at("palette").get<int>();
    c.colors = in.at("colors").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw parameter_error(std::string("bad coloring file: ") + e.what());
  }
  validate(c);
  return c;
}

Coloring read_coloring(const std::filesystem::path& path) { return coloring_from_json(read_text(path)); }

std::string certificate_to_json(const AcyclicityCertificate& cert) {
  json out;
  if (const auto* topo = std::get_if<TopoOrder>(&cert)) {
    out["kind"] = "topo_order";
    out["vertices"] = topo->order;
  } else {
    out["kind"] = "cycle";
    out["vertices"] = std::get<DirectedCycle>(cert).vertices;
  }
  return out.dump() + "\n";
}

std::string solve_result_to_json(const SolveResult& r, const std::string& coloring_file, bool with_timing) {
  json out;
  out["value"] = r.exact ? json(r.upper) : json(nullptr);
  out["exact"] = r.exact;
  out["lower"] = r.lower;
  out["upper"] = r.upper;
  out["coloring_file"] = coloring_file;
  out["witness_orientation_mask"] =
      r.witness_orientation_mask ? json(*r.witness_orientation_mask) : json(nullptr);
  out["nodes"] = r.nodes;
  out["seconds"] = with_timing ? r.seconds : 0.0;
  return out.dump(2) + "\n";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parameter_error("cannot write " + path.string());
  out << text;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parameter_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace dichro
