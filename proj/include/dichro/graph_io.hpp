#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "dichro/colorings.hpp"
#include "dichro/digraph.hpp"
#include "dichro/solvers.hpp"

namespace dichro {

// Exchange format: "p digraph <n> <m>" then "a <u> <v>" per arc, or
// "p graph <n> <m>" then "e <u> <v>" per edge. 0-based ids, LF endings.
std::string to_exchange(const Digraph& d);
std::string to_exchange(const FamilyGraph& g);

using AnyGraph = std::variant<FamilyGraph, Digraph>;

// Throws parameter_error with a line number on malformed input.
AnyGraph parse_exchange(std::istream& in);
AnyGraph read_exchange(const std::filesystem::path& path);
Digraph read_digraph(const std::filesystem::path& path);
FamilyGraph read_graph(const std::filesystem::path& path);

// Label sidecar: JSON array of ascending 1-based element arrays.
std::string labels_to_json(const std::vector<KSubset>& labels);
std::vector<KSubset> labels_from_json(const std::string& text, int n);
std::vector<KSubset> read_labels(const std::filesystem::path& path, int n);

// {"palette": t, "colors": [...]}
std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const std::string& text);
Coloring read_coloring(const std::filesystem::path& path);

std::string certificate_to_json(const AcyclicityCertificate& cert);

// {"value","exact","lower","upper","coloring_file","witness_orientation_mask","nodes","seconds"}
std::string solve_result_to_json(const SolveResult& r, const std::string& coloring_file, bool with_timing);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace dichro
