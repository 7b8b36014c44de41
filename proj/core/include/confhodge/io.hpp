#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "confhodge/algebra.hpp"
#include "confhodge/hodge_table.hpp"

namespace confhodge {

inline constexpr std::string_view kToolVersion = "confhodge 1.0.0";

// JSON algebra file:
//   {"name": .., "complex_dimension": d,
//    "basis": [{"id": .., "degree": .., "p": .., "q": ..}, ..],
//    "unit": id, "fundamental": id,
//    "products": [{"left": id, "right": id, "result": [["num/den", id], ..]}, ..],
//    "differential": [{"source": id, "result": [..]}, ..]}   (optional)
// Throws ParseError on malformed text or missing fields, ValidationError when
// the description is not well formed.
AlgebraSpec parse_algebra_spec(std::string_view text);
Algebra parse_algebra(std::string_view text);
Algebra load_algebra(const std::filesystem::path& path);

std::string algebra_to_json(const Algebra& algebra);

struct ResultMetadata {
  std::string algebra;
  int n = 0;
  std::string graph;
  std::string route;
};

// Deterministic JSON: fixed key order, rows [m, w, p, q, dim] sorted, one per line.
std::string format_result(const ResultMetadata& metadata, const HodgeTable& table);

struct ParsedResult {
  ResultMetadata metadata;
  std::string tool_version;
  HodgeTable table;
};

ParsedResult parse_result(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace confhodge
