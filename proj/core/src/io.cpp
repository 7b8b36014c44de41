#include "confhodge/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "confhodge/error.hpp"

namespace confhodge {

using nlohmann::json;

namespace {

const json& field(const json& object, const char* key, const std::string& where) {
  if (!object.is_object()) throw ParseError(where + " is not an object");
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(where + " has no field '" + key + "'");
  return *it;
}

std::string string_field(const json& object, const char* key, const std::string& where) {
  const json& v = field(object, key, where);
  if (!v.is_string()) throw ParseError(where + "." + key + " must be a string");
  return v.get<std::string>();
}

int int_field(const json& object, const char* key, const std::string& where) {
  const json& v = field(object, key, where);
  if (!v.is_number_integer()) throw ParseError(where + "." + key + " must be an integer");
  return v.get<int>();
}

const json& array_field(const json& object, const char* key, const std::string& where) {
  const json& v = field(object, key, where);
  if (!v.is_array()) throw ParseError(where + "." + key + " must be a list");
  return v;
}

std::vector<Term> parse_terms(const json& list, const std::string& where) {
  if (!list.is_array()) throw ParseError(where + " must be a list");
  std::vector<Term> terms;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const json& t = list[k];
    const std::string at = where + "[" + std::to_string(k) + "]";
    if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_string())
      throw ParseError(at + " must be [\"num/den\", id]");
    terms.emplace_back(parse_rational(t[0].get<std::string>()), t[1].get<std::string>());
  }
  return terms;
}

json terms_to_json(const std::vector<Term>& terms) {
  json out = json::array();
  for (const auto& [c, id] : terms) out.push_back({format_rational(c), id});
  return out;
}

}  // namespace

AlgebraSpec parse_algebra_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed algebra document: ") + e.what());
  }
  AlgebraSpec spec;
  spec.name = string_field(doc, "name", "algebra");
  spec.complex_dim = int_field(doc, "complex_dimension", "algebra");
  const json& basis = array_field(doc, "basis", "algebra");
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::string at = "basis[" + std::to_string(k) + "]";
    spec.basis.push_back({string_field(basis[k], "id", at), int_field(basis[k], "degree", at),
                          int_field(basis[k], "p", at), int_field(basis[k], "q", at)});
  }
  spec.unit = string_field(doc, "unit", "algebra");
  if (doc.contains("fundamental")) spec.fundamental = string_field(doc, "fundamental", "algebra");
  const json& products = array_field(doc, "products", "algebra");
  for (std::size_t k = 0; k < products.size(); ++k) {
    const std::string at = "products[" + std::to_string(k) + "]";
    spec.products.push_back({string_field(products[k], "left", at), string_field(products[k], "right", at),
                             parse_terms(field(products[k], "result", at), at + ".result")});
  }
  if (doc.contains("differential")) {
    const json& differential = array_field(doc, "differential", "algebra");
    for (std::size_t k = 0; k < differential.size(); ++k) {
      const std::string at = "differential[" + std::to_string(k) + "]";
      spec.differential.push_back({string_field(differential[k], "source", at),
                                   parse_terms(field(differential[k], "result", at), at + ".result")});
    }
  }
  return spec;
}

Algebra parse_algebra(std::string_view text) { return Algebra(parse_algebra_spec(text)); }

Algebra load_algebra(const std::filesystem::path& path) { return parse_algebra(read_file(path)); }

std::string algebra_to_json(const Algebra& algebra) {
  const AlgebraSpec& spec = algebra.spec();
  json doc = json::object();
  doc["name"] = spec.name;
  doc["complex_dimension"] = spec.complex_dim;
  json basis = json::array();
  for (const auto& b : spec.basis)
    basis.push_back({{"id", b.id}, {"degree", b.degree}, {"p", b.hodge_p}, {"q", b.hodge_q}});
  doc["basis"] = basis;
  doc["unit"] = spec.unit;
  if (!spec.fundamental.empty()) doc["fundamental"] = spec.fundamental;
  json products = json::array();
  for (const auto& p : spec.products)
    products.push_back({{"left", p.left}, {"right", p.right}, {"result", terms_to_json(p.result)}});
  doc["products"] = products;
  if (!spec.differential.empty()) {
    json differential = json::array();
    for (const auto& d : spec.differential)
      differential.push_back({{"source", d.source}, {"result", terms_to_json(d.result)}});
    doc["differential"] = differential;
  }
  return doc.dump(2) + "\n";
}

std::string format_result(const ResultMetadata& metadata, const HodgeTable& table) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"tool_version\": " << json(std::string(kToolVersion)).dump() << ",\n";
  out << "  \"algebra\": " << json(metadata.algebra).dump() << ",\n";
  out << "  \"n\": " << metadata.n << ",\n";
  out << "  \"graph\": " << json(metadata.graph).dump() << ",\n";
  out << "  \"route\": " << json(metadata.route).dump() << ",\n";
  out << "  \"space\": " << json(to_string(table.kind())).dump() << ",\n";
  out << "  \"complex_dimension\": " << table.complex_dim() << ",\n";
  out << "  \"rows\": [";
  bool first = true;
  for (const auto& [k, dim] : table.entries()) {
    out << (first ? "\n" : ",\n") << "    [" << k.m << ", " << k.w << ", " << k.p << ", " << k.q << ", " << dim
        << "]";
    first = false;
  }
  out << (first ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

ParsedResult parse_result(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed result document: ") + e.what());
  }
  ResultMetadata meta{string_field(doc, "algebra", "result"), int_field(doc, "n", "result"),
                      string_field(doc, "graph", "result"), string_field(doc, "route", "result")};
  const std::string space = string_field(doc, "space", "result");
  SpaceKind kind;
  if (space == to_string(SpaceKind::Relative))
    kind = SpaceKind::Relative;
  else if (space == to_string(SpaceKind::Open))
    kind = SpaceKind::Open;
  else
    throw ParseError("unknown space '" + space + "'");
  HodgeTable table(kind, meta.n, int_field(doc, "complex_dimension", "result"), meta.graph);
  for (const auto& row : array_field(doc, "rows", "result")) {
    if (!row.is_array() || row.size() != 5) throw ParseError("result rows must have five integers");
    for (const auto& x : row)
      if (!x.is_number_integer()) throw ParseError("result rows must have five integers");
    if (row[4].get<long long>() < 0) throw ParseError("negative dimension in result row");
    table.add({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(), row[3].get<int>()},
              row[4].get<std::size_t>());
  }
  return {meta, string_field(doc, "tool_version", "result"), std::move(table)};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace confhodge
