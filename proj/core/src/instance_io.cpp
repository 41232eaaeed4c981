#include "vexl/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace vexl {

using nlohmann::ordered_json;

const FunctionSequence& InstanceFile::sequence(const std::string& name) const {
  auto it = sequences.find(name);
  if (it == sequences.end()) throw InvariantError("no sequence named '" + name + "' in file");
  return it->second;
}

namespace {

// p and q entries: a positive number, or the string "inf".
XReal parse_exponent(const ordered_json& j, const char* what, std::size_t cell) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return XReal::infinity();
    throw ParseError(std::string(what) + " on cell " + std::to_string(cell) +
                     ": only \"inf\" is accepted as a string");
  }
  if (!j.is_number())
    throw ParseError(std::string(what) + " on cell " + std::to_string(cell) +
                     ": expected a number or \"inf\"");
  double v = j.get<double>();
  if (!(v > 0.0) || !std::isfinite(v))
    throw InvariantError(std::string(what) + " on cell " + std::to_string(cell) +
                         ": must be positive (class P requires exponents bounded away from 0)");
  return XReal(v);
}

}  // namespace

InstanceFile parse_instance_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }

  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array() ||
      doc["cells"].empty())
    throw ParseError("instance file needs a nonempty \"cells\" array");

  std::vector<double> measures;
  std::vector<XReal> p, q;
  std::size_t idx = 0;
  for (const auto& cell : doc["cells"]) {
    if (!cell.is_object() || !cell.contains("measure") || !cell.contains("p") ||
        !cell.contains("q"))
      throw ParseError("cell " + std::to_string(idx) + ": needs measure, p and q");
    if (!cell["measure"].is_number())
      throw ParseError("cell " + std::to_string(idx) + ": measure must be a number");
    double m = cell["measure"].get<double>();
    if (!(m > 0.0) || !std::isfinite(m))
      throw InvariantError("cell " + std::to_string(idx) + ": measure must be positive and finite");
    measures.push_back(m);
    p.push_back(parse_exponent(cell["p"], "p", idx));
    q.push_back(parse_exponent(cell["q"], "q", idx));
    ++idx;
  }
  const std::size_t cells = measures.size();

  std::map<std::string, FunctionSequence> sequences;
  if (doc.contains("sequences")) {
    if (!doc["sequences"].is_object()) throw ParseError("\"sequences\" must be an object");
    for (const auto& [name, rows] : doc["sequences"].items()) {
      if (!rows.is_array() || rows.empty())
        throw ParseError("sequence '" + name + "' must be a nonempty array of rows");
      std::vector<SimpleFunction> terms;
      for (const auto& row : rows) {
        if (!row.is_array())
          throw ParseError("sequence '" + name + "': each term must be an array of values");
        if (row.size() != cells)
          throw InvariantError("sequence '" + name + "': a term has " +
                               std::to_string(row.size()) + " values for " +
                               std::to_string(cells) + " cells");
        std::vector<double> values;
        for (const auto& v : row) {
          if (!v.is_number())
            throw ParseError("sequence '" + name + "': values must be numbers");
          double x = v.get<double>();
          if (!std::isfinite(x) || x < 0.0)
            throw InvariantError("sequence '" + name + "': values must be finite and >= 0");
          values.push_back(x);
        }
        terms.emplace_back(std::move(values));
      }
      sequences.emplace(name, FunctionSequence(std::move(terms)));
    }
  }

  try {
    return InstanceFile{Partition(std::move(measures)), ExponentPair(std::move(p), std::move(q)),
                        std::move(sequences)};
  } catch (const std::invalid_argument& e) {
    throw InvariantError(e.what());
  }
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str());
}

std::string format_number(double v) {
  if (std::isinf(v)) return "inf";
  return ordered_json(v).dump();
}

std::string serialize_instance(const InstanceFile& file) {
  ordered_json doc;
  doc["cells"] = ordered_json::array();
  for (std::size_t i = 0; i < file.partition.cell_count(); ++i) {
    ordered_json cell;
    cell["measure"] = file.partition.measure(i);
    XReal p = file.exponents.p(i), q = file.exponents.q(i);
    cell["p"] = p.is_inf() ? ordered_json("inf") : ordered_json(p.value());
    cell["q"] = q.is_inf() ? ordered_json("inf") : ordered_json(q.value());
    doc["cells"].push_back(std::move(cell));
  }
  doc["sequences"] = ordered_json::object();
  for (const auto& [name, seq] : file.sequences) {
    ordered_json rows = ordered_json::array();
    for (const auto& term : seq.terms()) rows.push_back(term.values());
    doc["sequences"][name] = std::move(rows);
  }
  return doc.dump(2) + "\n";
}

}  // namespace vexl
