#include "recov/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace recov::io {

using nlohmann::json;

namespace {

std::string field_text(const json& node, const char* key) {
  if (!node.contains(key)) throw InputError(std::string("node is missing field '") + key + "'");
  const json& v = node.at(key);
  if (v.is_string()) return v.get<std::string>();
  throw InputError(std::string("field '") + key + "' must be a decimal or p/q string");
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(line);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) throw InputError("malformed integer '" + text + "'");
  return v;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array())
    throw InputError("scenario must be an object with a 'nodes' array");
  std::vector<NodeSpec> specs;
  for (const json& node : doc["nodes"]) {
    if (!node.is_object()) throw InputError("each node must be an object");
    if (!node.contains("id") || !node["id"].is_number_integer())
      throw InputError("each node needs an integer 'id'");
    specs.push_back(NodeSpec{node["id"].get<NodeId>(), Health::parse(field_text(node, "v0")),
                             Weight::parse(field_text(node, "w")), Rate::parse(field_text(node, "inc")),
                             Rate::parse(field_text(node, "dec"))});
  }
  return Scenario(std::move(specs));
}

std::string serialize_scenario(const Scenario& scenario) {
  json nodes = json::array();
  for (const auto& n : scenario.nodes())
    nodes.push_back(json{{"id", n.id},
                         {"v0", n.v0.value().to_string()},
                         {"w", n.w.value().to_string()},
                         {"inc", n.inc.value().to_string()},
                         {"dec", n.dec.value().to_string()}});
  return json{{"nodes", nodes}}.dump(2) + "\n";
}

Scenario load_scenario(const std::filesystem::path& path) { return parse_scenario(read_file(path)); }

void save_scenario(const std::filesystem::path& path, const Scenario& scenario) {
  write_file(path, serialize_scenario(scenario));
}

void write_trace_csv(std::ostream& os, const Trace& trace) {
  const std::size_t n = trace.rows.empty() ? 0 : trace.rows.front().healths.size();
  os << "t,action";
  for (std::size_t j = 1; j <= n; ++j) os << ",v_" << j;
  for (std::size_t j = 1; j <= n; ++j) os << ",status_" << j;
  os << '\n';
  for (const auto& row : trace.rows) {
    os << row.t << ',';
    if (row.action) os << *row.action;
    for (const auto& v : row.healths) os << ',' << v.to_string();
    for (auto s : row.statuses) os << ',' << to_string(s);
    os << '\n';
  }
}

std::string trace_csv(const Trace& trace) {
  std::ostringstream os;
  write_trace_csv(os, trace);
  return os.str();
}

std::vector<TraceRow> parse_trace_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw InputError("empty trace CSV");
  auto header = split(line, ',');
  if (header.size() < 2 || header[0] != "t" || header[1] != "action" || (header.size() - 2) % 2 != 0)
    throw InputError("malformed trace CSV header");
  const std::size_t n = (header.size() - 2) / 2;
  for (std::size_t j = 0; j < n; ++j) {
    if (header[2 + j] != "v_" + std::to_string(j + 1) ||
        header[2 + n + j] != "status_" + std::to_string(j + 1))
      throw InputError("malformed trace CSV header");
  }

  std::vector<TraceRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto cells = split(line, ',');
    if (cells.size() != header.size()) throw InputError("trace CSV row has the wrong number of cells");
    TraceRow row;
    row.t = parse_int(cells[0]);
    if (!cells[1].empty()) row.action = static_cast<NodeId>(parse_int(cells[1]));
    for (std::size_t j = 0; j < n; ++j) {
      try {
        row.healths.push_back(Rational::parse(cells[2 + j]));
      } catch (const std::exception& e) {
        throw InputError(e.what());
      }
      row.statuses.push_back(parse_status(cells[2 + n + j]));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string histogram_csv(const Histogram& histogram) {
  std::ostringstream os;
  os << "repaired_count,frequency\n";
  for (const auto& [count, freq] : histogram.counts) os << count << ',' << freq << '\n';
  return os.str();
}

std::string solve_result_json(const SolveResult& result) {
  json doc{{"reward", result.reward.to_string()},
           {"sequence", targets_of(result.sequence)},
           {"repaired_set", result.repaired_set},
           {"method", std::string(method_name(result.method))},
           {"exhaustive", result.exhaustive}};
  return doc.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace recov::io
