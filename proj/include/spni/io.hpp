#ifndef SPNI_IO_HPP
#define SPNI_IO_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "spni/errors.hpp"
#include "spni/instance.hpp"
#include "spni/pareto.hpp"
#include "spni/point.hpp"
#include "spni/sp_decompose.hpp"

namespace spni {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- points

inline json coordinate_to_json(ExtNat v) {
  if (v.is_infinite())
    return "inf";
  return v.value();
}

inline ExtNat coordinate_from_json(const json& j, const std::string& what) {
  if (j.is_string() && j.get<std::string>() == "inf")
    return kInfinity;
  if (j.is_number_unsigned())
    return ExtNat(j.get<std::uint64_t>());
  throw ParseError(what + ": expected a nonnegative integer or \"inf\"");
}

inline ExtNat coordinate_from_text(std::string_view text, const std::string& what) {
  if (text == "inf")
    return kInfinity;
  if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError(what + ": expected a nonnegative integer or inf, got '" +
                     std::string(text) + "'");
  try {
    return ExtNat(std::stoull(std::string(text)));
  } catch (const std::out_of_range&) {
    throw ParseError(what + ": value out of range");
  }
}

// -------------------------------------------------------------- instances

namespace detail {

inline const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

inline std::string require_string(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string())
    throw ParseError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

inline std::uint64_t require_natural(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number_unsigned())
    throw ParseError(where + ": \"" + key + "\" must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

} // namespace detail

inline Instance instance_from_json(const json& j) {
  if (!j.is_object())
    throw ParseError("instance: expected a JSON object");
  const json& verts = detail::require(j, "vertices", "instance");
  if (!verts.is_array())
    throw ParseError("instance: \"vertices\" must be an array");
  std::vector<std::string> vertices;
  for (const json& v : verts) {
    if (!v.is_string())
      throw ParseError("instance: vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  const json& arc_list = detail::require(j, "arcs", "instance");
  if (!arc_list.is_array())
    throw ParseError("instance: \"arcs\" must be an array");
  std::vector<ArcSpec> arcs;
  for (std::size_t i = 0; i < arc_list.size(); ++i) {
    const json& a = arc_list[i];
    const std::string where = "arc #" + std::to_string(i);
    if (!a.is_object())
      throw ParseError(where + ": expected an object");
    arcs.push_back({detail::require_string(a, "id", where), detail::require_string(a, "tail", where),
                    detail::require_string(a, "head", where),
                    detail::require_natural(a, "l1", where), detail::require_natural(a, "l2", where),
                    detail::require_natural(a, "cost", where)});
  }
  return Instance(std::move(vertices), arcs, detail::require_string(j, "source", "instance"),
                  detail::require_string(j, "sink", "instance"),
                  detail::require_natural(j, "budget", "instance"));
}

inline Instance parse_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
  return instance_from_json(j);
}

inline json instance_to_json(const Instance& inst) {
  json arcs = json::array();
  for (const ArcSpec& a : inst.arc_specs())
    arcs.push_back({{"id", a.id}, {"tail", a.tail}, {"head", a.head}, {"l1", a.len1},
                    {"l2", a.len2}, {"cost", a.cost}});
  return {{"vertices", inst.vertices()},
          {"source", inst.vertex_name(inst.source())},
          {"sink", inst.vertex_name(inst.sink())},
          {"budget", inst.budget()},
          {"arcs", std::move(arcs)}};
}

// --------------------------------------------------------------- frontiers

/// Frontier point with the arc ids of its witnessing strategy.
struct FrontierRow {
  Point point;
  std::vector<std::string> strategy;
};

inline std::vector<FrontierRow> frontier_rows(const Instance& inst, const LabelSet& frontier,
                                              const std::vector<InterdictionStrategy>& strategies) {
  std::vector<FrontierRow> rows;
  rows.reserve(frontier.size());
  for (std::size_t i = 0; i < frontier.size(); ++i)
    rows.push_back({frontier[i], i < strategies.size() ? arc_ids(inst, strategies[i])
                                                       : std::vector<std::string>{}});
  return rows;
}

inline json frontier_to_json(const std::vector<FrontierRow>& rows) {
  json out = json::array();
  for (const FrontierRow& r : rows)
    out.push_back({{"f1", coordinate_to_json(r.point.f1)},
                   {"f2", coordinate_to_json(r.point.f2)},
                   {"strategy", r.strategy}});
  return out;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos)
    return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"')
      quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

} // namespace detail

/// Columns f1,f2,strategy_size,arc_ids with ids joined by ';'.
inline std::string frontier_to_csv(const std::vector<FrontierRow>& rows) {
  std::ostringstream os;
  os << "f1,f2,strategy_size,arc_ids\n";
  for (const FrontierRow& r : rows) {
    std::string ids;
    for (std::size_t i = 0; i < r.strategy.size(); ++i)
      ids += (i ? ";" : "") + r.strategy[i];
    os << r.point.f1 << ',' << r.point.f2 << ',' << r.strategy.size() << ','
       << detail::csv_field(ids) << '\n';
  }
  return os.str();
}

/// Points of a frontier file in either format (JSON array or CSV with
/// header). Strategies are ignored.
inline std::vector<Point> parse_frontier_points(std::string_view text) {
  std::vector<Point> points;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("frontier JSON: ") + e.what());
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string where = "frontier row #" + std::to_string(i);
      if (!j[i].is_object())
        throw ParseError(where + ": expected an object");
      points.push_back({coordinate_from_json(detail::require(j[i], "f1", where), where),
                        coordinate_from_json(detail::require(j[i], "f2", where), where)});
    }
    return points;
  }
  std::istringstream is{std::string(text)};
  std::string line;
  bool header = true;
  std::size_t row = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    if (header) {
      header = false;
      if (line.rfind("f1,f2", 0) != 0)
        throw ParseError("frontier CSV: expected header starting with f1,f2");
      continue;
    }
    const std::string where = "frontier CSV row " + std::to_string(++row);
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c1 == std::string::npos)
      throw ParseError(where + ": expected f1,f2,...");
    points.push_back({coordinate_from_text(std::string_view(line).substr(0, c1), where),
                      coordinate_from_text(std::string_view(line).substr(c1 + 1, c2 - c1 - 1),
                                           where)});
  }
  return points;
}

// ------------------------------------------------------------------- trees

/// Nested {"op": "leaf" | "series" | "parallel", ...} dump of a tree.
inline json tree_to_json(const DecompositionTree& tree, const Instance& inst) {
  std::vector<json> built(tree.nodes.size());
  for (NodeIndex i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& n = tree.nodes[i];
    json node = {{"op", to_string(n.kind)},
                 {"source", inst.vertex_name(n.source)},
                 {"sink", inst.vertex_name(n.sink)}};
    if (n.kind == NodeKind::leaf)
      node["arc"] = inst.arc(n.arc).id;
    else
      node["children"] = json::array({std::move(built[n.left]), std::move(built[n.right])});
    built[i] = std::move(node);
  }
  return tree.nodes.empty() ? json() : std::move(built[tree.root]);
}

// ------------------------------------------------------------------- files

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out)
    throw InputError("write to '" + path + "' failed");
}

inline Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

} // namespace spni

#endif // SPNI_IO_HPP
