#include "pmod/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "json.hpp"
#include "pmod/errors.hpp"

namespace pmod {
namespace {

using Json = nlohmann::ordered_json;

Graph build(bool directed, std::vector<std::string> labels, std::vector<Edge> edges,
            std::vector<double> sigma) {
  return Graph(directed, std::move(labels), std::move(edges), std::move(sigma));
}

std::string describe_json_field(std::size_t index, const char* field) {
  return "edge " + std::to_string(index) + ": " + field;
}

Graph parse_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("parse error: top level must be an object");

  bool directed = false;
  if (doc.contains("directed")) {
    if (!doc["directed"].is_boolean()) throw InputError("\"directed\" must be a boolean");
    directed = doc["directed"].get<bool>();
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InputError("\"vertices\" must be an array of labels");
  }
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw InputError("vertex labels must be strings");
    const auto label = v.get<std::string>();
    if (!index.emplace(label, static_cast<VertexId>(labels.size())).second) {
      throw InputError("duplicate vertex " + label);
    }
    labels.push_back(label);
  }

  std::vector<Edge> edges;
  std::vector<double> sigma;
  std::set<std::pair<VertexId, VertexId>> seen;
  const Json empty = Json::array();
  const Json& list = doc.contains("edges") ? doc["edges"] : empty;
  if (!list.is_array()) throw InputError("\"edges\" must be an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Json& rec = list[i];
    if (!rec.is_object()) throw InputError(describe_json_field(i, "must be an object"));
    auto endpoint = [&](const char* key) {
      if (!rec.contains(key) || !rec[key].is_string()) {
        throw InputError(describe_json_field(i, key) + " must be a vertex label");
      }
      const auto label = rec[key].get<std::string>();
      const auto it = index.find(label);
      if (it == index.end()) {
        throw InputError(describe_json_field(i, "unknown vertex ") + label);
      }
      return it->second;
    };
    const VertexId tail = endpoint("tail");
    const VertexId head = endpoint("head");
    double s = 1.0;
    if (rec.contains("sigma")) {
      if (!rec["sigma"].is_number()) throw InputError(describe_json_field(i, "sigma must be a number"));
      s = rec["sigma"].get<double>();
    }
    if (!(s > 0.0) || !std::isfinite(s)) throw InputError(describe_json_field(i, "nonpositive weight"));
    const std::pair<VertexId, VertexId> key =
        directed ? std::pair{tail, head} : std::pair{std::min(tail, head), std::max(tail, head)};
    if (!seen.insert(key).second) throw InputError(describe_json_field(i, "duplicate edge"));
    edges.push_back({tail, head});
    sigma.push_back(s);
  }
  return build(directed, std::move(labels), std::move(edges), std::move(sigma));
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Graph parse_edgelist(std::string_view text) {
  std::optional<bool> directed;
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Edge> edges;
  std::vector<double> sigma;
  std::set<std::pair<VertexId, VertexId>> seen;

  auto vertex = [&](std::string_view label) {
    auto [it, added] = index.emplace(std::string(label), static_cast<VertexId>(labels.size()));
    if (added) labels.emplace_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (!directed) {
      if (fields.size() == 1 && fields[0] == "directed") {
        directed = true;
      } else if (fields.size() == 1 && fields[0] == "undirected") {
        directed = false;
      } else {
        throw InputError(where + "expected header 'directed' or 'undirected'");
      }
      continue;
    }
    if (fields.size() < 2 || fields.size() > 3) {
      throw InputError(where + "expected 'tail head [sigma]'");
    }
    double s = 1.0;
    if (fields.size() == 3) {
      const auto f = fields[2];
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), s);
      if (ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(s)) {
        throw InputError(where + "malformed number '" + std::string(f) + "'");
      }
      if (!(s > 0.0)) throw InputError(where + "nonpositive weight");
    }
    if (fields[0] == fields[1]) throw InputError(where + "self-loop");
    const VertexId tail = vertex(fields[0]);
    const VertexId head = vertex(fields[1]);
    const std::pair<VertexId, VertexId> key =
        *directed ? std::pair{tail, head} : std::pair{std::min(tail, head), std::max(tail, head)};
    if (!seen.insert(key).second) throw InputError(where + "duplicate edge");
    edges.push_back({tail, head});
    sigma.push_back(s);
  }
  if (!directed) throw InputError("parse error: missing 'directed' or 'undirected' header");
  if (labels.empty()) throw InputError("parse error: the graph has no edges");
  return build(*directed, std::move(labels), std::move(edges), std::move(sigma));
}

std::string shortest_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string serialize_edgelist(const Graph& g) {
  // The edge-list form lists vertices by first appearance and cannot name
  // isolated ones; refuse graphs it would not reproduce.
  std::vector<char> seen(g.vertex_count(), 0);
  VertexId next = 0;
  for (const Edge& e : g.edges()) {
    for (VertexId v : {e.tail, e.head}) {
      if (seen[v]) continue;
      if (v != next) throw InputError("edge-list form cannot preserve this vertex order");
      seen[v] = 1;
      ++next;
    }
  }
  if (next != g.vertex_count()) throw InputError("edge-list form cannot hold isolated vertices");
  for (const auto& label : g.labels()) {
    for (char c : label) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '#') {
        throw InputError("label '" + label + "' cannot be written as an edge list");
      }
    }
  }
  std::ostringstream out;
  out << (g.directed() ? "directed" : "undirected") << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << g.label(ed.tail) << ' ' << g.label(ed.head) << ' ' << shortest_double(g.sigma(e))
        << '\n';
  }
  return out.str();
}

std::string serialize_json(const Graph& g) {
  Json doc;
  doc["directed"] = g.directed();
  doc["vertices"] = Json::array();
  for (const auto& l : g.labels()) doc["vertices"].push_back(l);
  doc["edges"] = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    doc["edges"].push_back(
        Json{{"tail", g.label(ed.tail)}, {"head", g.label(ed.head)}, {"sigma", g.sigma(e)}});
  }
  return doc.dump(2) + "\n";
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::json ? parse_json(text) : parse_edgelist(text);
}

GraphFormat parse_format(std::string_view name) {
  if (name == "json") return GraphFormat::json;
  if (name == "edgelist") return GraphFormat::edgelist;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::json ? serialize_json(g) : serialize_edgelist(g);
}

} // namespace pmod
