#include "lec/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "lec/decomposition.hpp"
#include "lec/error.hpp"

namespace lec {

using nlohmann::json;

namespace {

std::pair<Vertex, Vertex> ordered(const Edge& e) { return {std::min(e.u, e.v), std::max(e.u, e.v)}; }

std::vector<EdgeId> sorted_edges(const Graph& g) {
  std::vector<EdgeId> ids(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) ids[e] = e;
  std::sort(ids.begin(), ids.end(),
            [&](EdgeId a, EdgeId b) { return ordered(g.edge(a)) < ordered(g.edge(b)); });
  return ids;
}

json colouring_value(const Graph& g, const EdgeColouring& c) {
  json edges = json::array();
  for (EdgeId e : sorted_edges(g)) {
    const auto [u, v] = ordered(g.edge(e));
    edges.push_back({{"u", g.label(u)}, {"v", g.label(v)}, {"c", c[e]}});
  }
  return {{"k", c.k()}, {"edges", edges}};
}

json label_list(const Graph& g, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

json edge_pairs(const Graph& g, std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end(),
            [&](EdgeId a, EdgeId b) { return ordered(g.edge(a)) < ordered(g.edge(b)); });
  json out = json::array();
  for (EdgeId e : ids) {
    const auto [u, v] = ordered(g.edge(e));
    out.push_back({g.label(u), g.label(v)});
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string label_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorCode::kInvalidArgument, "edge endpoint must be a string or an integer");
}

}  // namespace

std::string colouring_json(const Graph& g, const EdgeColouring& c) {
  require_total(g, c);
  return dump(colouring_value(g, c));
}

EdgeColouring colouring_from_json(const Graph& g, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset only; report it as column on line 1
    throw ParseError(1, static_cast<int>(e.byte), "malformed JSON");
  }
  if (doc.is_object() && doc.contains("colouring") && doc["colouring"].is_object()) doc = doc["colouring"];
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(ErrorCode::kInvalidArgument, "colouring needs an \"edges\" array");
  }
  std::map<std::string, Vertex> by_label;
  for (Vertex v = 0; v < g.order(); ++v) by_label[g.label(v)] = v;
  auto vertex = [&](const json& j) {
    const std::string label = label_of(j);
    const auto it = by_label.find(label);
    if (it == by_label.end()) throw Error(ErrorCode::kInvalidArgument, "unknown vertex " + label);
    return it->second;
  };
  std::vector<int> colours(g.size(), 0);
  for (const json& item : doc["edges"]) {
    if (!item.is_object() || !item.contains("u") || !item.contains("v") || !item.contains("c") ||
        !item["c"].is_number_integer()) {
      throw Error(ErrorCode::kInvalidArgument, "edge entries need \"u\", \"v\" and integer \"c\"");
    }
    const Vertex u = vertex(item["u"]), v = vertex(item["v"]);
    const auto e = g.edge_between(u, v);
    if (!e) throw Error(ErrorCode::kInvalidArgument, "no edge " + g.label(u) + " " + g.label(v));
    if (colours[*e] != 0) throw Error(ErrorCode::kInvalidArgument, "edge " + g.label(u) + " " + g.label(v) + " coloured twice");
    const long long c = item["c"].get<long long>();
    if (c <= 0 || c > 1'000'000) throw Error(ErrorCode::kInvalidArgument, "colours must be positive");
    colours[*e] = static_cast<int>(c);
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (colours[e] == 0) {
      const auto [u, v] = ordered(g.edge(e));
      throw Error(ErrorCode::kPartialColouring,
                  "edge " + g.label(u) + " " + g.label(v) + " has no colour");
    }
  }
  return EdgeColouring(std::move(colours));
}

std::string certificate_json(const Graph& g, const LecCertificate& cert) {
  json j = {{"lo", cert.lo},
            {"hi", cert.hi},
            {"reason", cert.reason},
            {"branch", cert.branch},
            {"provenance", cert.provenance},
            {"colouring", colouring_value(g, cert.colouring)}};
  j["lec"] = cert.value ? json(*cert.value) : json(nullptr);
  return dump(j);
}

std::string verification_json(const Graph& g, const Verification& v) {
  json j = {{"accepted", v.accepted}};
  if (v.failing_pair) {
    j["failing_pair"] = {g.label(v.failing_pair->first), g.label(v.failing_pair->second)};
  } else {
    j["failing_pair"] = nullptr;
  }
  return dump(j);
}

std::string blocks_json(const Graph& g) {
  const BlockDecomposition bd = block_decomposition(g);
  const CutEdgeGraph cut = cut_edge_graph(g, bd);
  json blocks = json::array();
  for (const Block& b : bd.blocks) {
    blocks.push_back({{"edges", edge_pairs(g, b.edges)}, {"vertices", label_list(g, b.vertices)}});
  }
  json c = {{"edges", edge_pairs(g, cut.edges)},
            {"max_degree", cut.max_degree},
            {"vertices", label_list(g, cut.vertices)}};
  c["reduced_max_weight"] = cut.reduced_max_weight ? json(*cut.reduced_max_weight) : json(nullptr);
  return dump({{"blocks", blocks}, {"cut_vertices", label_list(g, bd.cut_vertices)}, {"cut_edge_graph", c}});
}

std::string classification_json(const Graph& g, const SmallBlockClass& cls) {
  json mapping = json::object();
  for (const auto& [role, v] : cls.mapping) mapping[role] = g.label(v);
  json aliases = cls.aliases;
  return dump({{"tag", tag_name(cls.tag)},
               {"name", cls.name()},
               {"r", cls.r},
               {"s", cls.s},
               {"circumference", cls.circumference},
               {"mapping", mapping},
               {"aliases", aliases}});
}

std::string oracle_json(const Graph& g, const OracleResult& result) {
  return dump({{"lec", result.lec}, {"states", result.states}, {"colouring", colouring_value(g, result.colouring)}});
}

std::string to_dot(const Graph& g, const EdgeColouring& c, DotPalette palette) {
  require_total(g, c);
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << quote(g.label(v)) << ";\n";
  for (EdgeId e : sorted_edges(g)) {
    const auto [u, v] = ordered(g.edge(e));
    out << "  " << quote(g.label(u)) << " -- " << quote(g.label(v)) << " [label=\"" << c[e] << "\"";
    if (palette == DotPalette::kColour && c[e] >= 1 && c[e] <= 8) {
      out << ", color=\"" << kDotPalette[c[e] - 1] << "\"";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lec
