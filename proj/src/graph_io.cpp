#include "lec/graph_io.hpp"

#include <unordered_map>
#include <unordered_set>

#include "lec/error.hpp"

namespace lec {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Token {
  std::string_view text;
  int column;
};

Graph parse_edge_list(std::string_view text) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = ids.emplace(std::string(token), static_cast<Vertex>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      if (i >= line.size()) break;
      const std::size_t start = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (tokens.empty() || tokens.front().text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() > 2) {
      throw ParseError(line_no, tokens[2].column, "expected at most two vertex labels");
    }
    if (tokens.size() == 1) {
      intern(tokens[0].text);
    } else {
      if (tokens[0].text == tokens[1].text) {
        throw ParseError(line_no, tokens[1].column,
                         "self-loop at vertex " + std::string(tokens[0].text));
      }
      const Vertex u = intern(tokens[0].text);
      const Vertex v = intern(tokens[1].text);
      const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                                static_cast<std::uint32_t>(std::max(u, v));
      if (!seen.insert(key).second) {
        throw ParseError(line_no, tokens[0].column,
                         "duplicate edge " + std::string(tokens[0].text) + " " +
                             std::string(tokens[1].text));
      }
      edges.push_back({u, v});
    }
    if (end == text.size()) break;
  }
  const int n = static_cast<int>(labels.size());
  return Graph(n, std::move(edges), std::move(labels));
}

std::string_view strip_line_end(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
    line.remove_suffix(1);
  }
  return line;
}

Graph parse_graph6_line(std::string_view line, int line_no) {
  int column = 1;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) {
    line.remove_prefix(kHeader.size());
    column += static_cast<int>(kHeader.size());
  }
  if (line.empty()) throw ParseError(line_no, column, "missing graph6 order byte");
  const int first = static_cast<unsigned char>(line[0]);
  if (first < 63 || first > 126) {
    throw ParseError(line_no, column, "invalid graph6 character");
  }
  if (first == 126) {
    throw ParseError(line_no, column,
                     "graph6 orders above " + std::to_string(kMaxGraph6Order) +
                         " are not supported; use the edge-list format");
  }
  const int n = first - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - 1 != bytes) {
    throw ParseError(line_no, column + static_cast<int>(std::min(line.size(), bytes + 1)),
                     "graph6 body has " + std::to_string(line.size() - 1) +
                         " bytes, expected " + std::to_string(bytes));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const std::size_t byte = 1 + bit / 6;
      const int value = static_cast<unsigned char>(line[byte]);
      if (value < 63 || value > 126) {
        throw ParseError(line_no, column + static_cast<int>(byte), "invalid graph6 character");
      }
      if (((value - 63) >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bytes > 0) {
    const int last = static_cast<unsigned char>(line[bytes]);
    if (last < 63 || last > 126) {
      throw ParseError(line_no, column + static_cast<int>(bytes), "invalid graph6 character");
    }
    const int padding = static_cast<int>(bytes * 6 - bits);
    if (((last - 63) & ((1 << padding) - 1)) != 0) {
      throw ParseError(line_no, column + static_cast<int>(bytes), "non-zero graph6 padding bits");
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace

std::vector<Graph> load_graph6_all(std::string_view text) {
  std::vector<Graph> graphs;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    const std::string_view line = strip_line_end(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    graphs.push_back(parse_graph6_line(line, line_no));
  }
  return graphs;
}

Graph load_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kEdgeList) return parse_edge_list(text);
  int line_no = 0;
  std::size_t pos = 0;
  std::optional<Graph> graph;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    const std::string_view line = strip_line_end(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    if (graph) throw ParseError(line_no, 1, "expected a single graph6 graph");
    graph = parse_graph6_line(line, line_no);
  }
  if (!graph) throw ParseError(line_no + 1, 1, "empty graph6 input");
  return std::move(*graph);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  std::vector<char> touched(g.order(), 0);
  for (const Edge& e : g.edges()) {
    out += g.label(e.u);
    out += ' ';
    out += g.label(e.v);
    out += '\n';
    touched[e.u] = touched[e.v] = 1;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!touched[v]) {
      out += g.label(v);
      out += '\n';
    }
  }
  return out;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw Error(ErrorCode::kInvalidArgument,
                "graph6 output is limited to " + std::to_string(kMaxGraph6Order) + " vertices");
  }
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
  out += '\n';
  return out;
}

std::string serialize(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? to_edge_list(g) : to_graph6(g);
}

}  // namespace lec
