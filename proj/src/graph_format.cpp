#include "lpalie/graph_format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace lpalie {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  GraphBuilder builder;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].text.front() == '#') continue;

    auto fail = [&](const Token& t, const std::string& msg) -> void { throw ParseError(line_no, t.column, msg); };
    auto lookup = [&](const Token& t) -> std::size_t {
      auto v = builder.find_vertex(t.text);
      if (!v) fail(t, "undeclared vertex '" + std::string(t.text) + "'");
      return *v;
    };

    const Token& keyword = tokens[0];
    if (keyword.text == "vertex") {
      if (tokens.size() != 2) fail(keyword, "expected 'vertex <label>'");
      if (builder.find_vertex(tokens[1].text)) {
        fail(tokens[1], "duplicate vertex label '" + std::string(tokens[1].text) + "'");
      }
      builder.add_vertex(std::string(tokens[1].text));
    } else if (keyword.text == "edge") {
      if (tokens.size() != 3 && tokens.size() != 4) fail(keyword, "expected 'edge <src> <dst> [<multiplicity>]'");
      std::size_t src = lookup(tokens[1]);
      std::size_t dst = lookup(tokens[2]);
      std::size_t multiplicity = 1;
      if (tokens.size() == 4) {
        const auto& t = tokens[3];
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), multiplicity);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
          fail(t, "multiplicity must be a positive integer");
        }
        if (multiplicity < 1) fail(t, "multiplicity must be at least 1");
        if (multiplicity > 1000000) fail(t, "multiplicity too large");
      }
      builder.add_edges(src, dst, multiplicity);
    } else if (keyword.text == "edge-label") {
      if (tokens.size() != 4) fail(keyword, "expected 'edge-label <name> <src> <dst>'");
      if (builder.edge_label_taken(tokens[1].text)) {
        fail(tokens[1], "duplicate edge label '" + std::string(tokens[1].text) + "'");
      }
      std::size_t src = lookup(tokens[2]);
      std::size_t dst = lookup(tokens[3]);
      builder.add_named_edge(std::string(tokens[1].text), src, dst);
    } else {
      fail(keyword, "unknown directive '" + std::string(keyword.text) + "'");
    }
  }
  try {
    return builder.build();
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, 1, e.what());
  }
}

Graph parse_structured_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, e.byte, std::string("malformed JSON: ") + e.what());
  }
  auto fail = [](const std::string& msg) -> void { throw ParseError(1, 1, msg); };
  if (!doc.is_object()) fail("structured graph must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) fail("missing 'vertices' array");
  if (!doc.contains("adjacency") || !doc["adjacency"].is_array()) fail("missing 'adjacency' array");
  const auto& vertices = doc["vertices"];
  const auto& adjacency = doc["adjacency"];
  if (vertices.empty()) fail("a graph needs at least one vertex");
  if (adjacency.size() != vertices.size()) fail("adjacency must have one row per vertex");

  GraphBuilder builder;
  for (const auto& v : vertices) {
    if (!v.is_string()) fail("vertex labels must be strings");
    const auto label = v.get<std::string>();
    if (label.empty() || label.find_first_of(" \t\r\n") != std::string::npos || label.front() == '#') {
      fail("invalid vertex label '" + label + "'");
    }
    if (builder.find_vertex(label)) fail("duplicate vertex label '" + label + "'");
    builder.add_vertex(label);
  }
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    const auto& row = adjacency[i];
    if (!row.is_array() || row.size() != vertices.size()) fail("adjacency row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_number_integer() || row[j].get<long long>() < 0) {
        fail("adjacency entries must be non-negative integers");
      }
      const auto count = row[j].get<long long>();
      if (count > 1000000) fail("adjacency entry too large");
      builder.add_edges(i, j, static_cast<std::size_t>(count));
    }
  }
  return builder.build();
}

Graph read_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_structured_graph(text);
  return parse_graph(text);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  GraphBuilder shadow;
  for (const auto& v : g.vertices()) {
    os << "vertex " << v.label << '\n';
    shadow.add_vertex(v.label);
  }
  const auto& edges = g.edges();
  std::size_t k = 0;
  while (k < edges.size()) {
    const auto& e = edges[k];
    if (shadow.next_auto_label(e.source, e.target) != e.label) {
      os << "edge-label " << e.label << ' ' << g.vertex(e.source).label << ' ' << g.vertex(e.target).label << '\n';
      shadow.add_named_edge(e.label, e.source, e.target);
      ++k;
      continue;
    }
    std::size_t run = 0;
    while (k + run < edges.size() && edges[k + run].source == e.source && edges[k + run].target == e.target &&
           shadow.next_auto_label(e.source, e.target) == edges[k + run].label) {
      shadow.add_edges(e.source, e.target, 1);
      ++run;
    }
    os << "edge " << g.vertex(e.source).label << ' ' << g.vertex(e.target).label;
    if (run > 1) os << ' ' << run;
    os << '\n';
    k += run;
  }
  return os.str();
}

}  // namespace lpalie
