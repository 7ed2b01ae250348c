#include "lpalie/graph.hpp"

#include <stdexcept>

namespace lpalie {

Graph::Graph(std::vector<std::string> vertex_labels, std::vector<EdgeSpec> edges) {
  if (vertex_labels.empty()) throw std::invalid_argument("a graph needs at least one vertex");
  const std::size_t m = vertex_labels.size();
  vertices_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (vertex_labels[i].empty()) throw std::invalid_argument("empty vertex label");
    if (!vertex_by_label_.emplace(vertex_labels[i], i).second) {
      throw std::invalid_argument("duplicate vertex label '" + vertex_labels[i] + "'");
    }
    vertices_.push_back(Vertex{i, std::move(vertex_labels[i])});
  }
  out_.resize(m);
  in_.resize(m);
  edges_.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto& e = edges[k];
    if (e.label.empty()) throw std::invalid_argument("empty edge label");
    if (e.source >= m || e.target >= m) throw std::invalid_argument("edge '" + e.label + "' has an unknown endpoint");
    if (!edge_by_label_.emplace(e.label, k).second) {
      throw std::invalid_argument("duplicate edge label '" + e.label + "'");
    }
    out_[e.source].push_back(k);
    in_[e.target].push_back(k);
    edges_.push_back(Edge{k, std::move(e.label), e.source, e.target});
  }
}

std::optional<std::size_t> Graph::find_vertex(std::string_view label) const {
  auto it = vertex_by_label_.find(std::string(label));
  if (it == vertex_by_label_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Graph::find_edge(std::string_view label) const {
  auto it = edge_by_label_.find(std::string(label));
  if (it == edge_by_label_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Graph::sinks() const {
  std::vector<std::size_t> s;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (is_sink(v)) s.push_back(v);
  return s;
}

std::vector<std::size_t> Graph::regular_vertices() const {
  std::vector<std::size_t> s;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (is_regular(v)) s.push_back(v);
  return s;
}

// ---------------------------------------------------------------------------

std::size_t GraphBuilder::add_vertex(std::string label) {
  if (label.empty()) throw std::invalid_argument("empty vertex label");
  const std::size_t index = vertex_labels_.size();
  if (!vertex_by_label_.emplace(label, index).second) {
    throw std::invalid_argument("duplicate vertex label '" + label + "'");
  }
  vertex_labels_.push_back(std::move(label));
  return index;
}

std::optional<std::size_t> GraphBuilder::find_vertex(std::string_view label) const {
  auto it = vertex_by_label_.find(std::string(label));
  if (it == vertex_by_label_.end()) return std::nullopt;
  return it->second;
}

bool GraphBuilder::edge_label_taken(std::string_view label) const {
  return edge_labels_.contains(std::string(label));
}

std::string GraphBuilder::next_auto_label(std::size_t source, std::size_t target) const {
  const std::string stem = vertex_labels_.at(source) + "_" + vertex_labels_.at(target) + "_";
  auto it = auto_counter_.find(stem);
  std::size_t k = it == auto_counter_.end() ? 1 : it->second;
  while (edge_label_taken(stem + std::to_string(k))) ++k;
  return stem + std::to_string(k);
}

void GraphBuilder::add_edges(std::size_t source, std::size_t target, std::size_t multiplicity) {
  if (source >= vertex_labels_.size() || target >= vertex_labels_.size()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  const std::string stem = vertex_labels_[source] + "_" + vertex_labels_[target] + "_";
  for (std::size_t i = 0; i < multiplicity; ++i) {
    std::string label = next_auto_label(source, target);
    auto_counter_[stem] = std::stoul(label.substr(stem.size())) + 1;
    add_named_edge(std::move(label), source, target);
  }
}

void GraphBuilder::add_named_edge(std::string label, std::size_t source, std::size_t target) {
  if (label.empty()) throw std::invalid_argument("empty edge label");
  if (source >= vertex_labels_.size() || target >= vertex_labels_.size()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (!edge_labels_.emplace(label, edges_.size()).second) {
    throw std::invalid_argument("duplicate edge label '" + label + "'");
  }
  edges_.push_back(Graph::EdgeSpec{std::move(label), source, target});
}

Graph GraphBuilder::build() const { return Graph(vertex_labels_, edges_); }

// ---------------------------------------------------------------------------

IntMatrix adjacency_matrix(const Graph& g) {
  const std::size_t m = g.vertex_count();
  IntMatrix a(m, m);
  for (const auto& e : g.edges()) a(e.source, e.target) += 1;
  return a;
}

std::vector<IntVector> b_vectors(const Graph& g) {
  const std::size_t m = g.vertex_count();
  const IntMatrix a = adjacency_matrix(g);
  std::vector<IntVector> b(m, IntVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (!g.is_regular(i)) continue;
    b[i] = a.row(i);
    b[i][i] -= 1;
  }
  return b;
}

IntMatrix m_matrix(const Graph& g) {
  return IntMatrix::identity(g.vertex_count()) - adjacency_matrix(g).transpose();
}

Graph permute_vertices(const Graph& g, std::span<const std::size_t> order) {
  const std::size_t m = g.vertex_count();
  if (order.size() != m) throw std::invalid_argument("permutation length mismatch");
  std::vector<std::size_t> new_index(m, m);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (order[k] >= m || new_index[order[k]] != m) throw std::invalid_argument("not a permutation");
    new_index[order[k]] = k;
    labels.push_back(g.vertex(order[k]).label);
  }
  std::vector<Graph::EdgeSpec> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({e.label, new_index[e.source], new_index[e.target]});
  return Graph(std::move(labels), std::move(edges));
}

}  // namespace lpalie
