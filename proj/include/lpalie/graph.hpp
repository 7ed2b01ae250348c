#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lpalie/int_matrix.hpp"

namespace lpalie {

struct Vertex {
  std::size_t index;
  std::string label;
};

struct Edge {
  std::size_t index;
  std::string label;
  std::size_t source;
  std::size_t target;
};

/// Finite directed multigraph with individually named vertices and edges.
/// Declaration order of vertices is the index order of every matrix and
/// vector derived from the graph. Immutable once built.
class Graph {
 public:
  struct EdgeSpec {
    std::string label;
    std::size_t source;
    std::size_t target;
  };

  /// Throws std::invalid_argument on zero vertices, empty or duplicate labels,
  /// or endpoints out of range.
  Graph(std::vector<std::string> vertex_labels, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::optional<std::size_t> find_vertex(std::string_view label) const;
  std::optional<std::size_t> find_edge(std::string_view label) const;

  /// Edge indices leaving / entering v, in declaration order.
  std::span<const std::size_t> out_edges(std::size_t v) const { return out_.at(v); }
  std::span<const std::size_t> in_edges(std::size_t v) const { return in_.at(v); }

  std::size_t out_degree(std::size_t v) const { return out_.at(v).size(); }
  bool is_sink(std::size_t v) const { return out_.at(v).empty(); }
  /// Finite, nonzero out-degree. Every non-sink of a finite graph is regular.
  bool is_regular(std::size_t v) const { return !is_sink(v); }

  std::vector<std::size_t> sinks() const;
  std::vector<std::size_t> regular_vertices() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::unordered_map<std::string, std::size_t> vertex_by_label_;
  std::unordered_map<std::string, std::size_t> edge_by_label_;
};

/// Incremental construction with automatic `<src>_<dst>_<k>` edge labels.
class GraphBuilder {
 public:
  /// Returns the new vertex index; throws std::invalid_argument on a duplicate label.
  std::size_t add_vertex(std::string label);
  /// Adds `multiplicity` parallel edges with automatic labels.
  void add_edges(std::size_t source, std::size_t target, std::size_t multiplicity = 1);
  void add_named_edge(std::string label, std::size_t source, std::size_t target);

  std::optional<std::size_t> find_vertex(std::string_view label) const;
  /// The label the next automatic edge source -> target would receive.
  std::string next_auto_label(std::size_t source, std::size_t target) const;
  bool edge_label_taken(std::string_view label) const;

  Graph build() const;

 private:
  std::vector<std::string> vertex_labels_;
  std::unordered_map<std::string, std::size_t> vertex_by_label_;
  std::vector<Graph::EdgeSpec> edges_;
  std::unordered_map<std::string, std::size_t> edge_labels_;
  std::unordered_map<std::string, std::size_t> auto_counter_;
};

/// a_ij = number of edges v_i -> v_j.
IntMatrix adjacency_matrix(const Graph& g);

/// Row i of the adjacency matrix minus e_i for a regular v_i; zero for a sink.
std::vector<IntVector> b_vectors(const Graph& g);

/// I - A^t.
IntMatrix m_matrix(const Graph& g);

/// Graph with the same edges and vertices listed in `order` (order[k] is the
/// old index of the new k-th vertex). Edge order is preserved.
Graph permute_vertices(const Graph& g, std::span<const std::size_t> order);

}  // namespace lpalie
