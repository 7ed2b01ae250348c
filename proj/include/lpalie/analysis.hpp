#pragma once

// Reachability and cycle structure, and the graph conditions that decide
// whether the Leavitt path algebra of a finite graph is simple or purely
// infinite simple.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "lpalie/graph.hpp"

namespace lpalie {

/// (i, j) is true iff some path of length >= 0 runs v_i -> v_j.
class ReachabilityClosure {
 public:
  explicit ReachabilityClosure(std::size_t m) : m_(m), bits_(m * m, false) {}
  std::size_t size() const { return m_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * m_ + j]; }
  void set(std::size_t i, std::size_t j) { bits_[i * m_ + j] = true; }

 private:
  std::size_t m_;
  std::vector<bool> bits_;
};

ReachabilityClosure reachability(const Graph& g);

/// Strongly connected component index per vertex, components numbered in
/// order of their smallest vertex.
std::vector<std::size_t> strongly_connected_components(const Graph& g);

/// Vertices lying on some cycle, ascending.
std::vector<std::size_t> cycle_vertices(const Graph& g);

/// Every cycle without an exit, each as an edge sequence starting at its
/// smallest vertex; cycles listed by that vertex.
std::vector<std::vector<std::size_t>> cycles_without_exit(const Graph& g);
/// The first entry of cycles_without_exit, if any.
std::optional<std::vector<std::size_t>> find_cycle_without_exit(const Graph& g);

struct UnreachedTarget {
  enum class Kind { sink, cycle_vertex };
  std::size_t from;
  std::size_t target;
  Kind kind;
  friend bool operator==(const UnreachedTarget&, const UnreachedTarget&) = default;
};

struct CycleWithoutExit {
  std::vector<std::size_t> edges;
  friend bool operator==(const CycleWithoutExit&, const CycleWithoutExit&) = default;
};

struct NoCycle {
  friend bool operator==(const NoCycle&, const NoCycle&) = default;
};

using SimplicityWitness = std::variant<UnreachedTarget, CycleWithoutExit, NoCycle>;

/// verdict is false exactly when witnesses is nonempty.
struct SimplicityReport {
  bool verdict = true;
  std::vector<SimplicityWitness> witnesses;
};

/// Every vertex reaches every sink and every cycle, and every cycle has an exit.
SimplicityReport is_simple_lpa(const Graph& g);
/// Every vertex reaches every cycle, every cycle has an exit, and a cycle exists.
SimplicityReport is_purely_infinite_simple(const Graph& g);
/// One vertex, no edges.
bool is_trivial_lpa(const Graph& g);

}  // namespace lpalie
