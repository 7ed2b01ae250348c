#include "lpalie/analysis.hpp"

#include <algorithm>
#include <limits>

namespace lpalie {

ReachabilityClosure reachability(const Graph& g) {
  const std::size_t m = g.vertex_count();
  ReachabilityClosure closure(m);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < m; ++s) {
    closure.set(s, s);
    stack.assign(1, s);
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t e : g.out_edges(x)) {
        std::size_t y = g.edge(e).target;
        if (!closure(s, y)) {
          closure.set(s, y);
          stack.push_back(y);
        }
      }
    }
  }
  return closure;
}

std::vector<std::size_t> strongly_connected_components(const Graph& g) {
  // Iterative Tarjan.
  const std::size_t m = g.vertex_count();
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(m, unset), low(m, 0), comp(m, unset);
  std::vector<bool> on_stack(m, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next out-edge position)
  std::size_t counter = 0;
  std::size_t components = 0;

  for (std::size_t root = 0; root < m; ++root) {
    if (index[root] != unset) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos == 0 && index[v] == unset) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      auto out = g.out_edges(v);
      if (pos < out.size()) {
        std::size_t w = g.edge(out[pos]).target;
        ++pos;
        if (index[w] == unset) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      std::size_t finished = v;
      call.pop_back();
      if (!call.empty()) {
        std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }

  // Renumber by smallest member.
  std::vector<std::size_t> rename(components, unset);
  std::size_t next = 0;
  for (std::size_t v = 0; v < m; ++v) {
    if (rename[comp[v]] == unset) rename[comp[v]] = next++;
    comp[v] = rename[comp[v]];
  }
  return comp;
}

std::vector<std::size_t> cycle_vertices(const Graph& g) {
  const auto comp = strongly_connected_components(g);
  std::vector<bool> cyclic_component(g.vertex_count(), false);
  for (const auto& e : g.edges()) {
    if (comp[e.source] == comp[e.target]) cyclic_component[comp[e.source]] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (cyclic_component[comp[v]]) out.push_back(v);
  return out;
}

std::vector<std::vector<std::size_t>> cycles_without_exit(const Graph& g) {
  // A cycle has no exit iff each of its vertices emits exactly one edge, so
  // such cycles are exactly the cycles of the functional subgraph on
  // out-degree-1 vertices.
  const std::size_t m = g.vertex_count();
  enum : unsigned char { fresh, walking, done };
  std::vector<unsigned char> state(m, fresh);
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> walk;

  for (std::size_t s = 0; s < m; ++s) {
    if (state[s] != fresh || g.out_degree(s) != 1) continue;
    walk.clear();
    std::size_t x = s;
    while (state[x] == fresh && g.out_degree(x) == 1) {
      state[x] = walking;
      walk.push_back(x);
      x = g.edge(g.out_edges(x)[0]).target;
    }
    if (state[x] == walking) {
      auto start = std::find(walk.begin(), walk.end(), x);
      std::vector<std::size_t> verts(start, walk.end());
      std::rotate(verts.begin(), std::min_element(verts.begin(), verts.end()), verts.end());
      std::vector<std::size_t> edges;
      edges.reserve(verts.size());
      for (std::size_t v : verts) edges.push_back(g.out_edges(v)[0]);
      cycles.push_back(std::move(edges));
    }
    for (std::size_t v : walk) state[v] = done;
  }
  std::sort(cycles.begin(), cycles.end(), [&](const auto& a, const auto& b) {
    return g.edge(a.front()).source < g.edge(b.front()).source;
  });
  return cycles;
}

std::optional<std::vector<std::size_t>> find_cycle_without_exit(const Graph& g) {
  auto cycles = cycles_without_exit(g);
  if (cycles.empty()) return std::nullopt;
  return std::move(cycles.front());
}

namespace {

void add_unreached(const Graph& g, const ReachabilityClosure& reach, std::span<const std::size_t> targets,
                   UnreachedTarget::Kind kind, SimplicityReport& report) {
  for (std::size_t from = 0; from < g.vertex_count(); ++from) {
    for (std::size_t t : targets) {
      if (!reach(from, t)) report.witnesses.push_back(UnreachedTarget{from, t, kind});
    }
  }
}

}  // namespace

SimplicityReport is_simple_lpa(const Graph& g) {
  SimplicityReport report;
  const auto reach = reachability(g);
  const auto sinks = g.sinks();
  const auto cyclic = cycle_vertices(g);
  add_unreached(g, reach, sinks, UnreachedTarget::Kind::sink, report);
  add_unreached(g, reach, cyclic, UnreachedTarget::Kind::cycle_vertex, report);
  for (auto& c : cycles_without_exit(g)) report.witnesses.push_back(CycleWithoutExit{std::move(c)});
  report.verdict = report.witnesses.empty();
  return report;
}

SimplicityReport is_purely_infinite_simple(const Graph& g) {
  SimplicityReport report;
  const auto reach = reachability(g);
  const auto cyclic = cycle_vertices(g);
  add_unreached(g, reach, cyclic, UnreachedTarget::Kind::cycle_vertex, report);
  for (auto& c : cycles_without_exit(g)) report.witnesses.push_back(CycleWithoutExit{std::move(c)});
  if (cyclic.empty()) report.witnesses.push_back(NoCycle{});
  report.verdict = report.witnesses.empty();
  return report;
}

bool is_trivial_lpa(const Graph& g) { return g.vertex_count() == 1 && g.edge_count() == 0; }

}  // namespace lpalie
