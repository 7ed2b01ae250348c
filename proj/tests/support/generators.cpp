#include "generators.hpp"

#include <algorithm>
#include <numeric>

#include "lpalie/analysis.hpp"

namespace lpalie::testing {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Graph random_graph(Rng& rng, std::size_t max_vertices, std::size_t max_multiplicity, double density) {
  GraphBuilder b;
  const std::size_t m = uniform(rng, 1, max_vertices);
  for (std::size_t i = 0; i < m; ++i) b.add_vertex("v" + std::to_string(i + 1));
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (coin(rng)) b.add_edges(i, j, uniform(rng, 1, max_multiplicity));
    }
  }
  return b.build();
}

Graph random_pis_graph(Rng& rng, std::size_t max_vertices, std::size_t max_multiplicity) {
  std::uniform_real_distribution<double> density(0.3, 0.8);
  for (;;) {
    Graph g = random_graph(rng, max_vertices, max_multiplicity, density(rng));
    if (is_purely_infinite_simple(g).verdict) return g;
  }
}

Graph random_simple_graph(Rng& rng, std::size_t max_vertices, std::size_t max_multiplicity) {
  std::uniform_real_distribution<double> density(0.2, 0.8);
  for (;;) {
    Graph g = random_graph(rng, max_vertices, max_multiplicity, density(rng));
    if (!is_trivial_lpa(g) && is_simple_lpa(g).verdict) return g;
  }
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> entry(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  }
  return m;
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

PathWord random_path(Rng& rng, const Graph& g, std::size_t max_length) {
  const std::size_t start = uniform(rng, 0, g.vertex_count() - 1);
  const std::size_t length = uniform(rng, 0, max_length);
  std::vector<std::size_t> edges;
  std::size_t at = start;
  while (edges.size() < length && !g.is_sink(at)) {
    auto out = g.out_edges(at);
    const std::size_t e = out[uniform(rng, 0, out.size() - 1)];
    edges.push_back(e);
    at = g.edge(e).target;
  }
  if (edges.empty()) return PathWord::vertex(g, start);
  return PathWord::path(g, std::move(edges));
}

PathWord random_path_to(Rng& rng, const Graph& g, std::size_t range, std::size_t max_length) {
  const std::size_t length = uniform(rng, 0, max_length);
  std::vector<std::size_t> reversed;
  std::size_t at = range;
  while (reversed.size() < length && !g.in_edges(at).empty()) {
    auto in = g.in_edges(at);
    const std::size_t e = in[uniform(rng, 0, in.size() - 1)];
    reversed.push_back(e);
    at = g.edge(e).source;
  }
  if (reversed.empty()) return PathWord::vertex(g, range);
  return PathWord::path(g, std::vector<std::size_t>(reversed.rbegin(), reversed.rend()));
}

CohnTerm random_term(Rng& rng, const Graph& g, std::size_t max_length) {
  PathWord p = random_path(rng, g, max_length);
  PathWord q = random_path_to(rng, g, p.range(), max_length);
  return CohnTerm::make(std::move(p), std::move(q));
}

CohnElement random_element(Rng& rng, const Graph& g, const FieldSpec& field, std::size_t terms,
                           std::size_t max_length) {
  std::uniform_int_distribution<long> coefficient(-3, 3);
  CohnElement x(field);
  for (std::size_t k = 0; k < terms; ++k) {
    x.add_term(random_term(rng, g, max_length), Scalar(field, coefficient(rng)));
  }
  return x;
}

}  // namespace lpalie::testing
