#include "lpalie/families.hpp"

#include <stdexcept>

namespace lpalie {

namespace {

// Up to a million edges per family keeps symbolic work on generated graphs sane.
constexpr std::uint64_t max_edges = 1000000;

Graph from_counts(const std::vector<std::vector<std::uint64_t>>& counts) {
  GraphBuilder b;
  for (std::size_t i = 0; i < counts.size(); ++i) b.add_vertex("v" + std::to_string(i + 1));
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t j = 0; j < counts[i].size(); ++j) {
      total += counts[i][j];
      if (total > max_edges) throw std::invalid_argument("family parameters produce too many edges");
      b.add_edges(i, j, counts[i][j]);
    }
  }
  return b.build();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Graph rose(std::uint64_t n) {
  require(n >= 1, "rose needs n >= 1");
  return from_counts({{n}});
}

Graph line(std::uint64_t d) {
  require(d >= 1, "line needs d >= 1");
  require(d <= 10000, "line length too large");
  std::vector<std::vector<std::uint64_t>> counts(d, std::vector<std::uint64_t>(d, 0));
  for (std::size_t i = 0; i + 1 < d; ++i) counts[i][i + 1] = 1;
  return from_counts(counts);
}

Graph matrix_rose(std::uint64_t n, std::uint64_t d) {
  require(n >= 2 && d >= 2, "matrix_rose needs n >= 2 and d >= 2");
  return from_counts({{0, d - 1}, {0, n}});
}

Graph prime_set(std::uint64_t q) {
  require(q >= 1, "prime_set needs q >= 1");
  require(q < max_edges, "prime_set parameter too large");
  return from_counts({{1, 1, 0, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, q + 1}});
}

Graph two_vertex(std::uint64_t u, std::uint64_t v, std::uint64_t p) {
  require(u >= 2 && v >= 2 && p >= 2, "two_vertex needs u, v, p >= 2");
  require(u < max_edges && v < max_edges && p < max_edges, "two_vertex parameters too large");
  const std::uint64_t pu = p * u;
  require(pu / u == p && pu * v / v == pu, "two_vertex parameters too large");
  return from_counts({{pu * v + 1, u}, {pu, u + 1}});
}

Graph example4() { return from_counts({{1, 1, 0, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 0}}); }

Graph family(const std::string& name, std::span<const std::uint64_t> params) {
  auto arity = [&](std::size_t n) {
    require(params.size() == n, name + " takes " + std::to_string(n) + " parameter(s), got " +
                                    std::to_string(params.size()));
  };
  if (name == "rose") {
    arity(1);
    return rose(params[0]);
  }
  if (name == "line") {
    arity(1);
    return line(params[0]);
  }
  if (name == "matrix_rose") {
    arity(2);
    return matrix_rose(params[0], params[1]);
  }
  if (name == "prime_set") {
    arity(1);
    return prime_set(params[0]);
  }
  if (name == "two_vertex") {
    arity(3);
    return two_vertex(params[0], params[1], params[2]);
  }
  if (name == "example4") {
    arity(0);
    return example4();
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<std::string> family_names() {
  return {"rose", "line", "matrix_rose", "prime_set", "two_vertex", "example4"};
}

}  // namespace lpalie
