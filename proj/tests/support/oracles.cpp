#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lpalie::testing::oracle {

std::vector<std::vector<bool>> reach(const Graph& g) {
  const std::size_t m = g.vertex_count();
  std::vector<std::vector<bool>> r(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) r[i][i] = true;
  for (const auto& e : g.edges()) r[e.source][e.target] = true;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

std::vector<std::vector<std::size_t>> simple_cycles(const Graph& g) {
  const std::size_t m = g.vertex_count();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (const auto& e : g.edges()) adj[e.source][e.target] = true;

  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> path;
  std::vector<bool> used(m, false);
  // Cycles whose smallest vertex is `start`.
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t at) {
    for (std::size_t next = start; next < m; ++next) {
      if (!adj[at][next]) continue;
      if (next == start) {
        cycles.push_back(path);
      } else if (!used[next]) {
        used[next] = true;
        path.push_back(next);
        dfs(start, next);
        path.pop_back();
        used[next] = false;
      }
    }
  };
  for (std::size_t s = 0; s < m; ++s) {
    path.assign(1, s);
    used.assign(m, false);
    used[s] = true;
    dfs(s, s);
  }
  return cycles;
}

namespace {

struct Structure {
  std::vector<std::vector<bool>> reach;
  std::vector<std::vector<std::size_t>> cycles;
  std::set<std::size_t> on_cycle;
  bool every_cycle_exits = true;
  bool every_vertex_reaches_cycles = true;
  bool every_vertex_reaches_sinks = true;
};

Structure structure(const Graph& g) {
  Structure s;
  s.reach = reach(g);
  s.cycles = simple_cycles(g);
  for (const auto& c : s.cycles) {
    s.on_cycle.insert(c.begin(), c.end());
    const bool exits = std::any_of(c.begin(), c.end(), [&](std::size_t v) { return g.out_degree(v) > 1; });
    if (!exits) s.every_cycle_exits = false;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
      if (s.reach[v][w]) continue;
      if (s.on_cycle.count(w)) s.every_vertex_reaches_cycles = false;
      if (g.out_degree(w) == 0) s.every_vertex_reaches_sinks = false;
    }
  }
  return s;
}

}  // namespace

bool is_simple(const Graph& g) {
  const Structure s = structure(g);
  return s.every_cycle_exits && s.every_vertex_reaches_cycles && s.every_vertex_reaches_sinks;
}

bool is_purely_infinite_simple(const Graph& g) {
  const Structure s = structure(g);
  return s.every_cycle_exits && s.every_vertex_reaches_cycles && !s.cycles.empty();
}

namespace {

std::uint64_t residue(const BigInt& x, std::uint64_t p) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool gf_span_contains(const std::vector<IntVector>& vectors, const IntVector& target, std::uint64_t p) {
  const std::size_t k = vectors.size();
  const std::size_t n = target.size();
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < k; ++i) {
    combos *= p;
    if (combos > 5000000) throw std::invalid_argument("gf_span_contains: search too large");
  }
  std::vector<std::uint64_t> want(n);
  for (std::size_t j = 0; j < n; ++j) want[j] = residue(target[j], p);
  std::vector<std::vector<std::uint64_t>> vs(k, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) vs[i][j] = residue(vectors[i][j], p);
  }
  std::vector<std::uint64_t> c(k, 0);
  for (std::uint64_t code = 0; code < combos; ++code) {
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = rest % p;
      rest /= p;
    }
    bool hit = true;
    for (std::size_t j = 0; j < n && hit; ++j) {
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < k; ++i) sum = (sum + c[i] * vs[i][j]) % p;
      hit = sum == want[j];
    }
    if (hit) return true;
  }
  return false;
}

namespace {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::size_t rank_mod(const std::vector<IntVector>& vectors, std::uint64_t p) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().size();
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& v : vectors) {
    std::vector<std::uint64_t> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = residue(v[j], p);
    rows.push_back(r);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = pow_mod(rows[rank][col], p - 2, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const std::uint64_t f = rows[i][col] * inv % p;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rational_rank(const std::vector<IntVector>& vectors) {
  return std::max(rank_mod(vectors, 2147483647ull), rank_mod(vectors, 1000000007ull));
}

bool rational_span_contains(const std::vector<IntVector>& vectors, const IntVector& target) {
  auto augmented = vectors;
  augmented.push_back(target);
  return rational_rank(vectors) == rational_rank(augmented);
}

BigInt permutation_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

ClassOrder class_order(const IntMatrix& m, const IntVector& element) {
  std::vector<IntVector> columns;
  for (std::size_t j = 0; j < m.cols(); ++j) columns.push_back(m.column(j));
  ClassOrder out;
  out.finite = rational_span_contains(columns, element);
  const BigInt det = permutation_determinant(m);
  if (det == 0) return out;
  // Cramer: x_j = det(m with column j replaced by element) / det.
  BigInt order = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    IntMatrix replaced = m;
    for (std::size_t i = 0; i < m.rows(); ++i) replaced(i, j) = element[i];
    Rational x(permutation_determinant(replaced), det);
    x.canonicalize();
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), x.get_den_mpz_t());
  }
  out.order = order;
  return out;
}

bool p_divisible(const IntMatrix& m, const IntVector& element, std::uint64_t p) {
  std::vector<IntVector> columns;
  for (std::size_t j = 0; j < m.cols(); ++j) columns.push_back(m.column(j));
  return gf_span_contains(columns, element, p);
}

namespace {

using Element = std::vector<std::uint64_t>;

std::vector<Element> all_elements(const std::vector<std::uint64_t>& alphas) {
  std::vector<Element> out{Element{}};
  for (std::uint64_t a : alphas) {
    std::vector<Element> next;
    for (const auto& x : out) {
      for (std::uint64_t v = 0; v < a; ++v) {
        auto y = x;
        y.push_back(v);
        next.push_back(std::move(y));
      }
    }
    out = std::move(next);
  }
  return out;
}

Element combine(const std::vector<std::uint64_t>& alphas, const std::vector<Element>& images, const Element& x) {
  Element out(alphas.size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < alphas.size(); ++j) out[j] = (out[j] + x[i] * images[i][j]) % alphas[j];
  }
  return out;
}

}  // namespace

bool pointed_iso(std::size_t free_rank, const std::vector<std::uint64_t>& alphas, const std::vector<long>& f,
                 const std::vector<std::uint64_t>& t, const std::vector<long>& f2, const std::vector<std::uint64_t>& t2) {
  if (free_rank > 1) throw std::invalid_argument("pointed_iso oracle handles free rank <= 1");
  const auto elements = all_elements(alphas);
  if (elements.size() > 256) throw std::invalid_argument("pointed_iso oracle: group too large");

  long scale = 0;
  if (free_rank == 1) {
    if (std::labs(f[0]) != std::labs(f2[0])) return false;
    scale = f[0];
  }

  // Candidate images of each generator: elements killed by alpha_i.
  std::vector<std::vector<Element>> candidates(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (const auto& y : elements) {
      bool killed = true;
      for (std::size_t j = 0; j < alphas.size(); ++j) killed = killed && (alphas[i] * y[j]) % alphas[j] == 0;
      if (killed) candidates[i].push_back(y);
    }
  }

  std::vector<Element> images(alphas.size());
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == alphas.size()) {
      std::set<Element> seen;
      for (const auto& x : elements) seen.insert(combine(alphas, images, x));
      if (seen.size() != elements.size()) return false;
      const Element ct = combine(alphas, images, t);
      // (n, x) -> (+-n, n b + C x): need scale * b + C t == t2 for some b.
      for (const auto& b : elements) {
        bool hit = true;
        for (std::size_t j = 0; j < alphas.size() && hit; ++j) {
          const long a = static_cast<long>(alphas[j]);
          long v = (static_cast<long>(ct[j]) + scale % a * static_cast<long>(b[j])) % a;
          if (v < 0) v += a;
          hit = static_cast<std::uint64_t>(v) == t2[j];
        }
        if (hit) return true;
        if (scale == 0) break;
      }
      return false;
    }
    for (const auto& y : candidates[i]) {
      images[i] = y;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace lpalie::testing::oracle
