#pragma once

// Slow, independent reference computations. Each one is written without
// reusing the library routine it checks.

#include <cstdint>
#include <optional>
#include <vector>

#include "lpalie/graph.hpp"
#include "lpalie/int_matrix.hpp"

namespace lpalie::testing::oracle {

/// Reflexive-transitive closure by Floyd-Warshall.
std::vector<std::vector<bool>> reach(const Graph& g);

/// Every simple vertex cycle, each listed once starting at its smallest vertex.
std::vector<std::vector<std::size_t>> simple_cycles(const Graph& g);

bool is_simple(const Graph& g);
bool is_purely_infinite_simple(const Graph& g);

/// Whether target is a GF(p)-combination of vectors, by enumerating all
/// p^k coefficient tuples.
bool gf_span_contains(const std::vector<IntVector>& vectors, const IntVector& target, std::uint64_t p);

/// Rank over Q, taken as the largest rank modulo two large primes.
std::size_t rational_rank(const std::vector<IntVector>& vectors);
bool rational_span_contains(const std::vector<IntVector>& vectors, const IntVector& target);

/// Leibniz expansion over all permutations.
BigInt permutation_determinant(const IntMatrix& m);

struct ClassOrder {
  bool finite = false;
  /// Known whenever det(M) != 0.
  std::optional<BigInt> order;
};

/// Order of the class of `element` in Coker(m): finiteness from rational
/// column span, exact order from Cramer's rule when m is invertible over Q.
ClassOrder class_order(const IntMatrix& m, const IntVector& element);

/// Whether the class of `element` is p-divisible in Coker(m): element mod p
/// in the GF(p) column span of m, checked by enumeration.
bool p_divisible(const IntMatrix& m, const IntVector& element, std::uint64_t p);

/// Exhaustive search for an isomorphism Z^r + (+)Z/alpha_i -> itself carrying
/// (f, t) to (f2, t2), for r <= 1 and small torsion (order <= 256).
bool pointed_iso(std::size_t free_rank, const std::vector<std::uint64_t>& alphas, const std::vector<long>& f,
                 const std::vector<std::uint64_t>& t, const std::vector<long>& f2, const std::vector<std::uint64_t>& t2);

}  // namespace lpalie::testing::oracle
