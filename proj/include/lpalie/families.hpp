#pragma once

// Named graph families. Vertices are labelled v1, v2, ...; edges carry the
// automatic `<src>_<dst>_<k>` labels, listed row-major by (source, target).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lpalie/graph.hpp"

namespace lpalie {

/// One vertex with n loops (n >= 1).
Graph rose(std::uint64_t n);
/// Oriented line v1 -> v2 -> ... -> vd (d >= 1).
Graph line(std::uint64_t d);
/// v1 --(d-1)--> v2 with n loops at v2; its algebra is d x d matrices over
/// the Leavitt algebra of type n (n >= 2, d >= 2).
Graph matrix_rose(std::uint64_t n, std::uint64_t d);
/// The four-vertex graph below with q + 1 loops added at v4 (q >= 1).
Graph prime_set(std::uint64_t q);
/// Two vertices: v1 has p*u*v + 1 loops and u edges to v2; v2 has p*u edges
/// to v1 and u + 1 loops (u, v, p >= 2).
Graph two_vertex(std::uint64_t u, std::uint64_t v, std::uint64_t p);
/// Loops at v1 and v3; edges v1->v2, v2->v1, v2->v4, v3->v2, v4->v3.
Graph example4();

/// Dispatch by name: rose, line, matrix_rose, prime_set, two_vertex, example4.
/// Throws std::invalid_argument on an unknown name, wrong parameter count,
/// or a parameter out of range.
Graph family(const std::string& name, std::span<const std::uint64_t> params);

std::vector<std::string> family_names();

}  // namespace lpalie
