#pragma once

// Isomorphism of pointed finitely generated abelian groups: is there a group
// isomorphism Coker_A -> Coker_B carrying the marked class of A to that of B?

#include <cstdint>
#include <string>

#include "lpalie/linalg.hpp"

namespace lpalie {

enum class PointedIso { exists, absent, undecided };

std::string to_string(PointedIso p);

struct PointedIsoDecision {
  PointedIso result = PointedIso::undecided;
  std::string reason;
};

/// Groups are compared by free rank and torsion factors. With G = Z^r + T and
/// marked classes (f, t), (f', t'), an isomorphism exists iff gcd(f) ==
/// gcd(f') and some automorphism of T carries t to t' modulo gcd(f) T. That
/// last question is settled by walking the orbit of t under generators of
/// Aut(T), prime by prime; when |T| exceeds max_group_order the answer is
/// undecided.
PointedIsoDecision pointed_isomorphism(const K0Presentation& a, const K0Presentation& b,
                                       std::uint64_t max_group_order = 1000000);

}  // namespace lpalie
