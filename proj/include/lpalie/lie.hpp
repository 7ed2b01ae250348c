#pragma once

// Lie simplicity of [L, L] for the Leavitt path algebra L of a finite graph,
// and of its matrix algebras, decided by two independent routes: a span test
// on the B-vectors and a test on the class of the unit in Coker(M).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpalie/abelian_group.hpp"
#include "lpalie/analysis.hpp"
#include "lpalie/field.hpp"
#include "lpalie/graph.hpp"
#include "lpalie/linalg.hpp"

namespace lpalie {

enum class LieStatus { simple, not_simple, inapplicable };
enum class Route { span, k0, closed_form };

/// What settled the verdict.
enum class Rule {
  algebra_not_simple,
  not_purely_infinite_simple,
  zero_bracket,
  unit_in_span,
  unit_not_in_span,
  char_divides_size,
  closed_form,
  unit_class_infinite_order,
  unit_class_finite_order,
  unit_class_p_divisible,
  unit_class_not_p_divisible,
};

std::string to_string(LieStatus s);
std::string to_string(Route r);

struct LieVerdict {
  LieStatus status = LieStatus::inapplicable;
  Route route = Route::span;
  FieldSpec field;
  Rule rule = Rule::algebra_not_simple;
  /// Matrix size d; 1 for the algebra itself.
  std::uint64_t size = 1;
  /// Coefficients c with sum_i c_i B_i = (1, ..., 1) (rule unit_in_span).
  std::optional<ScalarVector> span_coefficients;
  /// The failed graph condition (Inapplicable verdicts).
  std::optional<SimplicityReport> graph_witness;
  /// K0 route only.
  std::optional<K0Presentation> k0;
  /// K0 route, characteristic 0, finite order.
  std::optional<BigInt> unit_class_order;
  /// Closed form only.
  std::uint64_t rose_size = 0;
};

/// Inapplicable when L is not simple; NotSimple for the one-vertex edgeless
/// graph; otherwise Simple iff (1, ..., 1) is outside the span of the B-vectors.
LieVerdict lie_simplicity(const Graph& g, const FieldSpec& field);

/// The same for d x d matrices over L: Simple iff the span test fails and the
/// characteristic does not divide d. Throws std::invalid_argument when d < 1.
LieVerdict matrix_lie_simplicity(const Graph& g, std::uint64_t d, const FieldSpec& field);

/// d x d matrices over the Leavitt algebra of the rose with n petals: Simple
/// iff the characteristic is a prime dividing n - 1 but not d. Throws
/// std::invalid_argument when n < 2 or d < 1.
LieVerdict leavitt_closed_form(std::uint64_t n, std::uint64_t d, const FieldSpec& field);

/// Inapplicable unless L is purely infinite simple. Characteristic 0: Simple
/// iff the unit class has infinite order. Characteristic p: Simple iff the
/// unit class is not p-divisible.
LieVerdict lie_simplicity_via_k0(const Graph& g, const FieldSpec& field);

/// t with k = sum_i t_i B_i and t_i = 0 at sinks, or nullopt when k is
/// outside the span. Throws std::invalid_argument when k has the wrong length.
std::optional<ScalarVector> vertex_combination_in_commutator(const Graph& g, const ScalarVector& k,
                                                             const FieldSpec& field);

struct KpRow {
  FieldSpec field;
  LieVerdict first;
  LieVerdict second;
  bool agree = true;
};

struct KpReport {
  /// Both graphs purely infinite simple.
  bool applicable = false;
  SimplicityReport first_pis;
  SimplicityReport second_pis;
  K0Presentation first_k0;
  K0Presentation second_k0;
  /// Meaningful only when applicable.
  PointedIsoDecision iso;
  /// Span-route verdicts per characteristic; empty when not applicable.
  std::vector<KpRow> rows;
  /// A pointed isomorphism exists yet some row disagrees.
  bool contradiction = false;
};

KpReport kp_consistency(const Graph& first, const Graph& second, const std::vector<FieldSpec>& fields,
                        std::uint64_t max_group_order = 1000000);

}  // namespace lpalie
