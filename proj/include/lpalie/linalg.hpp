#pragma once

// Exact linear algebra over the prime subfield (Q or GF(p)) and over the
// integers: span membership, Smith normal form with unimodular certificates,
// and cokernel presentations.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lpalie/field.hpp"
#include "lpalie/int_matrix.hpp"

namespace lpalie {

using ScalarVector = std::vector<Scalar>;

ScalarVector to_field(const IntVector& v, const FieldSpec& field);

/// Coefficients c with sum_i c[i] * vectors[i] == target, or nullopt when the
/// target is outside the span. Free coefficients are set to zero. Throws
/// std::invalid_argument when lengths differ.
std::optional<ScalarVector> span_membership(std::span<const IntVector> vectors, const IntVector& target,
                                            const FieldSpec& field);
std::optional<ScalarVector> span_membership(std::span<const ScalarVector> vectors, const ScalarVector& target,
                                            const FieldSpec& field);

/// Dimension of the span of `vectors` over `field`. `length` is only used
/// when `vectors` is empty.
std::size_t span_rank(std::span<const IntVector> vectors, std::size_t length, const FieldSpec& field);
std::size_t span_rank(std::span<const ScalarVector> vectors, std::size_t length, const FieldSpec& field);

/// A linear functional y with y . v == 0 for every v in `vectors` and
/// y . target == 1. Exists exactly when span_membership fails.
std::optional<ScalarVector> exclusion_functional(std::span<const ScalarVector> vectors, const ScalarVector& target,
                                                 const FieldSpec& field);

Scalar dot(const ScalarVector& a, const ScalarVector& b, const FieldSpec& field);

// ---------------------------------------------------------------------------

/// u * m * v == d with u, v unimodular and d in Smith normal form: diagonal
/// entries non-negative, nonzero entries first, each dividing the next.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  /// The min(rows, cols) diagonal entries of d.
  IntVector diagonal() const;
};

/// Pivot rule: smallest nonzero absolute value in the working submatrix,
/// ties broken row-major. Deterministic.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Coker(M) = Z^m / Im(M) as Z/a_1 + ... + Z/a_m (a_i == 0 is a free summand),
/// together with the coordinates of the class of (1, ..., 1).
struct K0Presentation {
  IntVector invariant_factors;
  /// Coordinate i lies in [0, a_i) when a_i > 0.
  IntVector unit_class;

  std::size_t free_rank() const;
  /// Invariant factors other than 0 and 1, in order.
  IntVector torsion_factors() const;
  /// Product of torsion_factors().
  BigInt torsion_order() const;
  bool is_trivial() const;

  friend bool operator==(const K0Presentation&, const K0Presentation&) = default;
};

/// Presentation of Coker(m) for square m, marking the class of `element`.
K0Presentation cokernel(const IntMatrix& m, const IntVector& element);
/// Presentation of Coker(m) marking the class of (1, ..., 1).
K0Presentation cokernel(const IntMatrix& m);

/// Order of the marked class; nullopt when it is infinite.
std::optional<BigInt> class_order(const K0Presentation& pres);

/// Whether the marked class equals p * g for some group element g.
bool is_p_divisible(const K0Presentation& pres, std::uint64_t p);

}  // namespace lpalie
