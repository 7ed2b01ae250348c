#pragma once

// Exact symbolic arithmetic in the Cohn path algebra C(E): the algebra on
// vertices, edges and ghost edges subject to vertex orthogonality, the
// source/range relations and e^* f = delta(e, f) r(e), but without the
// Cuntz-Krieger sum relation. Its basis is { p q^* : r(p) = r(q) }, so
// equality of elements is equality of coefficient maps. The Leavitt path
// algebra is C(E) modulo the ideal N generated by y_v = v - sum_{s(e)=v} e e^*;
// identities in the quotient are certified by exhibiting the N-part
// explicitly.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpalie/error.hpp"
#include "lpalie/field.hpp"
#include "lpalie/graph.hpp"
#include "lpalie/linalg.hpp"

namespace lpalie {

/// A path of length >= 0. A length-0 path is a vertex.
class PathWord {
 public:
  static PathWord vertex(const Graph& g, std::size_t v);
  /// Throws PreconditionError unless `edges` is a nonempty composable sequence.
  static PathWord path(const Graph& g, std::vector<std::size_t> edges);

  std::size_t source() const { return source_; }
  std::size_t range() const { return range_; }
  std::size_t length() const { return edges_.size(); }
  bool is_vertex() const { return edges_.empty(); }
  const std::vector<std::size_t>& edges() const { return edges_; }

  /// Whether other == *this followed by some path.
  bool is_prefix_of(const PathWord& other) const;
  /// The h with *this == prefix followed by h. Requires prefix.is_prefix_of(*this).
  PathWord remainder_after(const PathWord& prefix) const;
  /// *this followed by tail. Requires range() == tail.source().
  PathWord concat(const PathWord& tail) const;

  friend auto operator<=>(const PathWord&, const PathWord&) = default;
  friend bool operator==(const PathWord&, const PathWord&) = default;

 private:
  PathWord(std::size_t source, std::size_t range, std::vector<std::size_t> edges)
      : source_(source), range_(range), edges_(std::move(edges)) {}
  std::size_t source_;
  std::size_t range_;
  std::vector<std::size_t> edges_;
};

/// Basis element p q^* with r(p) = r(q).
struct CohnTerm {
  PathWord p;
  PathWord q;

  /// Throws PreconditionError when r(p) != r(q).
  static CohnTerm make(PathWord p, PathWord q);

  friend auto operator<=>(const CohnTerm&, const CohnTerm&) = default;
  friend bool operator==(const CohnTerm&, const CohnTerm&) = default;
};

/// Finite linear combination of basis terms; zero coefficients are never stored.
class CohnElement {
 public:
  explicit CohnElement(const FieldSpec& field = FieldSpec::rationals()) : field_(field) {}

  static CohnElement term(const CohnTerm& t, const Scalar& coefficient);
  static CohnElement vertex(const Graph& g, const FieldSpec& field, std::size_t v);
  static CohnElement edge(const Graph& g, const FieldSpec& field, std::size_t e);
  static CohnElement ghost_edge(const Graph& g, const FieldSpec& field, std::size_t e);
  /// p, i.e. p r(p)^*.
  static CohnElement path(const FieldSpec& field, const PathWord& p);
  /// q^*, i.e. r(q) q^*.
  static CohnElement ghost_path(const FieldSpec& field, const PathWord& q);

  const FieldSpec& field() const { return field_; }
  const std::map<CohnTerm, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const CohnTerm& t, const Scalar& coefficient);

  CohnElement operator+(const CohnElement& o) const;
  CohnElement operator-(const CohnElement& o) const;
  CohnElement operator-() const;
  CohnElement& operator+=(const CohnElement& o);
  CohnElement& operator-=(const CohnElement& o);

  friend bool operator==(const CohnElement&, const CohnElement&) = default;

 private:
  void check_field(const CohnElement& o) const;
  FieldSpec field_;
  std::map<CohnTerm, Scalar> terms_;
};

CohnElement operator*(const Scalar& c, const CohnElement& x);

/// Throws std::invalid_argument on a field mismatch.
CohnElement multiply(const CohnElement& x, const CohnElement& y);
CohnElement commutator(const CohnElement& x, const CohnElement& y);

/// Linear map sending p q^* to the unit vector of r(p) when p == q and to 0
/// otherwise. Vanishes on commutators.
ScalarVector trace(const CohnElement& x, std::size_t vertex_count);

/// y_v = v - sum_{s(e)=v} e e^*. Throws PreconditionError when v is a sink.
CohnElement n_generator(const Graph& g, const FieldSpec& field, std::size_t v);

/// Explicit commutator expression for a vertex combination sum_i k_i v_i with
/// k = sum_i t_i B_i:  W = -sum_i t_i sum_{s(e)=v_i} [e, e^*].
struct CommutatorWitness {
  /// (c, e) stands for c * [e, e^*].
  std::vector<std::pair<Scalar, std::size_t>> edge_commutators;
  /// W evaluated in C(E).
  CohnElement commutator_sum;
  /// sum_i t_i y_{v_i}, an element of N.
  CohnElement correction;
  /// sum_i k_i v_i.
  CohnElement vertex_combination;
};

/// Throws PreconditionError when t has the wrong length, is nonzero at a
/// sink, or lives in a different field.
CommutatorWitness build_commutator_witness(const Graph& g, const ScalarVector& t, const FieldSpec& field);

/// Checks W == sum_i k_i v_i + sum_i t_i y_{v_i} exactly in C(E). Throws
/// PreconditionError when t vanishes nowhere it must or k != sum_i t_i B_i.
bool verify_witness(const Graph& g, const ScalarVector& k, const ScalarVector& t, const FieldSpec& field);

/// target == sum of [first, second] over `commutators`, checked in C(E).
struct CommutatorIdentity {
  CohnElement target;
  std::vector<std::pair<CohnElement, CohnElement>> commutators;
  CohnElement commutator_sum;
  bool verified = false;
};

/// Writes p and p^* (when q is absent) or p q^* (when q is given) as sums of
/// commutators, one identity per element.
///  - p alone: requires length >= 1 and s(p) != r(p); yields p = [p, r(p)]
///    and p^* = [r(p), p^*].
///  - p, q: requires lengths >= 1 and neither path equal to the other
///    followed by a closed path (length 0 included); yields pq^* = [p, q^*]
///    plus at most one correction commutator from the first case. The target
///    pq^* is 0 when r(p) != r(q).
/// Throws PreconditionError when a requirement fails.
std::vector<CommutatorIdentity> lemma_commutator_witness(const Graph& g, const PathWord& p,
                                                         const std::optional<PathWord>& q,
                                                         const FieldSpec& field = FieldSpec::rationals());

/// Deterministic text: terms ordered by total length then labels, each as
/// `c * p-labels q-labels^*`, joined by " + "; "0" for the zero element.
std::string to_string(const CohnElement& x, const Graph& g);
std::string to_string(const PathWord& p, const Graph& g);

}  // namespace lpalie
