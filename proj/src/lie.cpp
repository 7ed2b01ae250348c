#include "lpalie/lie.hpp"

#include <stdexcept>

namespace lpalie {

std::string to_string(LieStatus s) {
  switch (s) {
    case LieStatus::simple: return "simple";
    case LieStatus::not_simple: return "not-simple";
    case LieStatus::inapplicable: return "inapplicable";
  }
  return "inapplicable";
}

std::string to_string(Route r) {
  switch (r) {
    case Route::span: return "span";
    case Route::k0: return "k0";
    case Route::closed_form: return "closed-form";
  }
  return "span";
}

namespace {

bool divides(std::uint64_t c, std::uint64_t n) { return c != 0 && n % c == 0; }

LieVerdict span_route(const Graph& g, std::uint64_t d, const FieldSpec& field) {
  LieVerdict v;
  v.route = Route::span;
  v.field = field;
  v.size = d;

  SimplicityReport simple = is_simple_lpa(g);
  if (!simple.verdict) {
    v.status = LieStatus::inapplicable;
    v.rule = Rule::algebra_not_simple;
    v.graph_witness = std::move(simple);
    return v;
  }
  if (d == 1 && is_trivial_lpa(g)) {
    v.status = LieStatus::not_simple;
    v.rule = Rule::zero_bracket;
    return v;
  }
  const auto b = b_vectors(g);
  const IntVector ones(g.vertex_count(), BigInt(1));
  if (auto c = span_membership(std::span<const IntVector>(b), ones, field)) {
    v.status = LieStatus::not_simple;
    v.rule = Rule::unit_in_span;
    v.span_coefficients = std::move(c);
    return v;
  }
  if (divides(field.characteristic(), d)) {
    v.status = LieStatus::not_simple;
    v.rule = Rule::char_divides_size;
    return v;
  }
  v.status = LieStatus::simple;
  v.rule = Rule::unit_not_in_span;
  return v;
}

}  // namespace

LieVerdict lie_simplicity(const Graph& g, const FieldSpec& field) { return span_route(g, 1, field); }

LieVerdict matrix_lie_simplicity(const Graph& g, std::uint64_t d, const FieldSpec& field) {
  if (d < 1) throw std::invalid_argument("matrix size must be at least 1");
  return span_route(g, d, field);
}

LieVerdict leavitt_closed_form(std::uint64_t n, std::uint64_t d, const FieldSpec& field) {
  if (n < 2) throw std::invalid_argument("rose size must be at least 2");
  if (d < 1) throw std::invalid_argument("matrix size must be at least 1");
  LieVerdict v;
  v.route = Route::closed_form;
  v.field = field;
  v.rule = Rule::closed_form;
  v.size = d;
  v.rose_size = n;
  const std::uint64_t c = field.characteristic();
  v.status = divides(c, n - 1) && !divides(c, d) ? LieStatus::simple : LieStatus::not_simple;
  return v;
}

LieVerdict lie_simplicity_via_k0(const Graph& g, const FieldSpec& field) {
  LieVerdict v;
  v.route = Route::k0;
  v.field = field;
  SimplicityReport pis = is_purely_infinite_simple(g);
  if (!pis.verdict) {
    v.status = LieStatus::inapplicable;
    v.rule = Rule::not_purely_infinite_simple;
    v.graph_witness = std::move(pis);
    return v;
  }
  K0Presentation k0 = cokernel(m_matrix(g));
  if (field.is_rational()) {
    auto order = class_order(k0);
    if (order) {
      v.status = LieStatus::not_simple;
      v.rule = Rule::unit_class_finite_order;
      v.unit_class_order = std::move(order);
    } else {
      v.status = LieStatus::simple;
      v.rule = Rule::unit_class_infinite_order;
    }
  } else if (is_p_divisible(k0, field.characteristic())) {
    v.status = LieStatus::not_simple;
    v.rule = Rule::unit_class_p_divisible;
  } else {
    v.status = LieStatus::simple;
    v.rule = Rule::unit_class_not_p_divisible;
  }
  v.k0 = std::move(k0);
  return v;
}

std::optional<ScalarVector> vertex_combination_in_commutator(const Graph& g, const ScalarVector& k,
                                                             const FieldSpec& field) {
  const std::size_t m = g.vertex_count();
  if (k.size() != m) {
    throw std::invalid_argument("expected " + std::to_string(m) + " coefficients, got " + std::to_string(k.size()));
  }
  for (const auto& x : k) {
    if (x.field() != field) throw std::invalid_argument("coefficient outside " + field.name());
  }
  const auto b = b_vectors(g);
  const auto regular = g.regular_vertices();
  std::vector<ScalarVector> rows;
  rows.reserve(regular.size());
  for (std::size_t i : regular) rows.push_back(to_field(b[i], field));

  ScalarVector t(m, Scalar::zero(field));
  if (rows.empty()) {
    for (const auto& x : k) {
      if (!x.is_zero()) return std::nullopt;
    }
    return t;
  }
  auto c = span_membership(std::span<const ScalarVector>(rows), k, field);
  if (!c) return std::nullopt;
  for (std::size_t j = 0; j < regular.size(); ++j) t[regular[j]] = (*c)[j];
  return t;
}

KpReport kp_consistency(const Graph& first, const Graph& second, const std::vector<FieldSpec>& fields,
                        std::uint64_t max_group_order) {
  KpReport r;
  r.first_pis = is_purely_infinite_simple(first);
  r.second_pis = is_purely_infinite_simple(second);
  r.first_k0 = cokernel(m_matrix(first));
  r.second_k0 = cokernel(m_matrix(second));
  r.applicable = r.first_pis.verdict && r.second_pis.verdict;
  if (!r.applicable) {
    r.iso = {PointedIso::undecided, "not both purely infinite simple"};
    return r;
  }
  r.iso = pointed_isomorphism(r.first_k0, r.second_k0, max_group_order);
  for (const auto& f : fields) {
    KpRow row{f, lie_simplicity(first, f), lie_simplicity(second, f), true};
    row.agree = row.first.status == row.second.status;
    if (!row.agree && r.iso.result == PointedIso::exists) r.contradiction = true;
    r.rows.push_back(std::move(row));
  }
  return r;
}

}  // namespace lpalie
