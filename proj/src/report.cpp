#include "lpalie/report.hpp"

#include <limits>

namespace lpalie {

using json = nlohmann::ordered_json;

json to_json(const BigInt& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return json(n.get_si());
  return json(n.get_str());
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const Scalar& s) {
  if (s.field().is_rational()) {
    const Rational& q = s.rational();
    if (q.get_den() == 1) return to_json(BigInt(q.get_num()));
    return json(s.to_string());
  }
  return json(s.residue().residue());
}

json to_json(const ScalarVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

std::string format_scalars(const ScalarVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += v[i].to_string();
  }
  s += ")";
  if (!v.empty() && !v.front().field().is_rational()) s += " mod " + std::to_string(v.front().field().characteristic());
  return s;
}

std::string format_group(const K0Presentation& k0) {
  std::string s;
  auto append = [&s](const std::string& piece) {
    if (!s.empty()) s += " + ";
    s += piece;
  };
  for (std::size_t i = 0; i < k0.free_rank(); ++i) append("Z");
  for (const auto& a : k0.torsion_factors()) append("Z/" + a.get_str());
  return s.empty() ? "0" : s;
}

IntVector visible_unit_class(const K0Presentation& k0) {
  IntVector out;
  for (std::size_t i = 0; i < k0.invariant_factors.size(); ++i) {
    if (k0.invariant_factors[i] != 1) out.push_back(k0.unit_class[i]);
  }
  return out;
}

json k0_json(const K0Presentation& k0) {
  json out;
  out["group"] = format_group(k0);
  out["invariant_factors"] = to_json(k0.invariant_factors);
  out["torsion_factors"] = to_json(k0.torsion_factors());
  out["free_rank"] = k0.free_rank();
  out["torsion_order"] = to_json(k0.torsion_order());
  out["unit_class"] = to_json(visible_unit_class(k0));
  out["unit_class_all_coordinates"] = to_json(k0.unit_class);
  auto order = class_order(k0);
  out["unit_class_order"] = order ? to_json(*order) : json("infinite");
  return out;
}

namespace {

std::string edge_word(const std::vector<std::size_t>& edges, const Graph& g) {
  std::string s;
  for (std::size_t e : edges) {
    if (!s.empty()) s += ' ';
    s += g.edge(e).label;
  }
  return s;
}

std::string kind_name(UnreachedTarget::Kind k) { return k == UnreachedTarget::Kind::sink ? "sink" : "cycle vertex"; }

}  // namespace

std::string describe(const SimplicityWitness& w, const Graph& g) {
  if (const auto* u = std::get_if<UnreachedTarget>(&w)) {
    return g.vertex(u->from).label + " does not reach " + kind_name(u->kind) + " " + g.vertex(u->target).label;
  }
  if (const auto* c = std::get_if<CycleWithoutExit>(&w)) return "cycle " + edge_word(c->edges, g) + " has no exit";
  return "the graph has no cycle";
}

json witness_json(const SimplicityWitness& w, const Graph& g) {
  json out;
  if (const auto* u = std::get_if<UnreachedTarget>(&w)) {
    out["kind"] = u->kind == UnreachedTarget::Kind::sink ? "unreached-sink" : "unreached-cycle-vertex";
    out["from"] = g.vertex(u->from).label;
    out["target"] = g.vertex(u->target).label;
  } else if (const auto* c = std::get_if<CycleWithoutExit>(&w)) {
    out["kind"] = "cycle-without-exit";
    json edges = json::array();
    for (std::size_t e : c->edges) edges.push_back(g.edge(e).label);
    out["edges"] = edges;
  } else {
    out["kind"] = "no-cycle";
  }
  out["text"] = describe(w, g);
  return out;
}

json simplicity_json(const SimplicityReport& r, const Graph& g) {
  json out;
  out["verdict"] = r.verdict;
  json ws = json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_json(w, g));
  out["witnesses"] = ws;
  return out;
}

std::string describe(const LieVerdict& v) {
  const std::string f = v.field.name();
  const std::string c = std::to_string(v.field.characteristic());
  switch (v.rule) {
    case Rule::algebra_not_simple:
      return "the Leavitt path algebra is not simple, so no verdict is drawn";
    case Rule::not_purely_infinite_simple:
      return "the Leavitt path algebra is not purely infinite simple, so the K0 route does not apply";
    case Rule::zero_bracket:
      return "one vertex and no edges: the algebra is commutative and [L, L] = 0";
    case Rule::unit_in_span:
      return "(1, ..., 1) lies in the span of the B-vectors over " + f;
    case Rule::unit_not_in_span:
      if (v.size > 1) {
        return "(1, ..., 1) is not in the span of the B-vectors over " + f + " and " + c + " does not divide " +
               std::to_string(v.size);
      }
      return "(1, ..., 1) is not in the span of the B-vectors over " + f;
    case Rule::char_divides_size:
      return "(1, ..., 1) is not in the span of the B-vectors over " + f + ", but " + c + " divides the matrix size " +
             std::to_string(v.size);
    case Rule::closed_form: {
      const std::string n1 = std::to_string(v.rose_size - 1);
      const std::string d = std::to_string(v.size);
      if (v.field.is_rational()) return "characteristic 0 never divides " + n1;
      const bool divides_n1 = (v.rose_size - 1) % v.field.characteristic() == 0;
      const bool divides_d = v.size % v.field.characteristic() == 0;
      return c + (divides_n1 ? " divides " : " does not divide ") + n1 + " and " + (divides_d ? "divides " : "does not divide ") + d;
    }
    case Rule::unit_class_infinite_order:
      return "the class of the unit has infinite order in K0";
    case Rule::unit_class_finite_order:
      return "the class of the unit has finite order " + (v.unit_class_order ? v.unit_class_order->get_str() : "?") +
             " in K0";
    case Rule::unit_class_p_divisible:
      return "the class of the unit is " + c + "-divisible in K0";
    case Rule::unit_class_not_p_divisible:
      return "the class of the unit is not " + c + "-divisible in K0";
  }
  return "";
}

namespace {

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::algebra_not_simple: return "algebra-not-simple";
    case Rule::not_purely_infinite_simple: return "not-purely-infinite-simple";
    case Rule::zero_bracket: return "zero-bracket";
    case Rule::unit_in_span: return "unit-in-span";
    case Rule::unit_not_in_span: return "unit-not-in-span";
    case Rule::char_divides_size: return "char-divides-size";
    case Rule::closed_form: return "closed-form";
    case Rule::unit_class_infinite_order: return "unit-class-infinite-order";
    case Rule::unit_class_finite_order: return "unit-class-finite-order";
    case Rule::unit_class_p_divisible: return "unit-class-p-divisible";
    case Rule::unit_class_not_p_divisible: return "unit-class-not-p-divisible";
  }
  return "";
}

}  // namespace

json verdict_json(const LieVerdict& v, const Graph* g) {
  json out;
  out["characteristic"] = v.field.characteristic();
  out["field"] = v.field.name();
  out["status"] = to_string(v.status);
  out["route"] = to_string(v.route);
  out["rule"] = rule_name(v.rule);
  out["reason"] = describe(v);
  out["matrix_size"] = v.size;
  if (v.route == Route::closed_form) out["rose_size"] = v.rose_size;
  if (v.span_coefficients) out["span_coefficients"] = to_json(*v.span_coefficients);
  if (v.graph_witness && g != nullptr) out["graph_witness"] = simplicity_json(*v.graph_witness, *g);
  if (v.k0) out["k0"] = k0_json(*v.k0);
  if (v.unit_class_order) out["unit_class_order"] = to_json(*v.unit_class_order);
  return out;
}

json graph_summary_json(const Graph& g) {
  json out;
  json labels = json::array();
  for (const auto& v : g.vertices()) labels.push_back(v.label);
  out["vertices"] = labels;
  out["vertex_count"] = g.vertex_count();
  out["edge_count"] = g.edge_count();
  json sinks = json::array();
  for (std::size_t v : g.sinks()) sinks.push_back(g.vertex(v).label);
  out["sinks"] = sinks;
  json regular = json::array();
  for (std::size_t v : g.regular_vertices()) regular.push_back(g.vertex(v).label);
  out["regular"] = regular;
  return out;
}

}  // namespace lpalie
