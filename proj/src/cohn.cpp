#include "lpalie/cohn.hpp"

#include <algorithm>
#include <tuple>

namespace lpalie {

PathWord PathWord::vertex(const Graph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw PreconditionError("vertex index out of range");
  return PathWord(v, v, {});
}

PathWord PathWord::path(const Graph& g, std::vector<std::size_t> edges) {
  if (edges.empty()) throw PreconditionError("a path needs at least one edge; use PathWord::vertex");
  for (std::size_t e : edges) {
    if (e >= g.edge_count()) throw PreconditionError("edge index out of range");
  }
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    if (g.edge(edges[k]).target != g.edge(edges[k + 1]).source) {
      throw PreconditionError("edges " + g.edge(edges[k]).label + " and " + g.edge(edges[k + 1]).label +
                              " do not compose");
    }
  }
  const std::size_t s = g.edge(edges.front()).source;
  const std::size_t r = g.edge(edges.back()).target;
  return PathWord(s, r, std::move(edges));
}

bool PathWord::is_prefix_of(const PathWord& other) const {
  if (source_ != other.source_) return false;
  if (edges_.size() > other.edges_.size()) return false;
  return std::equal(edges_.begin(), edges_.end(), other.edges_.begin());
}

PathWord PathWord::remainder_after(const PathWord& prefix) const {
  if (!prefix.is_prefix_of(*this)) throw PreconditionError("remainder_after: not a prefix");
  std::vector<std::size_t> rest(edges_.begin() + static_cast<std::ptrdiff_t>(prefix.length()), edges_.end());
  return PathWord(prefix.range_, range_, std::move(rest));
}

PathWord PathWord::concat(const PathWord& tail) const {
  if (range_ != tail.source_) throw PreconditionError("concat: paths do not compose");
  std::vector<std::size_t> joined(edges_);
  joined.insert(joined.end(), tail.edges_.begin(), tail.edges_.end());
  return PathWord(source_, tail.range_, std::move(joined));
}

CohnTerm CohnTerm::make(PathWord p, PathWord q) {
  if (p.range() != q.range()) throw PreconditionError("p q^* needs r(p) = r(q)");
  return CohnTerm{std::move(p), std::move(q)};
}

// ---------------------------------------------------------------------------

CohnElement CohnElement::term(const CohnTerm& t, const Scalar& coefficient) {
  CohnElement x(coefficient.field());
  x.add_term(t, coefficient);
  return x;
}

CohnElement CohnElement::vertex(const Graph& g, const FieldSpec& field, std::size_t v) {
  auto w = PathWord::vertex(g, v);
  return term(CohnTerm{w, w}, Scalar::one(field));
}

CohnElement CohnElement::edge(const Graph& g, const FieldSpec& field, std::size_t e) {
  return path(field, PathWord::path(g, {e}));
}

CohnElement CohnElement::ghost_edge(const Graph& g, const FieldSpec& field, std::size_t e) {
  return ghost_path(field, PathWord::path(g, {e}));
}

CohnElement CohnElement::path(const FieldSpec& field, const PathWord& p) {
  return term(CohnTerm{p, p.remainder_after(p)}, Scalar::one(field));
}

CohnElement CohnElement::ghost_path(const FieldSpec& field, const PathWord& q) {
  return term(CohnTerm{q.remainder_after(q), q}, Scalar::one(field));
}

void CohnElement::add_term(const CohnTerm& t, const Scalar& coefficient) {
  if (coefficient.field() != field_) throw std::invalid_argument("coefficient outside " + field_.name());
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

void CohnElement::check_field(const CohnElement& o) const {
  if (o.field_ != field_) throw std::invalid_argument("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

CohnElement& CohnElement::operator+=(const CohnElement& o) {
  check_field(o);
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

CohnElement& CohnElement::operator-=(const CohnElement& o) {
  check_field(o);
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

CohnElement CohnElement::operator+(const CohnElement& o) const {
  CohnElement r(*this);
  r += o;
  return r;
}

CohnElement CohnElement::operator-(const CohnElement& o) const {
  CohnElement r(*this);
  r -= o;
  return r;
}

CohnElement CohnElement::operator-() const { return CohnElement(field_) - *this; }

CohnElement operator*(const Scalar& c, const CohnElement& x) {
  if (c.field() != x.field()) throw std::invalid_argument("field mismatch in scalar multiple");
  CohnElement r(x.field());
  for (const auto& [t, a] : x.terms()) r.add_term(t, c * a);
  return r;
}

namespace {

// (p q^*)(t z^*) = p h z^* if t = q h;  p (z h)^* if q = t h;  0 otherwise.
std::optional<CohnTerm> multiply_terms(const CohnTerm& a, const CohnTerm& b) {
  if (a.q.is_prefix_of(b.p)) return CohnTerm{a.p.concat(b.p.remainder_after(a.q)), b.q};
  if (b.p.is_prefix_of(a.q)) return CohnTerm{a.p, b.q.concat(a.q.remainder_after(b.p))};
  return std::nullopt;
}

}  // namespace

CohnElement multiply(const CohnElement& x, const CohnElement& y) {
  if (x.field() != y.field()) {
    throw std::invalid_argument("field mismatch: " + x.field().name() + " vs " + y.field().name());
  }
  CohnElement r(x.field());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      if (auto t = multiply_terms(a, b)) r.add_term(*t, ca * cb);
    }
  }
  return r;
}

CohnElement commutator(const CohnElement& x, const CohnElement& y) { return multiply(x, y) - multiply(y, x); }

ScalarVector trace(const CohnElement& x, std::size_t vertex_count) {
  ScalarVector out(vertex_count, Scalar::zero(x.field()));
  for (const auto& [t, c] : x.terms()) {
    if (t.p != t.q) continue;
    if (t.p.range() >= vertex_count) throw std::invalid_argument("trace: vertex outside the graph");
    out[t.p.range()] += c;
  }
  return out;
}

CohnElement n_generator(const Graph& g, const FieldSpec& field, std::size_t v) {
  if (v >= g.vertex_count()) throw PreconditionError("vertex index out of range");
  if (g.is_sink(v)) throw PreconditionError("vertex " + g.vertex(v).label + " is a sink");
  CohnElement y = CohnElement::vertex(g, field, v);
  for (std::size_t e : g.out_edges(v)) {
    auto p = PathWord::path(g, {e});
    y.add_term(CohnTerm{p, p}, -Scalar::one(field));
  }
  return y;
}

// ---------------------------------------------------------------------------

CommutatorWitness build_commutator_witness(const Graph& g, const ScalarVector& t, const FieldSpec& field) {
  const std::size_t m = g.vertex_count();
  if (t.size() != m) throw PreconditionError("t has length " + std::to_string(t.size()) + ", expected " +
                                             std::to_string(m));
  CommutatorWitness w{{}, CohnElement(field), CohnElement(field), CohnElement(field)};
  const auto b = b_vectors(g);
  ScalarVector k(m, Scalar::zero(field));
  for (std::size_t i = 0; i < m; ++i) {
    if (t[i].field() != field) throw PreconditionError("t lives outside " + field.name());
    if (t[i].is_zero()) continue;
    if (!g.is_regular(i)) throw PreconditionError("t is nonzero at sink " + g.vertex(i).label);
    const Scalar c = -t[i];
    for (std::size_t e : g.out_edges(i)) {
      w.edge_commutators.emplace_back(c, e);
      w.commutator_sum += c * commutator(CohnElement::edge(g, field, e), CohnElement::ghost_edge(g, field, e));
    }
    w.correction += t[i] * n_generator(g, field, i);
    for (std::size_t j = 0; j < m; ++j) k[j] += t[i] * Scalar(field, b[i][j]);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (!k[j].is_zero()) w.vertex_combination += k[j] * CohnElement::vertex(g, field, j);
  }
  return w;
}

bool verify_witness(const Graph& g, const ScalarVector& k, const ScalarVector& t, const FieldSpec& field) {
  const std::size_t m = g.vertex_count();
  if (k.size() != m) throw PreconditionError("k has length " + std::to_string(k.size()) + ", expected " +
                                             std::to_string(m));
  for (const auto& x : k) {
    if (x.field() != field) throw PreconditionError("k lives outside " + field.name());
  }
  CommutatorWitness w = build_commutator_witness(g, t, field);

  CohnElement target(field);
  for (std::size_t j = 0; j < m; ++j) target += k[j] * CohnElement::vertex(g, field, j);
  if (target != w.vertex_combination) throw PreconditionError("k is not sum_i t_i B_i");

  return w.commutator_sum == target + w.correction;
}

namespace {

bool is_closed(const PathWord& x) { return x.source() == x.range(); }

}  // namespace

std::vector<CommutatorIdentity> lemma_commutator_witness(const Graph& g, const PathWord& p,
                                                         const std::optional<PathWord>& q, const FieldSpec& field) {
  auto finish = [](CommutatorIdentity id) {
    id.commutator_sum = CohnElement(id.target.field());
    for (const auto& [a, b] : id.commutators) id.commutator_sum += commutator(a, b);
    id.verified = id.commutator_sum == id.target;
    return id;
  };

  if (p.is_vertex()) throw PreconditionError("p must have length >= 1");
  const auto range_p = CohnElement::vertex(g, field, p.range());

  if (!q) {
    if (is_closed(p)) throw PreconditionError("s(p) = r(p): p is a closed path");
    const auto pe = CohnElement::path(field, p);
    const auto pg = CohnElement::ghost_path(field, p);
    return {finish(CommutatorIdentity{pe, {{pe, range_p}}, CohnElement(field), false}),
            finish(CommutatorIdentity{pg, {{range_p, pg}}, CohnElement(field), false})};
  }

  if (q->is_vertex()) throw PreconditionError("q must have length >= 1");

  // p q^* vanishes when r(p) != r(q); that is also the only way a non-closed
  // x can appear below.
  CohnElement target(field);
  if (p.range() == q->range()) target = CohnElement::term(CohnTerm{p, *q}, Scalar::one(field));
  CommutatorIdentity id{std::move(target),
                        {{CohnElement::path(field, p), CohnElement::ghost_path(field, *q)}},
                        CohnElement(field),
                        false};
  if (q->is_prefix_of(p)) {
    // p = q x, so [p, q^*] = p q^* - x and x = [x, r(x)].
    const PathWord x = p.remainder_after(*q);
    if (x.is_vertex() || is_closed(x)) throw PreconditionError("p is q followed by a closed path");
    id.commutators.emplace_back(CohnElement::path(field, x), CohnElement::vertex(g, field, x.range()));
  } else if (p.is_prefix_of(*q)) {
    // q = p x, so [p, q^*] = p q^* - x^* and x^* = [r(x), x^*].
    const PathWord x = q->remainder_after(p);
    if (x.is_vertex() || is_closed(x)) throw PreconditionError("q is p followed by a closed path");
    id.commutators.emplace_back(CohnElement::vertex(g, field, x.range()), CohnElement::ghost_path(field, x));
  }
  return {finish(std::move(id))};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> tokens(const PathWord& p, const Graph& g) {
  std::vector<std::string> out;
  if (p.is_vertex()) {
    out.push_back(g.vertex(p.source()).label);
    return out;
  }
  for (std::size_t e : p.edges()) out.push_back(g.edge(e).label);
  return out;
}

std::string term_text(const CohnTerm& t, const Graph& g) {
  std::string s;
  auto append = [&s](const std::string& piece) {
    if (!s.empty()) s += ' ';
    s += piece;
  };
  if (t.p == t.q && t.p.is_vertex()) return g.vertex(t.p.source()).label;
  if (!t.p.is_vertex()) {
    for (const auto& e : tokens(t.p, g)) append(e);
  }
  if (!t.q.is_vertex()) {
    const auto qs = tokens(t.q, g);
    for (auto it = qs.rbegin(); it != qs.rend(); ++it) append(*it + "^*");
  }
  return s;
}

}  // namespace

std::string to_string(const PathWord& p, const Graph& g) {
  std::string s;
  for (const auto& t : tokens(p, g)) {
    if (!s.empty()) s += ' ';
    s += t;
  }
  return s;
}

std::string to_string(const CohnElement& x, const Graph& g) {
  if (x.is_zero()) return "0";
  using Key = std::tuple<std::size_t, std::vector<std::string>, std::vector<std::string>>;
  std::vector<std::pair<Key, std::string>> items;
  for (const auto& [t, c] : x.terms()) {
    Key key{t.p.length() + t.q.length(), tokens(t.p, g), tokens(t.q, g)};
    items.emplace_back(std::move(key), c.to_string() + " * " + term_text(t, g));
  }
  std::sort(items.begin(), items.end());
  std::string s;
  for (const auto& [key, text] : items) {
    if (!s.empty()) s += " + ";
    s += text;
  }
  return s;
}

}  // namespace lpalie
