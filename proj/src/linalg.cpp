#include "lpalie/linalg.hpp"

#include <stdexcept>

namespace lpalie {

namespace {

struct Echelon {
  std::vector<ScalarVector> rows;
  std::vector<std::size_t> pivot_cols;  // pivot column of row r, r < rank
};

// Gauss-Jordan elimination; pivots are searched only in columns < pivot_limit.
Echelon reduce(std::vector<ScalarVector> a, std::size_t pivot_limit, const FieldSpec& field) {
  Echelon e;
  const std::size_t n = a.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) continue;
    std::swap(a[r], a[p]);
    const Scalar inv = Scalar::one(field) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Scalar f = a[i][c];
      for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rows = std::move(a);
  return e;
}

// Rows are coordinates, columns are the given vectors followed by `extra`.
std::vector<ScalarVector> columns_to_rows(std::span<const ScalarVector> vectors, std::size_t length,
                                          const FieldSpec& field) {
  std::vector<ScalarVector> a(length, ScalarVector(vectors.size(), Scalar::zero(field)));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != length) throw std::invalid_argument("vectors of different lengths");
    for (std::size_t i = 0; i < length; ++i) {
      if (vectors[j][i].field() != field) throw std::invalid_argument("vector entry outside " + field.name());
      a[i][j] = vectors[j][i];
    }
  }
  return a;
}

std::vector<ScalarVector> to_field(std::span<const IntVector> vectors, const FieldSpec& field) {
  std::vector<ScalarVector> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(to_field(v, field));
  return out;
}

}  // namespace

ScalarVector to_field(const IntVector& v, const FieldSpec& field) {
  ScalarVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(field, x);
  return out;
}

Scalar dot(const ScalarVector& a, const ScalarVector& b, const FieldSpec& field) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product of different lengths");
  Scalar s = Scalar::zero(field);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::optional<ScalarVector> span_membership(std::span<const ScalarVector> vectors, const ScalarVector& target,
                                            const FieldSpec& field) {
  const std::size_t n = target.size();
  auto a = columns_to_rows(vectors, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    if (target[i].field() != field) throw std::invalid_argument("target entry outside " + field.name());
    a[i].push_back(target[i]);
  }
  const std::size_t k = vectors.size();
  Echelon e = reduce(std::move(a), k + 1, field);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == k) return std::nullopt;
  ScalarVector coeffs(k, Scalar::zero(field));
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) coeffs[e.pivot_cols[r]] = e.rows[r][k];
  return coeffs;
}

std::optional<ScalarVector> span_membership(std::span<const IntVector> vectors, const IntVector& target,
                                            const FieldSpec& field) {
  auto fv = to_field(vectors, field);
  return span_membership(std::span<const ScalarVector>(fv), to_field(target, field), field);
}

std::size_t span_rank(std::span<const ScalarVector> vectors, std::size_t length, const FieldSpec& field) {
  if (!vectors.empty()) length = vectors.front().size();
  auto a = columns_to_rows(vectors, length, field);
  return reduce(std::move(a), vectors.size(), field).pivot_cols.size();
}

std::size_t span_rank(std::span<const IntVector> vectors, std::size_t length, const FieldSpec& field) {
  auto fv = to_field(vectors, field);
  return span_rank(std::span<const ScalarVector>(fv), length, field);
}

std::optional<ScalarVector> exclusion_functional(std::span<const ScalarVector> vectors, const ScalarVector& target,
                                                 const FieldSpec& field) {
  const std::size_t n = target.size();
  const std::size_t k = vectors.size();
  auto a = columns_to_rows(vectors, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    a[i].push_back(target[i]);
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(i == j ? Scalar::one(field) : Scalar::zero(field));
  }
  Echelon e = reduce(std::move(a), k + 1, field);
  if (e.pivot_cols.empty() || e.pivot_cols.back() != k) return std::nullopt;
  const auto& row = e.rows[e.pivot_cols.size() - 1];
  return ScalarVector(row.begin() + static_cast<std::ptrdiff_t>(k + 1), row.end());
}

}  // namespace lpalie
