#include <stdexcept>

#include "lpalie/linalg.hpp"

namespace lpalie {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> smallest_nonzero(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  BigInt best_abs;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      BigInt v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = Position{i, j};
        best_abs = v;
      }
    }
  }
  return best;
}

}  // namespace

IntVector SmithDecomposition::diagonal() const {
  const std::size_t n = std::min(d.rows(), d.cols());
  IntVector diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = d(i, i);
  return diag;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  IntMatrix a(m);
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
    bool empty = false;
    for (;;) {
      auto pivot = smallest_nonzero(a, t);
      if (!pivot) {
        empty = true;
        break;
      }
      a.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      a.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool remainder = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        remainder = remainder || a(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        remainder = remainder || a(t, j) != 0;
      }
      if (remainder) continue;

      // Pivot must divide the whole remaining block; otherwise pull the
      // offending row up so the next round finds a smaller pivot.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < a.rows() && !offending; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      a.add_row_multiple(t, *offending, 1);
      u.add_row_multiple(t, *offending, 1);
    }
    if (empty) break;
    if (a(t, t) < 0) {
      a.negate_col(t);
      v.negate_col(t);
    }
  }
  return SmithDecomposition{std::move(u), std::move(a), std::move(v)};
}

// ---------------------------------------------------------------------------

std::size_t K0Presentation::free_rank() const {
  std::size_t r = 0;
  for (const auto& a : invariant_factors) r += a == 0 ? 1 : 0;
  return r;
}

IntVector K0Presentation::torsion_factors() const {
  IntVector t;
  for (const auto& a : invariant_factors)
    if (a > 1) t.push_back(a);
  return t;
}

BigInt K0Presentation::torsion_order() const {
  BigInt n = 1;
  for (const auto& a : torsion_factors()) n *= a;
  return n;
}

bool K0Presentation::is_trivial() const { return free_rank() == 0 && torsion_factors().empty(); }

K0Presentation cokernel(const IntMatrix& m, const IntVector& element) {
  if (!m.is_square()) throw std::invalid_argument("cokernel presentation needs a square matrix");
  if (element.size() != m.rows()) throw std::invalid_argument("element length does not match matrix");
  SmithDecomposition snf = smith_normal_form(m);
  K0Presentation pres;
  pres.invariant_factors = snf.diagonal();
  pres.unit_class = snf.u * element;
  for (std::size_t i = 0; i < pres.unit_class.size(); ++i) {
    const BigInt& a = pres.invariant_factors[i];
    if (a > 0) mpz_fdiv_r(pres.unit_class[i].get_mpz_t(), pres.unit_class[i].get_mpz_t(), a.get_mpz_t());
  }
  return pres;
}

K0Presentation cokernel(const IntMatrix& m) { return cokernel(m, IntVector(m.rows(), BigInt(1))); }

std::optional<BigInt> class_order(const K0Presentation& pres) {
  BigInt order = 1;
  for (std::size_t i = 0; i < pres.invariant_factors.size(); ++i) {
    const BigInt& a = pres.invariant_factors[i];
    const BigInt& y = pres.unit_class[i];
    if (a == 0) {
      if (y != 0) return std::nullopt;
      continue;
    }
    BigInt g = gcd(a, y);
    order = lcm(order, BigInt(a / g));
  }
  return order;
}

bool is_p_divisible(const K0Presentation& pres, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const BigInt bp(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < pres.invariant_factors.size(); ++i) {
    const BigInt& a = pres.invariant_factors[i];
    const BigInt& y = pres.unit_class[i];
    const BigInt g = a == 0 ? bp : BigInt(gcd(bp, a));
    if (!mpz_divisible_p(y.get_mpz_t(), g.get_mpz_t())) return false;
  }
  return true;
}

}  // namespace lpalie
