#pragma once

// Prime-subfield arithmetic. Every computation in the library happens over
// either the rationals (characteristic 0) or GF(p); a larger field of the
// same characteristic never changes an answer, so it is never materialized.

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace lpalie {

using BigInt = mpz_class;
using Rational = mpq_class;

bool is_prime(std::uint64_t n);

/// Characteristic of the coefficient field: 0 (rationals) or a prime below 2^32.
class FieldSpec {
 public:
  static constexpr std::uint64_t max_characteristic = 0xFFFFFFFFull;

  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws std::invalid_argument unless `p` is a prime below 2^32.
  static FieldSpec prime(std::uint64_t p);
  /// 0 selects the rationals; anything else must be prime.
  static FieldSpec of_characteristic(std::uint64_t c);

  std::uint64_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }

  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t c) : characteristic_(c) {}
  std::uint64_t characteristic_ = 0;
};

/// Residue modulo a prime, kept in [0, p).
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::uint64_t residue, std::uint64_t modulus);
  static PrimeFieldElement from_integer(const BigInt& n, std::uint64_t modulus);

  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return modulus_; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const;
  /// Throws std::domain_error on zero.
  PrimeFieldElement inverse() const;

  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;

 private:
  void check_modulus(const PrimeFieldElement& o) const;
  std::uint64_t residue_;
  std::uint64_t modulus_;
};

/// An element of the prime subfield named by a FieldSpec. Mixing elements of
/// different fields throws std::invalid_argument.
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() : value_(Rational(0)) {}
  /// Image of an integer in `field`.
  Scalar(const FieldSpec& field, const BigInt& n);
  /// Image of a rational in `field`; throws std::domain_error when the
  /// denominator vanishes modulo the characteristic.
  static Scalar from_rational(const FieldSpec& field, const Rational& q);
  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws std::domain_error on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar&, const Scalar&) = default;

  /// Lowest terms `a/b` (or `a`) over Q; least non-negative residue over GF(p).
  std::string to_string() const;

  /// Only valid over Q.
  const Rational& rational() const;
  /// Only valid over GF(p).
  const PrimeFieldElement& residue() const;

 private:
  explicit Scalar(std::variant<Rational, PrimeFieldElement> v) : value_(std::move(v)) {}
  void check_field(const Scalar& o) const;
  std::variant<Rational, PrimeFieldElement> value_;
};

/// Parses `a`, `-a` or `a/b` into the prime subfield of `field`.
Scalar parse_scalar(const FieldSpec& field, const std::string& text);

}  // namespace lpalie
