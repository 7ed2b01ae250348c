#include "lpalie/field.hpp"

#include <regex>
#include <stdexcept>

namespace lpalie {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > max_characteristic || !is_prime(p)) {
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not a prime below 2^32");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::of_characteristic(std::uint64_t c) {
  return c == 0 ? rationals() : prime(c);
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(characteristic_) + ")";
}

// ---------------------------------------------------------------------------

PrimeFieldElement::PrimeFieldElement(std::uint64_t residue, std::uint64_t modulus)
    : residue_(residue % modulus), modulus_(modulus) {}

PrimeFieldElement PrimeFieldElement::from_integer(const BigInt& n, std::uint64_t modulus) {
  BigInt r;
  BigInt m(static_cast<unsigned long>(modulus));
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return PrimeFieldElement(r.get_ui(), modulus);
}

void PrimeFieldElement::check_modulus(const PrimeFieldElement& o) const {
  if (o.modulus_ != modulus_) throw std::invalid_argument("GF(p) modulus mismatch");
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  check_modulus(o);
  return PrimeFieldElement((residue_ + o.residue_) % modulus_, modulus_);
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  check_modulus(o);
  return PrimeFieldElement((residue_ + modulus_ - o.residue_) % modulus_, modulus_);
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  check_modulus(o);
  // modulus < 2^32, so the product fits in 64 bits
  return PrimeFieldElement((residue_ * o.residue_) % modulus_, modulus_);
}

PrimeFieldElement PrimeFieldElement::operator-() const {
  return PrimeFieldElement((modulus_ - residue_) % modulus_, modulus_);
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (residue_ == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(modulus_) + ")");
  // Fermat: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = residue_;
  std::uint64_t e = modulus_ - 2;
  while (e > 0) {
    if (e & 1) result = (result * base) % modulus_;
    base = (base * base) % modulus_;
    e >>= 1;
  }
  return PrimeFieldElement(result, modulus_);
}

// ---------------------------------------------------------------------------

Scalar::Scalar(const FieldSpec& field, const BigInt& n)
    : value_(field.is_rational()
                 ? std::variant<Rational, PrimeFieldElement>(Rational(n))
                 : std::variant<Rational, PrimeFieldElement>(
                       PrimeFieldElement::from_integer(n, field.characteristic()))) {}

Scalar Scalar::from_rational(const FieldSpec& field, const Rational& value) {
  if (value.get_den() == 0) throw std::domain_error("zero denominator");
  Rational q = value;
  q.canonicalize();
  if (field.is_rational()) return Scalar(std::variant<Rational, PrimeFieldElement>(q));
  auto den = PrimeFieldElement::from_integer(q.get_den(), field.characteristic());
  if (den.residue() == 0) {
    throw std::domain_error("denominator of " + q.get_str() + " vanishes in " + field.name());
  }
  auto num = PrimeFieldElement::from_integer(q.get_num(), field.characteristic());
  return Scalar(std::variant<Rational, PrimeFieldElement>(num * den.inverse()));
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<PrimeFieldElement>(&value_)) return FieldSpec::prime(r->modulus());
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<PrimeFieldElement>(&value_)) return r->residue() == 0;
  return sgn(std::get<Rational>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<PrimeFieldElement>(&value_)) return r->residue() == 1;
  return std::get<Rational>(value_) == 1;
}

void Scalar::check_field(const Scalar& o) const {
  bool same = value_.index() == o.value_.index();
  if (same && value_.index() == 1) {
    same = std::get<PrimeFieldElement>(value_).modulus() ==
           std::get<PrimeFieldElement>(o.value_).modulus();
  }
  if (!same) {
    throw std::invalid_argument("field mismatch: " + field().name() + " vs " + o.field().name());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_field(o);
  if (value_.index() == 0) {
    return Scalar(Rational(std::get<Rational>(value_) + std::get<Rational>(o.value_)));
  }
  return Scalar(std::get<PrimeFieldElement>(value_) + std::get<PrimeFieldElement>(o.value_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_field(o);
  if (value_.index() == 0) {
    return Scalar(Rational(std::get<Rational>(value_) - std::get<Rational>(o.value_)));
  }
  return Scalar(std::get<PrimeFieldElement>(value_) - std::get<PrimeFieldElement>(o.value_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_field(o);
  if (value_.index() == 0) {
    return Scalar(Rational(std::get<Rational>(value_) * std::get<Rational>(o.value_)));
  }
  return Scalar(std::get<PrimeFieldElement>(value_) * std::get<PrimeFieldElement>(o.value_));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_field(o);
  if (o.is_zero()) throw std::domain_error("division by zero in " + field().name());
  if (value_.index() == 0) {
    return Scalar(Rational(std::get<Rational>(value_) / std::get<Rational>(o.value_)));
  }
  return Scalar(std::get<PrimeFieldElement>(value_) * std::get<PrimeFieldElement>(o.value_).inverse());
}

Scalar Scalar::operator-() const {
  if (value_.index() == 0) return Scalar(Rational(-std::get<Rational>(value_)));
  return Scalar(-std::get<PrimeFieldElement>(value_));
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<PrimeFieldElement>(&value_)) return std::to_string(r->residue());
  return std::get<Rational>(value_).get_str();
}

const Rational& Scalar::rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw std::logic_error("rational() on a GF(p) scalar");
}

const PrimeFieldElement& Scalar::residue() const {
  if (const auto* r = std::get_if<PrimeFieldElement>(&value_)) return *r;
  throw std::logic_error("residue() on a rational scalar");
}

Scalar parse_scalar(const FieldSpec& field, const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw std::invalid_argument("malformed coefficient '" + text + "'");
  }
  BigInt num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  BigInt den = m[2].matched ? BigInt(m[2].str()) : BigInt(1);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return Scalar::from_rational(field, q);
}

}  // namespace lpalie
