#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace diffsig {

/// Raised for violated preconditions and malformed input. The CLI maps it to
/// exit status 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a configured work budget (S-pairs, index boxes) runs out.
/// The CLI maps it to exit status 2.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Residue class modulo a prime that fits in 32 bits.
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t prime = 2;
};

/// An exact scalar: either a rational in lowest terms or a residue mod p.
class FieldElement {
 public:
  FieldElement() : rep_(mpq_class(0)) {}
  explicit FieldElement(mpq_class q) : rep_(std::move(q)) { std::get<mpq_class>(rep_).canonicalize(); }
  explicit FieldElement(Residue r) : rep_(r) {}

  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }
  const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
  const Residue& residue() const { return std::get<Residue>(rep_); }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// "a/b" for rationals, decimal residue otherwise.
  std::string to_string() const;

 private:
  std::variant<mpq_class, Residue> rep_;
};

/// Coefficient field descriptor: the rationals or a prime field.
class Field {
 public:
  enum class Kind { Rational, Prime };

  static Field rationals() { return Field(Kind::Rational, 0); }
  /// Throws DomainError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }

  FieldElement zero() const { return from_int(0); }
  FieldElement one() const { return from_int(1); }
  FieldElement from_int(long v) const;
  FieldElement from_mpz(const mpz_class& v) const;
  /// Throws DomainError if the denominator vanishes in the field.
  FieldElement from_rational(const mpq_class& v) const;

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  std::string to_string() const;

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact binomial coefficient.
mpz_class binomial(long n, long k);

}  // namespace diffsig
