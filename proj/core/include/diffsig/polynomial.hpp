#pragma once

#include <span>
#include <string>
#include <vector>

#include "diffsig/field.hpp"
#include "diffsig/monomial.hpp"

namespace diffsig {

struct Term {
  Monomial monomial;
  FieldElement coeff;
};

/// Sparse multivariate polynomial. Terms are kept in descending
/// (unweighted) degrevlex order with no zero coefficients, so equal
/// polynomials have identical term lists.
class Polynomial {
 public:
  Polynomial(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static Polynomial constant(Field field, std::size_t nvars, const FieldElement& c);
  static Polynomial monomial(Field field, const Monomial& m, const FieldElement& c);
  static Polynomial variable(Field field, std::size_t nvars, std::size_t var);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Polynomial from_terms(Field field, std::size_t nvars, std::vector<Term> terms);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  /// Coefficient of the constant monomial.
  FieldElement constant_term() const;
  FieldElement coefficient(const Monomial& m) const;
  /// Largest total degree; -1 for the zero polynomial.
  long degree() const;
  long weighted_degree(std::span<const std::uint32_t> weights) const;
  long min_weighted_degree(std::span<const std::uint32_t> weights) const;
  bool is_homogeneous(std::span<const std::uint32_t> weights = {}) const;
  /// The part of weighted degree exactly d.
  Polynomial homogeneous_component(std::span<const std::uint32_t> weights, std::uint64_t d) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(unsigned k) const;

  /// Re-embeds into a ring with `new_nvars` variables, sending variable i to
  /// variable `target[i]`.
  Polynomial rename(std::size_t new_nvars, std::span<const std::size_t> target) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Canonical text, e.g. "x^2*y - 1/2*z + 3". Parses back to the same value.
  std::string to_string(std::span<const std::string> names) const;

 private:
  void normalize();

  Field field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Canonical storage order: descending unweighted degrevlex.
int canonical_compare(const Monomial& a, const Monomial& b);

/// (1/lambda!) d^lambda applied to f: each x^nu maps to
/// prod_i binom(nu_i, lambda_i) x^(nu - lambda), binomials reduced into the
/// field. No factorial division occurs, so this is valid in every
/// characteristic.
Polynomial divided_power_derivative(const Polynomial& f, const Monomial& lambda);

/// f(x + y) expanded in 2k variables (x first, then y):
/// sum over lambda of divided_power_derivative(f, lambda)(x) * y^lambda.
Polynomial taylor_shift(const Polynomial& f);

}  // namespace diffsig
