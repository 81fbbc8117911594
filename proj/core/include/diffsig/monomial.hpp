#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace diffsig {

/// Exponent vector x^e over a fixed number of variables. Entries are 32-bit;
/// overflow on multiplication throws DomainError.
class Monomial {
 public:
  using Storage = boost::container::small_vector<std::uint32_t, 8>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<std::uint32_t> e) : exps_(e) { recompute_degree(); }
  explicit Monomial(std::span<const std::uint32_t> e) : exps_(e.begin(), e.end()) { recompute_degree(); }

  static Monomial unit(std::size_t nvars, std::size_t var, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::uint32_t v) {
    degree_ += std::uint64_t(v) - exps_[i];
    exps_[i] = v;
  }
  /// Total (unweighted) degree |e|.
  std::uint64_t degree() const { return degree_; }
  std::uint64_t weighted_degree(std::span<const std::uint32_t> weights) const;
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const;
  /// Requires o | *this.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // *this | o
  /// Componentwise e <= o (same as divides).
  bool leq(const Monomial& o) const { return divides(o); }
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  const Storage& exponents() const { return exps_; }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

  std::size_t hash() const;

 private:
  void recompute_degree();
  Storage exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded order on exponents used for row/slot enumeration: by total degree,
/// then lexicographically with larger leading exponents first
/// (1, a, b, c, a^2, ab, ac, b^2, bc, c^2).
bool graded_lex_before(const Monomial& a, const Monomial& b);

/// All exponent vectors in nvars variables of total degree exactly d, in
/// graded_lex_before order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);
/// All exponent vectors of total degree <= d, graded.
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::uint32_t d);
/// All exponent vectors with weighted degree exactly d.
std::vector<Monomial> monomials_of_weighted_degree(std::span<const std::uint32_t> weights,
                                                   std::uint64_t d);

/// A term order on monomials. Block-elimination orders compare the
/// eliminated block first (degrevlex within each block), so eliminated
/// variables are greatest.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Elimination };

  static MonomialOrder degrevlex(std::vector<std::uint32_t> weights = {});
  static MonomialOrder lex();
  /// `eliminated[i]` marks variables in the greater block.
  static MonomialOrder elimination(std::vector<bool> eliminated);

  Kind kind() const { return kind_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  const std::vector<bool>& eliminated() const { return eliminated_; }

  /// <0, 0, >0 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const;

 private:
  int compare_degrevlex(const Monomial& a, const Monomial& b) const;
  int compare_block(const Monomial& a, const Monomial& b, bool block) const;

  Kind kind_ = Kind::DegRevLex;
  std::vector<std::uint32_t> weights_;
  std::vector<bool> eliminated_;
};

}  // namespace diffsig
