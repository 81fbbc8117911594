#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "diffsig/groebner.hpp"
#include "diffsig/linalg.hpp"
#include "diffsig/ring.hpp"

namespace diffsig {

/// Homogeneous components R_k of a graded presentation, as K-vector spaces
/// with the standard-monomial basis of the relation ideal.
///
/// Holds mutable caches, so one instance must not be shared between threads.
class GradedQuotient {
 public:
  explicit GradedQuotient(const RingPresentation& ring, const GroebnerOptions& options = {});

  const RingPresentation& ring() const { return ring_; }
  const Ideal& relations() const { return relations_; }

  /// Standard monomials of weighted degree k, in graded_lex_before order.
  const std::vector<Monomial>& basis(std::uint64_t k);
  std::size_t dimension(std::uint64_t k) { return basis(k).size(); }

  /// Normal form of a monomial as coordinates over basis(weighted degree).
  const SparseRow& coordinates(const Monomial& m);
  /// Coordinates of a homogeneous polynomial of weighted degree k.
  SparseRow coordinates(const Polynomial& f, std::uint64_t k);
  Polynomial from_coordinates(std::uint64_t k, const SparseRow& v);

 private:
  RingPresentation ring_;
  Ideal relations_;
  std::map<std::uint64_t, std::vector<Monomial>> bases_;
  std::map<std::uint64_t, std::unordered_map<Monomial, std::uint32_t, MonomialHash>> index_;
  std::unordered_map<Monomial, SparseRow, MonomialHash> coords_;
};

/// Monomials not divisible by any leading monomial of `basis` (a Gröbner
/// basis). Throws DomainError if there are infinitely many.
std::vector<Monomial> standard_monomials(const std::vector<Polynomial>& basis, const MonomialOrder& order,
                                         std::size_t nvars);

/// K-dimension of S/J for an ideal of finite colength.
std::size_t quotient_length(const Ideal& ideal, const GroebnerOptions& options = {});

/// Krull dimension of S/J: the size of a largest set of variables
/// independent modulo the leading ideal.
std::size_t krull_dimension(const Ideal& ideal, const GroebnerOptions& options = {});
std::size_t krull_dimension(const RingPresentation& ring, const GroebnerOptions& options = {});

/// Multiplicity e(R) from the Hilbert series of the leading ideal.
/// Requires a graded presentation with standard weights.
mpz_class multiplicity(const RingPresentation& ring, const GroebnerOptions& options = {});

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^k of S/(monomials),
/// coefficients listed by ascending power of t.
std::vector<mpz_class> hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars);

}  // namespace diffsig
