#pragma once

#include <map>
#include <optional>
#include <vector>

#include "diffsig/graded_kernel.hpp"
#include "diffsig/groebner.hpp"
#include "diffsig/ring.hpp"

namespace diffsig {

/// The n-th Jacobi-Taylor matrix of R = S/(f_1..f_m): rows nu with |nu| <= n,
/// columns (mu, i) with |mu| <= n-1, entry (1/(nu-mu)!) d^(nu-mu) f_i when
/// mu <= nu (the diagonal nu = mu is f_i, which is zero in R).
struct JacobiTaylorMatrix {
  struct Column {
    Monomial mu;
    std::size_t relation;
  };

  unsigned order = 0;
  std::vector<Monomial> rows;
  std::vector<Column> columns;
  /// Nonzero entries per row, keyed by column index.
  std::vector<std::map<std::size_t, Polynomial>> entries;

  Polynomial entry(std::size_t row, std::size_t col, const RingPresentation& ring) const;
  /// Layout for module_kernel: one row per column (mu, i), one column per nu.
  PolyMatrix kernel_matrix(const RingPresentation& ring) const;
};

JacobiTaylorMatrix jacobi_taylor(const RingPresentation& ring, unsigned n);
/// J_{n+1} from J_n; the old matrix is the upper-left block of the new one.
JacobiTaylorMatrix extend_jacobi_taylor(const RingPresentation& ring, const JacobiTaylorMatrix& prev);

/// The operator sum_lambda a_lambda (1/lambda!) d^lambda of order <= n.
struct OperatorTuple {
  unsigned order = 0;
  std::vector<Monomial> slots;     // every lambda with |lambda| <= order, graded
  std::vector<Polynomial> entries; // a_lambda in normal form modulo the relations

  const Polynomial& at(const Monomial& lambda) const;
  bool is_zero() const;
  /// Weighted degree deg(a_lambda) - w.lambda of a homogeneous tuple.
  std::optional<long> degree(const std::vector<std::uint32_t>& weights) const;
  std::string to_string(const RingPresentation& ring) const;
};

/// Builds an order-n tuple from (lambda, a_lambda) pairs; missing slots are 0.
OperatorTuple make_operator(const RingPresentation& ring, unsigned n,
                            const std::vector<std::pair<Monomial, Polynomial>>& values);

/// Module generators of ker(J_n) over R via module_kernel, each checked
/// against J_n before being returned.
std::vector<OperatorTuple> operators_of_order(const RingPresentation& ring, unsigned n,
                                              const GroebnerOptions& options = {});

/// J_n . tuple == 0 in R.
bool in_kernel(const OperatorTuple& op, const RingPresentation& ring);

Polynomial apply_operator(const OperatorTuple& op, const Polynomial& h, const RingPresentation& ring);

/// Top-order part: the pairs (lambda, a_lambda) with |lambda| = order.
std::vector<std::pair<Monomial, Polynomial>> operator_symbol(const OperatorTuple& op);

/// A slot whose entry has nonzero constant term, if any (graded rings only).
std::optional<Monomial> unitary_witness(const OperatorTuple& op, const RingPresentation& ring);
inline bool is_unitary(const OperatorTuple& op, const RingPresentation& ring) {
  return unitary_witness(op, ring).has_value();
}

struct FreeRankReport {
  unsigned order = 0;
  std::size_t free_rank = 0;
  std::vector<OperatorTuple> witnesses;  // unitary, constant parts independent
  mpz_class ambient_rank;                // binom(d + n, d)
};

/// Free rank of P^n: the number of independent unitary operators of order n.
FreeRankReport free_rank(const RingPresentation& ring, unsigned n, const GroebnerOptions& options = {});

struct MembershipResult {
  bool member = true;
  /// When not a member: an operator of order < n with delta(h) a unit.
  std::optional<OperatorTuple> certificate;
};

MembershipResult diff_power_membership(const Polynomial& h, unsigned n, const RingPresentation& ring,
                                       const GroebnerOptions& options = {});

/// m^<n> by graded linear algebra; generators include the relations.
Ideal diff_power_of_maximal(const RingPresentation& ring, unsigned n, const GroebnerOptions& options = {});

/// J^<n> from the colon formula in K[x, y] with y = x~ - x. J and the result
/// are ideals of S containing the relations.
Ideal diff_power_ideal(const Ideal& j, unsigned n, const RingPresentation& ring,
                       const GroebnerOptions& options = {});

/// Evaluates ((d(J') + Y^[q]) : ((d(I) + Y^[q]) : (I + Y^p))) and contracts to
/// K[x], where Y^[q] = (y_i^q) and Y^p is the p-th power of (y_1..y_k); with
/// no `power` the innermost term is I alone. d(f) = f(x + y).
Ideal differential_colon_ideal(const Ideal& j, unsigned bracket, std::optional<unsigned> power,
                               const RingPresentation& ring, const GroebnerOptions& options = {});

/// The ideal of S generated by `gens` and the relations.
Ideal ring_ideal(const RingPresentation& ring, std::vector<Polynomial> gens);
Ideal maximal_ideal(const RingPresentation& ring);

struct SignatureEntry {
  unsigned n = 0;            // m^<n>
  std::size_t length = 0;    // length of R/m^<n> = free rank of P^(n-1)
  mpq_class ratio_rank;      // length / binom(n-1+d, d)
  mpq_class ratio_volume;    // length / (n^d / d!)
};

struct SignatureSequence {
  std::size_t dimension = 0;
  std::vector<SignatureEntry> entries;
};

/// Entries for P^0 .. P^max_order, i.e. n = 1 .. max_order + 1.
SignatureSequence signature_sequence(const RingPresentation& ring, unsigned max_order,
                                     const GroebnerOptions& options = {});

struct CoreReport {
  Ideal core;
  unsigned window = 0;
  /// J^<N> == J^<N-1>. Equality inside the window does not prove the chain
  /// has stabilized.
  bool last_two_equal = false;
};

CoreReport diff_core_truncated(const Ideal& j, unsigned max_order, const RingPresentation& ring,
                               const GroebnerOptions& options = {});

struct SimplicityWitness {
  unsigned order = 0;
  OperatorTuple op;
  Polynomial image;  // delta(h), with nonzero constant term
};

/// First operator of order <= max_order sending h outside m. Absence
/// proves nothing about higher orders.
std::optional<SimplicityWitness> d_simplicity_witness(const Polynomial& h, unsigned max_order,
                                                      const RingPresentation& ring,
                                                      const GroebnerOptions& options = {});

struct DegreeBoundReport {
  std::vector<long> min_degrees;  // index n-1 for n = 1..N
  mpq_class alpha;
  mpz_class multiplicity;
  std::size_t dimension = 0;
  mpq_class bound;  // e * alpha^d, heuristic over a finite window
};

DegreeBoundReport graded_degree_bound(const RingPresentation& ring, unsigned max_order,
                                      const GroebnerOptions& options = {});

/// Slot and shift index sets of J_n.
GradedKernel jacobi_taylor_kernel(const RingPresentation& ring, unsigned n, const GroebnerOptions& options = {});

}  // namespace diffsig
