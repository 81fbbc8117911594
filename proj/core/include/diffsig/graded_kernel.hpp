#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "diffsig/quotient.hpp"

namespace diffsig {

/// Homogeneous pieces of the kernel of a Jacobi-Taylor-type system over a
/// graded ring R: tuples (a_nu) indexed by `slots` with
///   sum_{nu >= mu} a_nu * (1/(nu-mu)!) d^(nu-mu) f_i = 0  in R
/// for every shift mu and relation f_i. A tuple is homogeneous of degree t
/// when a_nu lies in R_{t + w.nu}.
///
/// Each degree is a finite linear system over K, solved exactly. Not
/// thread-safe (caches derivatives and normal forms).
class GradedKernel {
 public:
  GradedKernel(const RingPresentation& ring, std::vector<Monomial> slots, std::vector<Monomial> shifts,
               const GroebnerOptions& options = {});

  const std::vector<Monomial>& slots() const { return slots_; }
  const RingPresentation& ring() const { return quotient_.ring(); }
  GradedQuotient& quotient() { return quotient_; }
  /// Largest weighted degree w.nu over the slots.
  std::uint64_t max_slot_weight() const { return max_slot_weight_; }

  /// K-basis of the degree-t kernel, each element as one polynomial per slot.
  std::vector<std::vector<Polynomial>> kernel(long t);

  /// Kernel elements of degree -s whose constant parts (on the slots of
  /// weight s) form a basis of the space V_s of all such constant parts.
  struct Unitary {
    std::vector<std::size_t> slot_ids;                 // slots nu with w.nu = s
    std::vector<std::vector<Polynomial>> witnesses;    // full tuples
    std::vector<std::vector<FieldElement>> constants;  // constant parts on slot_ids
  };
  const Unitary& unitary(std::uint64_t s);

  /// sum_s dim V_s: the number of independent unitary tuples.
  std::size_t unitary_rank();

  /// Constant term of delta(h) is sum_nu const(a_nu) * coeff_{x^nu}(h). Returns
  /// a witness tuple pairing nontrivially with h, if one exists.
  std::optional<std::vector<Polynomial>> separating_witness(const Polynomial& h);

  /// Generators (relations included) of {h : delta(h) in m for every tuple}.
  std::vector<Polynomial> orthogonal_ideal();
  /// K-dimension of R modulo that ideal.
  std::size_t orthogonal_colength();

 private:
  const Polynomial& derivative(const Monomial& lambda, std::size_t relation);
  std::vector<std::vector<FieldElement>> pairing_matrix(std::uint64_t k);

  GradedQuotient quotient_;
  std::vector<Monomial> slots_;
  std::vector<Monomial> shifts_;
  std::vector<std::uint64_t> slot_weight_;
  std::vector<std::uint64_t> shift_weight_;
  std::vector<std::uint64_t> relation_degree_;
  std::vector<std::vector<std::size_t>> shifts_below_;  // per slot, shifts mu <= nu
  std::uint64_t max_slot_weight_ = 0;
  std::map<std::pair<std::vector<std::uint32_t>, std::size_t>, Polynomial> derivatives_;
  std::map<std::uint64_t, Unitary> unitary_;
};

}  // namespace diffsig
