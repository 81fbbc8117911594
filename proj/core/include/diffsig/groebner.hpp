#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "diffsig/monomial.hpp"
#include "diffsig/polynomial.hpp"

namespace diffsig {

struct GroebnerOptions {
  /// Maximum number of S-pairs reduced before BudgetExhausted is thrown.
  std::size_t max_pairs = 500000;
};

/// Element of a free module S^r, one polynomial per component.
using ModuleElement = std::vector<Polynomial>;

/// Gröbner basis of a submodule of S^rank under position-over-term order:
/// components with lower index are greater, ties broken by `order`.
/// Returns the reduced basis sorted by ascending leading term. Rank 1
/// gives ordinary ideal bases.
std::vector<ModuleElement> module_groebner_basis(const std::vector<ModuleElement>& gens, std::size_t rank,
                                                 const MonomialOrder& order, const GroebnerOptions& options = {});

/// Remainder of v modulo a module Gröbner basis computed for `order`.
ModuleElement module_reduce(const ModuleElement& v, const std::vector<ModuleElement>& basis,
                            const MonomialOrder& order);

/// Whether v lies in the submodule of R^rank generated by `gens`, where
/// R = S/(relations).
bool module_contains(const std::vector<ModuleElement>& gens, const ModuleElement& v,
                     const std::vector<Polynomial>& relations, const GroebnerOptions& options = {});

/// Reduced Gröbner basis of the ideal generated by `gens`.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                       const GroebnerOptions& options = {});

/// Remainder of f modulo a Gröbner basis (must be a basis for `order`).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// Ideal of a polynomial ring K[x_1..x_k]. Holds its generators and a
/// lazily computed reduced Gröbner basis for its order; copies share the
/// cache, which is written once.
class Ideal {
 public:
  Ideal(Field field, std::size_t nvars, std::vector<Polynomial> gens = {},
        MonomialOrder order = MonomialOrder::degrevlex());

  static Ideal unit(Field field, std::size_t nvars);
  /// (x_1, ..., x_k).
  static Ideal maximal(Field field, std::size_t nvars);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }

  /// Reduced Gröbner basis for order(); computed on first use.
  const std::vector<Polynomial>& basis(const GroebnerOptions& options = {}) const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_zero() const;
  bool is_unit() const;

  Ideal operator+(const Ideal& o) const;
  Ideal operator*(const Ideal& o) const;
  Ideal pow(unsigned k) const;

  /// Generators with redundant members removed (reduced basis, cheap to print).
  std::vector<Polynomial> minimal_generators() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  Field field_;
  std::size_t nvars_;
  std::vector<Polynomial> gens_;
  MonomialOrder order_;
  std::shared_ptr<Cache> cache_;
};

bool operator==(const Ideal& a, const Ideal& b);

/// The ideal returned with generators equal to the reduced basis for `order`.
Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options = {});

Polynomial normal_form(const Polynomial& f, const Ideal& ideal);

/// I ∩ K[keep], computed with a block order whose eliminated block is the
/// complement of `keep`. The result lives in the same ambient ring.
Ideal eliminate(const Ideal& ideal, const std::vector<bool>& keep, const GroebnerOptions& options = {});

Ideal ideal_intersection(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});

/// (A : b) from the syzygies of [b | gens(A)], keeping the coefficient of b.
Ideal ideal_quotient(const Ideal& a, const Polynomial& b, const GroebnerOptions& options = {});
/// (A : B) = ∩_b (A : b) over the generators of B.
Ideal ideal_quotient(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});

/// A rows x cols matrix of polynomials, row-major.
struct PolyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Polynomial> entries;

  const Polynomial& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Generators of {v in R^cols : M v = 0 in R^rows}, R = S/(relations).
struct KernelBasis {
  std::vector<ModuleElement> generators;
};

/// Lifts M to S, appends the relation columns f_i e_j, and computes
/// syzygies with position-over-term Buchberger. Generators are reduced
/// modulo the relations, deduplicated, stripped of zeros and sorted by
/// (degree, tuple).
KernelBasis module_kernel(const PolyMatrix& m, const std::vector<Polynomial>& relations, Field field,
                          std::size_t nvars, const GroebnerOptions& options = {});

/// M v reduced modulo the relation basis; empty vector means every entry is 0.
bool kernel_contains(const PolyMatrix& m, const ModuleElement& v, const Ideal& relations);

}  // namespace diffsig
