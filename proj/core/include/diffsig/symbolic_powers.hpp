#pragma once

#include <vector>

#include "diffsig/groebner.hpp"

namespace diffsig {

/// J^<n> = (J(x + y) + (y_1..y_k)^n) ∩ K[x] for an ideal of a polynomial ring.
/// This is the n-th symbolic power when J is radical over a perfect field;
/// radicality is the caller's responsibility.
Ideal symbolic_power(const Ideal& j, unsigned n, const GroebnerOptions& options = {});

/// P_1^n ∩ ... ∩ P_s^n.
Ideal intersect_powers(const std::vector<Ideal>& primes, unsigned n, const GroebnerOptions& options = {});

/// Minimal primes of a squarefree monomial ideal, one per minimal vertex cover
/// of its generators. Throws DomainError for other ideals.
std::vector<Ideal> squarefree_minimal_primes(const Ideal& j);

}  // namespace diffsig
