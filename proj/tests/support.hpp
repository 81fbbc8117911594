#pragma once


#include <random>
#include <string>
#include <vector>

#include "diffsig/groebner.hpp"
#include "diffsig/principal_parts.hpp"
#include "diffsig/quotient.hpp"
#include "diffsig/ring.hpp"

namespace diffsig::testing {

inline RingPresentation ring_q(std::vector<std::string> vars, const std::vector<std::string>& rels,
                               std::vector<std::uint32_t> weights = {}) {
  return RingPresentation::from_strings(Field::rationals(), std::move(vars), rels, std::move(weights));
}

inline RingPresentation ring_p(std::uint32_t p, std::vector<std::string> vars, const std::vector<std::string>& rels,
                               std::vector<std::uint32_t> weights = {}) {
  return RingPresentation::from_strings(Field::prime(p), std::move(vars), rels, std::move(weights));
}

inline RingPresentation quadric(std::size_t nvars) {
  std::vector<std::string> vars;
  std::string f;
  for (std::size_t i = 1; i <= nvars; ++i) {
    vars.push_back("x" + std::to_string(i));
    f += (i > 1 ? " + " : "") + vars.back() + "^2";
  }
  return ring_q(vars, {f});
}

inline Ideal ideal_of(const RingPresentation& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(ring.parse(g));
  return ring_ideal(ring, ps);
}

/// m^n + relations.
inline Ideal maximal_power(const RingPresentation& ring, unsigned n) {
  return ring_ideal(ring, Ideal::maximal(ring.field(), ring.nvars()).pow(n).generators());
}

inline const Term& leading_term(const Polynomial& p, const MonomialOrder& order) {
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  return *best;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Term& lf = leading_term(f, order);
  const Term& lg = leading_term(g, order);
  Monomial l = lf.monomial.lcm(lg.monomial);
  return f.times_monomial(l / lf.monomial).scaled(lf.coeff.inverse()) -
         g.times_monomial(l / lg.monomial).scaled(lg.coeff.inverse());
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
inline bool is_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
  return true;
}

/// Reduced: monic leading terms, and no term of any element is divisible by
/// another element's leading monomial.
inline bool is_reduced_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!leading_term(basis[i], order).coeff.is_one()) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& lj = leading_term(basis[j], order).monomial;
      for (const auto& t : basis[i].terms())
        if (lj.divides(t.monomial)) return false;
    }
  }
  return true;
}

inline Polynomial random_polynomial(const RingPresentation& ring, std::mt19937& rng, unsigned max_deg,
                                    unsigned terms, int coeff_range = 3) {
  std::uniform_int_distribution<int> c(-coeff_range, coeff_range);
  auto monos = monomials_up_to_degree(ring.nvars(), max_deg);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  Polynomial p = ring.zero();
  for (unsigned i = 0; i < terms; ++i)
    p += Polynomial::monomial(ring.field(), monos[pick(rng)], ring.field().from_int(c(rng)));
  return p;
}

/// Membership oracle from the module generators of the operators of order
/// n - 1: h lies in m^<n> iff every generator sends h into m.
inline bool membership_oracle(const Polynomial& h, unsigned n, const RingPresentation& ring) {
  if (n == 0) return true;
  for (const auto& op : operators_of_order(ring, n - 1))
    if (!apply_operator(op, h, ring).constant_term().is_zero()) return false;
  return true;
}

/// Free rank oracle: rank of the constant parts of the module generators.
std::size_t free_rank_oracle(const RingPresentation& ring, unsigned n);

}  // namespace diffsig::testing
