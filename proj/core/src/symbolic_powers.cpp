#include "diffsig/symbolic_powers.hpp"

#include <cstdint>

#include "diffsig/field.hpp"

namespace diffsig {

Ideal symbolic_power(const Ideal& j, unsigned n, const GroebnerOptions& options) {
  const Field& field = j.field();
  const std::size_t k = j.nvars();
  if (n == 0) return Ideal::unit(field, k);
  const std::size_t n2 = 2 * k;

  std::vector<Polynomial> gens;
  for (const auto& g : j.generators()) gens.push_back(taylor_shift(g));
  for (const auto& m : monomials_of_degree(k, n)) {
    Monomial y(n2);
    for (std::size_t i = 0; i < k; ++i) y.set(k + i, m[i]);
    gens.push_back(Polynomial::monomial(field, y, field.one()));
  }
  std::vector<bool> keep(n2, false);
  for (std::size_t i = 0; i < k; ++i) keep[i] = true;
  Ideal contracted = eliminate(Ideal(field, n2, std::move(gens)), keep, options);

  std::vector<std::size_t> back(n2, 0);
  for (std::size_t i = 0; i < k; ++i) back[i] = i;
  std::vector<Polynomial> out;
  for (const auto& g : contracted.generators()) out.push_back(g.rename(k, back));
  Ideal result(field, k, std::move(out), j.order());
  return Ideal(field, k, result.basis(options), j.order());
}

Ideal intersect_powers(const std::vector<Ideal>& primes, unsigned n, const GroebnerOptions& options) {
  if (primes.empty()) throw DomainError("no components to intersect");
  Ideal acc = primes[0].pow(n);
  for (std::size_t i = 1; i < primes.size(); ++i) acc = ideal_intersection(acc, primes[i].pow(n), options);
  return Ideal(acc.field(), acc.nvars(), acc.basis(options), acc.order());
}

std::vector<Ideal> squarefree_minimal_primes(const Ideal& j) {
  const std::size_t k = j.nvars();
  if (k > 24) throw DomainError("too many variables for vertex-cover enumeration");
  std::vector<std::uint32_t> supports;
  for (const auto& g : j.generators()) {
    if (g.is_zero()) continue;
    if (g.terms().size() != 1) throw DomainError("ideal is not monomial");
    const Monomial& m = g.terms().front().monomial;
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (m[i] > 1) throw DomainError("monomial ideal is not squarefree");
      if (m[i] == 1) s |= 1u << i;
    }
    if (s == 0) throw DomainError("unit ideal has no minimal primes");
    supports.push_back(s);
  }
  std::vector<std::uint32_t> covers;
  for (std::uint32_t c = 0; c < (1u << k); ++c) {
    bool hits = true;
    for (auto s : supports) hits = hits && (s & c);
    if (!hits) continue;
    bool minimal = true;
    for (auto o : covers) minimal = minimal && (o & c) != o;
    if (minimal) covers.push_back(c);
  }
  std::vector<Ideal> primes;
  for (auto c : covers) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < k; ++i)
      if (c & (1u << i)) vars.push_back(Polynomial::variable(j.field(), k, i));
    primes.emplace_back(j.field(), k, std::move(vars), j.order());
  }
  return primes;
}

}  // namespace diffsig
