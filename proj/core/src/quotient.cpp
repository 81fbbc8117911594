#include "diffsig/quotient.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace diffsig {

namespace {

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::vector<Monomial> out;
  for (const auto& g : basis) {
    const Monomial* best = nullptr;
    for (const auto& t : g.terms())
      if (best == nullptr || order.compare(t.monomial, *best) > 0) best = &t.monomial;
    if (best != nullptr) out.push_back(*best);
  }
  return out;
}

bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

}  // namespace

GradedQuotient::GradedQuotient(const RingPresentation& ring, const GroebnerOptions& options)
    : ring_(ring), relations_(ring.field(), ring.nvars(), ring.relations()) {
  ring.require_graded("graded linear algebra");
  relations_.basis(options);
}

const std::vector<Monomial>& GradedQuotient::basis(std::uint64_t k) {
  auto it = bases_.find(k);
  if (it != bases_.end()) return it->second;
  std::vector<Monomial> lead = leading_monomials(relations_.basis(), relations_.order());
  std::vector<Monomial> all = monomials_of_weighted_degree(ring_.weights(), k);
  std::vector<Monomial> kept;
  for (auto& m : all)
    if (!in_monomial_ideal(m, lead)) kept.push_back(std::move(m));
  auto& idx = index_[k];
  for (std::uint32_t i = 0; i < kept.size(); ++i) idx.emplace(kept[i], i);
  return bases_.emplace(k, std::move(kept)).first->second;
}

const SparseRow& GradedQuotient::coordinates(const Monomial& m) {
  auto it = coords_.find(m);
  if (it != coords_.end()) return it->second;
  const std::uint64_t k = m.weighted_degree(ring_.weights());
  basis(k);
  const auto& idx = index_[k];
  SparseRow row;
  auto hit = idx.find(m);
  if (hit != idx.end()) {
    row.emplace_back(hit->second, ring_.field().one());
  } else {
    Polynomial nf = relations_.normal_form(Polynomial::monomial(ring_.field(), m, ring_.field().one()));
    for (const auto& t : nf.terms()) row.emplace_back(idx.at(t.monomial), t.coeff);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return coords_.emplace(m, std::move(row)).first->second;
}

SparseRow GradedQuotient::coordinates(const Polynomial& f, std::uint64_t k) {
  SparseRow acc;
  for (const auto& t : f.terms()) {
    if (t.monomial.weighted_degree(ring_.weights()) != k) throw DomainError("polynomial is not homogeneous of the requested degree");
    acc = axpy(acc, t.coeff, coordinates(t.monomial));
  }
  return acc;
}

Polynomial GradedQuotient::from_coordinates(std::uint64_t k, const SparseRow& v) {
  const auto& b = basis(k);
  std::vector<Term> terms;
  for (const auto& [i, c] : v) terms.push_back({b[i], c});
  return Polynomial::from_terms(ring_.field(), ring_.nvars(), std::move(terms));
}

std::vector<Monomial> standard_monomials(const std::vector<Polynomial>& basis, const MonomialOrder& order,
                                         std::size_t nvars) {
  std::vector<Monomial> lead = leading_monomials(basis, order);
  // Finite colength needs a pure power of every variable among the leads.
  std::vector<std::uint32_t> bound(nvars, 0);
  for (const auto& m : lead) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i] != 0) {
        ++support;
        var = i;
      }
    if (support == 0) return {};
    if (support == 1 && (bound[var] == 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  for (std::size_t i = 0; i < nvars; ++i)
    if (bound[i] == 0) throw DomainError("quotient is not finite-dimensional");
  std::vector<Monomial> out;
  Monomial cur(nvars);
  // Depth-first walk of the box, pruning at leading monomials (order ideal).
  std::function<void(std::size_t)> walk = [&](std::size_t var) {
    if (var == nvars) {
      if (!in_monomial_ideal(cur, lead)) out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e < bound[var]; ++e) {
      cur.set(var, e);
      if (in_monomial_ideal(cur, lead)) break;
      walk(var + 1);
    }
    cur.set(var, 0);
  };
  walk(0);
  std::sort(out.begin(), out.end(), graded_lex_before);
  return out;
}

std::size_t quotient_length(const Ideal& ideal, const GroebnerOptions& options) {
  return standard_monomials(ideal.basis(options), ideal.order(), ideal.nvars()).size();
}

std::size_t krull_dimension(const Ideal& ideal, const GroebnerOptions& options) {
  const std::size_t k = ideal.nvars();
  if (ideal.is_unit()) throw DomainError("the unit ideal has no dimension");
  std::vector<Monomial> lead = leading_monomials(ideal.basis(options), ideal.order());
  std::vector<std::uint64_t> supports;
  for (const auto& m : lead) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (m[i] != 0) s |= std::uint64_t(1) << i;
    supports.push_back(s);
  }
  if (k > 30) throw DomainError("too many variables for the dimension search");
  std::size_t best = 0;
  for (std::uint64_t u = 0; u < (std::uint64_t(1) << k); ++u) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcountll(u));
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(), [&](std::uint64_t s) { return (s & ~u) == 0; });
    if (independent) best = size;
  }
  return best;
}

std::size_t krull_dimension(const RingPresentation& ring, const GroebnerOptions& options) {
  return krull_dimension(Ideal(ring.field(), ring.nvars(), ring.relations()), options);
}

std::vector<mpz_class> hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars) {
  // N(M + (m)) = N(M) - t^deg(m) N(M : m), recursing on the generator list.
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && (gens[j] != gens[i] || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  if (minimal.empty()) return {1};
  if (std::any_of(minimal.begin(), minimal.end(), [](const Monomial& m) { return m.is_one(); })) return {};
  Monomial last = minimal.back();
  minimal.pop_back();
  std::vector<mpz_class> a = hilbert_numerator(minimal, nvars);
  std::vector<Monomial> colon;
  for (const auto& m : minimal) colon.push_back(m.lcm(last) / last);
  std::vector<mpz_class> b = hilbert_numerator(colon, nvars);
  const std::size_t shift = last.degree();
  std::vector<mpz_class> out(std::max(a.size(), b.size() + shift), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + shift] -= b[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

mpz_class multiplicity(const RingPresentation& ring, const GroebnerOptions& options) {
  ring.require_graded("multiplicity");
  if (!ring.standard_weights()) throw DomainError("multiplicity requires standard grading weights");
  Ideal rel(ring.field(), ring.nvars(), ring.relations());
  if (rel.is_unit()) throw DomainError("the zero ring has no multiplicity");
  std::vector<mpz_class> n = hilbert_numerator(leading_monomials(rel.basis(options), rel.order()), ring.nvars());
  // Divide by (1 - t) while t = 1 is a root; the value at 1 is then e(R).
  while (true) {
    mpz_class at_one = std::accumulate(n.begin(), n.end(), mpz_class(0));
    if (at_one != 0) return at_one;
    std::vector<mpz_class> q(n.size() - 1);
    mpz_class carry = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      carry += n[i];
      q[i] = carry;
    }
    n = std::move(q);
  }
}

}  // namespace diffsig
