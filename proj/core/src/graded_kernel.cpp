#include "diffsig/graded_kernel.hpp"

#include <algorithm>

namespace diffsig {

GradedKernel::GradedKernel(const RingPresentation& ring, std::vector<Monomial> slots, std::vector<Monomial> shifts,
                           const GroebnerOptions& options)
    : quotient_(ring, options), slots_(std::move(slots)), shifts_(std::move(shifts)) {
  for (const auto& f : ring.relations())
    if (!f.constant_term().is_zero()) throw DomainError("relations must lie in the irrelevant ideal");
  const auto& w = ring.weights();
  for (const auto& s : slots_) {
    slot_weight_.push_back(s.weighted_degree(w));
    max_slot_weight_ = std::max(max_slot_weight_, slot_weight_.back());
  }
  for (const auto& m : shifts_) shift_weight_.push_back(m.weighted_degree(w));
  for (const auto& f : ring.relations()) relation_degree_.push_back(static_cast<std::uint64_t>(f.weighted_degree(w)));
  shifts_below_.resize(slots_.size());
  for (std::size_t r = 0; r < slots_.size(); ++r)
    for (std::size_t c = 0; c < shifts_.size(); ++c)
      if (shifts_[c].divides(slots_[r]) && shifts_[c] != slots_[r]) shifts_below_[r].push_back(c);
}

const Polynomial& GradedKernel::derivative(const Monomial& lambda, std::size_t relation) {
  std::vector<std::uint32_t> key(lambda.exponents().begin(), lambda.exponents().end());
  auto it = derivatives_.find({key, relation});
  if (it != derivatives_.end()) return it->second;
  Polynomial d = divided_power_derivative(ring().relations()[relation], lambda);
  return derivatives_.emplace(std::make_pair(std::move(key), relation), std::move(d)).first->second;
}

std::vector<std::vector<Polynomial>> GradedKernel::kernel(long t) {
  const std::size_t nrel = ring().relations().size();
  // Unknowns: coefficients of a_nu over the standard basis of R_{t + w.nu}.
  std::vector<long> unknown_offset(slots_.size(), -1);
  std::vector<std::uint64_t> unknown_degree(slots_.size(), 0);
  std::size_t nunknowns = 0;
  for (std::size_t r = 0; r < slots_.size(); ++r) {
    long g = t + static_cast<long>(slot_weight_[r]);
    if (g < 0) continue;
    unknown_degree[r] = static_cast<std::uint64_t>(g);
    std::size_t dim = quotient_.dimension(unknown_degree[r]);
    if (dim == 0) continue;
    unknown_offset[r] = static_cast<long>(nunknowns);
    nunknowns += dim;
  }
  if (nunknowns == 0) return {};
  // Equations: one per column (mu, i) and standard monomial of the target degree.
  std::vector<long> eq_offset(shifts_.size() * nrel, -1);
  std::size_t neqs = 0;
  for (std::size_t c = 0; c < shifts_.size(); ++c) {
    for (std::size_t i = 0; i < nrel; ++i) {
      long d = t + static_cast<long>(shift_weight_[c] + relation_degree_[i]);
      if (d < 0) continue;
      std::size_t dim = quotient_.dimension(static_cast<std::uint64_t>(d));
      if (dim == 0) continue;
      eq_offset[c * nrel + i] = static_cast<long>(neqs);
      neqs += dim;
    }
  }
  std::vector<SparseRow> eqs(neqs);
  for (std::size_t r = 0; r < slots_.size(); ++r) {
    if (unknown_offset[r] < 0) continue;
    const auto& basis = quotient_.basis(unknown_degree[r]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const std::uint32_t u = static_cast<std::uint32_t>(unknown_offset[r] + static_cast<long>(j));
      for (std::size_t c : shifts_below_[r]) {
        Monomial lambda = slots_[r] / shifts_[c];
        for (std::size_t i = 0; i < nrel; ++i) {
          long off = eq_offset[c * nrel + i];
          if (off < 0) continue;
          const Polynomial& e = derivative(lambda, i);
          SparseRow prod;
          for (const auto& term : e.terms()) prod = axpy(prod, term.coeff, quotient_.coordinates(basis[j] * term.monomial));
          for (auto& [idx, val] : prod) eqs[static_cast<std::size_t>(off) + idx].emplace_back(u, std::move(val));
        }
      }
    }
  }
  EchelonBasis echelon(ring().field(), nunknowns);
  for (auto& row : eqs)
    if (!row.empty()) echelon.insert(std::move(row));
  std::vector<std::vector<Polynomial>> out;
  for (const auto& v : echelon.nullspace()) {
    std::vector<Polynomial> tuple;
    tuple.reserve(slots_.size());
    std::size_t pos = 0;
    for (std::size_t r = 0; r < slots_.size(); ++r) {
      if (unknown_offset[r] < 0) {
        tuple.push_back(ring().zero());
        continue;
      }
      const std::uint32_t lo = static_cast<std::uint32_t>(unknown_offset[r]);
      const std::uint32_t hi = lo + static_cast<std::uint32_t>(quotient_.dimension(unknown_degree[r]));
      SparseRow part;
      while (pos < v.size() && v[pos].first < hi) {
        part.emplace_back(v[pos].first - lo, v[pos].second);
        ++pos;
      }
      tuple.push_back(quotient_.from_coordinates(unknown_degree[r], part));
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

const GradedKernel::Unitary& GradedKernel::unitary(std::uint64_t s) {
  auto it = unitary_.find(s);
  if (it != unitary_.end()) return it->second;
  Unitary u;
  for (std::size_t r = 0; r < slots_.size(); ++r)
    if (slot_weight_[r] == s) u.slot_ids.push_back(r);
  if (!u.slot_ids.empty()) {
    EchelonBasis echelon(ring().field(), u.slot_ids.size());
    for (auto& tuple : kernel(-static_cast<long>(s))) {
      SparseRow proj;
      std::vector<FieldElement> consts;
      for (std::uint32_t k = 0; k < u.slot_ids.size(); ++k) {
        FieldElement c = tuple[u.slot_ids[k]].constant_term();
        if (!c.is_zero()) proj.emplace_back(k, c);
        consts.push_back(std::move(c));
      }
      if (proj.empty() || !echelon.insert(std::move(proj))) continue;
      u.witnesses.push_back(std::move(tuple));
      u.constants.push_back(std::move(consts));
      if (echelon.rank() == u.slot_ids.size()) break;
    }
  }
  return unitary_.emplace(s, std::move(u)).first->second;
}

std::size_t GradedKernel::unitary_rank() {
  std::size_t total = 0;
  for (std::uint64_t s = 0; s <= max_slot_weight_; ++s) total += unitary(s).witnesses.size();
  return total;
}

std::optional<std::vector<Polynomial>> GradedKernel::separating_witness(const Polynomial& h) {
  for (std::uint64_t s = 0; s <= max_slot_weight_; ++s) {
    const Unitary& u = unitary(s);
    if (u.witnesses.empty()) continue;
    std::vector<FieldElement> coeffs;
    bool any = false;
    for (std::size_t r : u.slot_ids) {
      coeffs.push_back(h.coefficient(slots_[r]));
      any = any || !coeffs.back().is_zero();
    }
    if (!any) continue;
    for (std::size_t k = 0; k < u.witnesses.size(); ++k) {
      FieldElement acc = ring().field().zero();
      for (std::size_t j = 0; j < coeffs.size(); ++j) acc += u.constants[k][j] * coeffs[j];
      if (!acc.is_zero()) return u.witnesses[k];
    }
  }
  return std::nullopt;
}

std::vector<std::vector<FieldElement>> GradedKernel::pairing_matrix(std::uint64_t k) {
  const Unitary& u = unitary(k);
  const auto& basis = quotient_.basis(k);
  std::vector<std::vector<FieldElement>> rows;
  for (std::size_t wi = 0; wi < u.witnesses.size(); ++wi) {
    std::vector<FieldElement> row(basis.size(), ring().field().zero());
    for (std::size_t j = 0; j < u.slot_ids.size(); ++j) {
      const Monomial& slot = slots_[u.slot_ids[j]];
      auto pos = std::find(basis.begin(), basis.end(), slot);
      if (pos != basis.end()) row[static_cast<std::size_t>(pos - basis.begin())] = u.constants[wi][j];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Polynomial> GradedKernel::orthogonal_ideal() {
  std::vector<Polynomial> gens = ring().relations();
  const auto& w = ring().weights();
  const std::uint64_t wmax = *std::max_element(w.begin(), w.end());
  for (std::uint64_t k = 0; k <= max_slot_weight_; ++k) {
    const auto& basis = quotient_.basis(k);
    if (basis.empty()) continue;
    EchelonBasis echelon(ring().field(), basis.size());
    for (const auto& row : pairing_matrix(k)) {
      SparseRow sparse;
      for (std::uint32_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) sparse.emplace_back(j, row[j]);
      echelon.insert(std::move(sparse));
    }
    for (const auto& v : echelon.nullspace()) gens.push_back(quotient_.from_coordinates(k, v));
  }
  for (std::uint64_t k = max_slot_weight_ + 1; k <= max_slot_weight_ + wmax; ++k)
    for (const auto& m : monomials_of_weighted_degree(w, k))
      gens.push_back(Polynomial::monomial(ring().field(), m, ring().field().one()));
  return gens;
}

std::size_t GradedKernel::orthogonal_colength() {
  std::size_t total = 0;
  for (std::uint64_t k = 0; k <= max_slot_weight_; ++k) {
    std::vector<SparseRow> rows;
    for (const auto& row : pairing_matrix(k)) {
      SparseRow sparse;
      for (std::uint32_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) sparse.emplace_back(j, row[j]);
      rows.push_back(std::move(sparse));
    }
    total += rank_of(ring().field(), quotient_.dimension(k), rows);
  }
  return total;
}

}  // namespace diffsig
