#include "diffsig/principal_parts.hpp"

#include <algorithm>

#include "diffsig/quotient.hpp"

namespace diffsig {

namespace {

std::vector<Monomial> shifts_for_order(std::size_t nvars, unsigned n) {
  if (n == 0) return {};
  return monomials_up_to_degree(nvars, n - 1);
}

std::size_t slot_index(const std::vector<Monomial>& slots, const Monomial& lambda) {
  auto it = std::find(slots.begin(), slots.end(), lambda);
  if (it == slots.end()) throw DomainError("multi-index outside the operator's slots");
  return static_cast<std::size_t>(it - slots.begin());
}

OperatorTuple tuple_from_kernel(const RingPresentation& ring, unsigned n, const std::vector<Monomial>& slots,
                                std::vector<Polynomial> values) {
  Ideal rel(ring.field(), ring.nvars(), ring.relations());
  for (auto& v : values) v = rel.normal_form(v);
  return OperatorTuple{n, slots, std::move(values)};
}

}  // namespace

Polynomial JacobiTaylorMatrix::entry(std::size_t row, std::size_t col, const RingPresentation& ring) const {
  auto it = entries[row].find(col);
  return it == entries[row].end() ? ring.zero() : it->second;
}

PolyMatrix JacobiTaylorMatrix::kernel_matrix(const RingPresentation& ring) const {
  PolyMatrix m;
  m.rows = columns.size();
  m.cols = rows.size();
  m.entries.assign(m.rows * m.cols, ring.zero());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, p] : entries[r]) m.entries[c * m.cols + r] = p;
  return m;
}

JacobiTaylorMatrix extend_jacobi_taylor(const RingPresentation& ring, const JacobiTaylorMatrix& prev) {
  JacobiTaylorMatrix next = prev;
  const unsigned n = prev.order + 1;
  next.order = n;
  const std::size_t k = ring.nvars();
  // New columns: |mu| = n - 1. Their only old-row partner would be nu = mu,
  // whose entry f_i vanishes in R.
  for (const auto& mu : monomials_of_degree(k, n - 1))
    for (std::size_t i = 0; i < ring.relations().size(); ++i) next.columns.push_back({mu, i});
  for (const auto& nu : monomials_of_degree(k, n)) {
    next.rows.push_back(nu);
    std::map<std::size_t, Polynomial> row;
    for (std::size_t c = 0; c < next.columns.size(); ++c) {
      const auto& col = next.columns[c];
      if (!col.mu.divides(nu) || col.mu == nu) continue;
      Polynomial e = divided_power_derivative(ring.relations()[col.relation], nu / col.mu);
      if (!e.is_zero()) row.emplace(c, std::move(e));
    }
    next.entries.push_back(std::move(row));
  }
  return next;
}

JacobiTaylorMatrix jacobi_taylor(const RingPresentation& ring, unsigned n) {
  JacobiTaylorMatrix j;
  j.order = 0;
  j.rows.push_back(Monomial(ring.nvars()));
  j.entries.emplace_back();
  for (unsigned o = 0; o < n; ++o) j = extend_jacobi_taylor(ring, j);
  return j;
}

const Polynomial& OperatorTuple::at(const Monomial& lambda) const { return entries[slot_index(slots, lambda)]; }

bool OperatorTuple::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<long> OperatorTuple::degree(const std::vector<std::uint32_t>& weights) const {
  std::optional<long> d;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (entries[i].is_zero()) continue;
    long v = entries[i].weighted_degree(weights) - static_cast<long>(slots[i].weighted_degree(weights));
    if (!d || v < *d) d = v;
  }
  return d;
}

std::string OperatorTuple::to_string(const RingPresentation& ring) const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += ring.format(entries[i]);
  }
  return out + ")";
}

OperatorTuple make_operator(const RingPresentation& ring, unsigned n,
                            const std::vector<std::pair<Monomial, Polynomial>>& values) {
  std::vector<Monomial> slots = monomials_up_to_degree(ring.nvars(), n);
  std::vector<Polynomial> entries(slots.size(), ring.zero());
  for (const auto& [lambda, a] : values) entries[slot_index(slots, lambda)] += a;
  return tuple_from_kernel(ring, n, slots, std::move(entries));
}

std::vector<OperatorTuple> operators_of_order(const RingPresentation& ring, unsigned n,
                                              const GroebnerOptions& options) {
  JacobiTaylorMatrix j = jacobi_taylor(ring, n);
  KernelBasis kb = module_kernel(j.kernel_matrix(ring), ring.relations(), ring.field(), ring.nvars(), options);
  std::vector<OperatorTuple> out;
  for (auto& g : kb.generators) {
    OperatorTuple op = tuple_from_kernel(ring, n, j.rows, std::move(g));
    if (!in_kernel(op, ring)) throw std::logic_error("kernel generator fails the Jacobi-Taylor check");
    out.push_back(std::move(op));
  }
  return out;
}

bool in_kernel(const OperatorTuple& op, const RingPresentation& ring) {
  JacobiTaylorMatrix j = jacobi_taylor(ring, op.order);
  Ideal rel(ring.field(), ring.nvars(), ring.relations());
  return kernel_contains(j.kernel_matrix(ring), op.entries, rel);
}

Polynomial apply_operator(const OperatorTuple& op, const Polynomial& h, const RingPresentation& ring) {
  Polynomial acc = ring.zero();
  for (std::size_t i = 0; i < op.slots.size(); ++i) {
    if (op.entries[i].is_zero()) continue;
    Polynomial d = divided_power_derivative(h, op.slots[i]);
    if (!d.is_zero()) acc += op.entries[i] * d;
  }
  return Ideal(ring.field(), ring.nvars(), ring.relations()).normal_form(acc);
}

std::vector<std::pair<Monomial, Polynomial>> operator_symbol(const OperatorTuple& op) {
  std::vector<std::pair<Monomial, Polynomial>> out;
  for (std::size_t i = 0; i < op.slots.size(); ++i)
    if (op.slots[i].degree() == op.order) out.emplace_back(op.slots[i], op.entries[i]);
  return out;
}

std::optional<Monomial> unitary_witness(const OperatorTuple& op, const RingPresentation& ring) {
  ring.require_graded("the unitary test");
  for (std::size_t i = 0; i < op.slots.size(); ++i)
    if (!op.entries[i].constant_term().is_zero()) return op.slots[i];
  return std::nullopt;
}

GradedKernel jacobi_taylor_kernel(const RingPresentation& ring, unsigned n, const GroebnerOptions& options) {
  return GradedKernel(ring, monomials_up_to_degree(ring.nvars(), n), shifts_for_order(ring.nvars(), n), options);
}

FreeRankReport free_rank(const RingPresentation& ring, unsigned n, const GroebnerOptions& options) {
  ring.require_graded("free_rank");
  GradedKernel gk = jacobi_taylor_kernel(ring, n, options);
  FreeRankReport report;
  report.order = n;
  for (std::uint64_t s = 0; s <= gk.max_slot_weight(); ++s)
    for (const auto& w : gk.unitary(s).witnesses) report.witnesses.push_back(tuple_from_kernel(ring, n, gk.slots(), w));
  report.free_rank = report.witnesses.size();
  const std::size_t d = krull_dimension(ring, options);
  report.ambient_rank = binomial(static_cast<long>(d + n), static_cast<long>(d));
  return report;
}

MembershipResult diff_power_membership(const Polynomial& h, unsigned n, const RingPresentation& ring,
                                       const GroebnerOptions& options) {
  ring.require_graded("diff_power_membership");
  if (n == 0) return {true, std::nullopt};
  GradedKernel gk = jacobi_taylor_kernel(ring, n - 1, options);
  auto w = gk.separating_witness(h);
  if (!w) return {true, std::nullopt};
  return {false, tuple_from_kernel(ring, n - 1, gk.slots(), std::move(*w))};
}

Ideal ring_ideal(const RingPresentation& ring, std::vector<Polynomial> gens) {
  for (const auto& f : ring.relations()) gens.push_back(f);
  Ideal raw(ring.field(), ring.nvars(), std::move(gens));
  return Ideal(ring.field(), ring.nvars(), raw.basis());
}

Ideal maximal_ideal(const RingPresentation& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring.nvars(); ++i) gens.push_back(ring.var(i));
  return ring_ideal(ring, std::move(gens));
}

Ideal diff_power_of_maximal(const RingPresentation& ring, unsigned n, const GroebnerOptions& options) {
  ring.require_graded("differential powers");
  if (n == 0) return Ideal::unit(ring.field(), ring.nvars());
  GradedKernel gk = jacobi_taylor_kernel(ring, n - 1, options);
  return ring_ideal(ring, gk.orthogonal_ideal());
}

Ideal differential_colon_ideal(const Ideal& j, unsigned bracket, std::optional<unsigned> power,
                               const RingPresentation& ring, const GroebnerOptions& options) {
  const std::size_t k = ring.nvars();
  const std::size_t n2 = 2 * k;
  const Field& field = ring.field();
  std::vector<std::size_t> left_map(k);
  for (std::size_t i = 0; i < k; ++i) left_map[i] = i;
  auto left = [&](const Polynomial& p) { return p.rename(n2, left_map); };

  std::vector<Polynomial> brackets;
  for (std::size_t i = 0; i < k; ++i) brackets.push_back(Polynomial::monomial(field, Monomial::unit(n2, k + i, bracket), field.one()));

  std::vector<Polynomial> d_i = brackets;
  for (const auto& f : ring.relations()) d_i.push_back(taylor_shift(f));
  std::vector<Polynomial> d_j = brackets;
  for (const auto& g : j.generators()) d_j.push_back(taylor_shift(g));
  for (const auto& f : ring.relations()) d_j.push_back(taylor_shift(f));

  std::vector<Polynomial> base;
  for (const auto& f : ring.relations()) base.push_back(left(f));
  if (power) {
    for (const auto& m : monomials_of_degree(k, *power)) {
      Monomial y(n2);
      for (std::size_t i = 0; i < k; ++i) y.set(k + i, m[i]);
      base.push_back(Polynomial::monomial(field, y, field.one()));
    }
  }

  Ideal inner = ideal_quotient(Ideal(field, n2, d_i), Ideal(field, n2, base), options);
  Ideal outer = ideal_quotient(Ideal(field, n2, d_j), inner, options);
  std::vector<bool> keep(n2, false);
  for (std::size_t i = 0; i < k; ++i) keep[i] = true;
  Ideal contracted = eliminate(outer, keep, options);

  std::vector<std::size_t> back(n2, 0);
  for (std::size_t i = 0; i < k; ++i) back[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : contracted.generators()) gens.push_back(g.rename(k, back));
  return ring_ideal(ring, std::move(gens));
}

Ideal diff_power_ideal(const Ideal& j, unsigned n, const RingPresentation& ring, const GroebnerOptions& options) {
  ring.require_graded("diff_power_ideal");
  if (n == 0) return Ideal::unit(ring.field(), ring.nvars());
  return differential_colon_ideal(j, n, n, ring, options);
}

SignatureSequence signature_sequence(const RingPresentation& ring, unsigned max_order,
                                     const GroebnerOptions& options) {
  ring.require_graded("signature_sequence");
  SignatureSequence seq;
  seq.dimension = krull_dimension(ring, options);
  const long d = static_cast<long>(seq.dimension);
  mpz_class dfact = 1;
  for (long i = 2; i <= d; ++i) dfact *= i;
  for (unsigned o = 0; o <= max_order; ++o) {
    GradedKernel gk = jacobi_taylor_kernel(ring, o, options);
    SignatureEntry e;
    e.n = o + 1;
    e.length = gk.unitary_rank();
    e.ratio_rank = mpq_class(mpz_class(static_cast<unsigned long>(e.length)), binomial(static_cast<long>(o) + d, d));
    e.ratio_rank.canonicalize();
    mpz_class npow;
    mpz_ui_pow_ui(npow.get_mpz_t(), e.n, static_cast<unsigned long>(d));
    e.ratio_volume = mpq_class(mpz_class(static_cast<unsigned long>(e.length)) * dfact, npow);
    e.ratio_volume.canonicalize();
    seq.entries.push_back(std::move(e));
  }
  return seq;
}

CoreReport diff_core_truncated(const Ideal& j, unsigned max_order, const RingPresentation& ring,
                               const GroebnerOptions& options) {
  ring.require_graded("diff_core_truncated");
  if (max_order == 0) throw DomainError("the window must contain at least one order");
  Ideal jr = ring_ideal(ring, j.generators());
  const bool maximal = jr == maximal_ideal(ring);
  auto power = [&](unsigned n) {
    return maximal ? diff_power_of_maximal(ring, n, options) : diff_power_ideal(jr, n, ring, options);
  };
  Ideal core = power(1);
  Ideal previous = core;
  for (unsigned n = 2; n <= max_order; ++n) {
    previous = core;
    core = ring_ideal(ring, ideal_intersection(core, power(n), options).generators());
  }
  const bool equal = max_order >= 2 && core == previous;
  return CoreReport{core, max_order, equal};
}

std::optional<SimplicityWitness> d_simplicity_witness(const Polynomial& h, unsigned max_order,
                                                      const RingPresentation& ring,
                                                      const GroebnerOptions& options) {
  ring.require_graded("d_simplicity_witness");
  if (Ideal(ring.field(), ring.nvars(), ring.relations()).contains(h))
    throw DomainError("h must be nonzero in R");
  for (unsigned o = 0; o <= max_order; ++o) {
    GradedKernel gk = jacobi_taylor_kernel(ring, o, options);
    auto w = gk.separating_witness(h);
    if (!w) continue;
    OperatorTuple op = tuple_from_kernel(ring, o, gk.slots(), std::move(*w));
    Polynomial image = apply_operator(op, h, ring);
    return SimplicityWitness{o, std::move(op), std::move(image)};
  }
  return std::nullopt;
}

DegreeBoundReport graded_degree_bound(const RingPresentation& ring, unsigned max_order,
                                      const GroebnerOptions& options) {
  ring.require_graded("graded_degree_bound");
  if (max_order == 0) throw DomainError("the window must contain at least one order");
  DegreeBoundReport report;
  report.multiplicity = multiplicity(ring, options);
  report.dimension = krull_dimension(ring, options);
  report.alpha = 0;
  for (unsigned n = 1; n <= max_order; ++n) {
    GradedKernel gk = jacobi_taylor_kernel(ring, n, options);
    long t = -static_cast<long>(gk.max_slot_weight());
    while (t < 0 && gk.kernel(t).empty()) ++t;
    report.min_degrees.push_back(t);
    mpq_class a(-t, static_cast<long>(n));
    a.canonicalize();
    if (a > report.alpha) report.alpha = a;
  }
  mpq_class pow = 1;
  for (std::size_t i = 0; i < report.dimension; ++i) pow *= report.alpha;
  report.bound = report.multiplicity * pow;
  return report;
}

}  // namespace diffsig
