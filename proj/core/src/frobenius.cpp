#include "diffsig/frobenius.hpp"

#include <algorithm>
#include <functional>

#include "diffsig/quotient.hpp"

namespace diffsig {

namespace {

void check_level(const RingPresentation& ring, const FrobeniusLevel& level, const FrobeniusOptions& options) {
  if (ring.field().is_rational() || ring.field().characteristic() != level.p)
    throw DomainError("Frobenius levels need the prime field of characteristic " + std::to_string(level.p));
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    box *= level.q;
    if (box > options.max_box)
      throw BudgetExhausted("exponent box q^k exceeds the budget of " + std::to_string(options.max_box));
  }
}

std::vector<Monomial> box(std::size_t nvars, std::uint64_t q) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  std::function<void(std::size_t)> walk = [&](std::size_t var) {
    if (var == nvars) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e < q; ++e) {
      cur.set(var, e);
      walk(var + 1);
    }
    cur.set(var, 0);
  };
  walk(0);
  std::sort(out.begin(), out.end(), graded_lex_before);
  return out;
}

}  // namespace

FrobeniusLevel FrobeniusLevel::make(std::uint32_t p, unsigned e) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (e == 0) throw DomainError("the Frobenius exponent e must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > (std::uint64_t(1) << 31) / p) throw DomainError("p^e is too large");
    q *= p;
  }
  return FrobeniusLevel{p, e, q};
}

JacobiTaylorMatrix frobenius_jacobi_taylor(const RingPresentation& ring, const FrobeniusLevel& level,
                                           const FrobeniusOptions& options) {
  check_level(ring, level, options);
  JacobiTaylorMatrix m;
  m.order = static_cast<unsigned>(level.q - 1);
  m.rows = box(ring.nvars(), level.q);
  for (const auto& mu : m.rows)
    for (std::size_t i = 0; i < ring.relations().size(); ++i) m.columns.push_back({mu, i});
  for (const auto& nu : m.rows) {
    std::map<std::size_t, Polynomial> row;
    for (std::size_t c = 0; c < m.columns.size(); ++c) {
      const auto& col = m.columns[c];
      if (!col.mu.divides(nu) || col.mu == nu) continue;
      Polynomial e = divided_power_derivative(ring.relations()[col.relation], nu / col.mu);
      if (!e.is_zero()) row.emplace(c, std::move(e));
    }
    m.entries.push_back(std::move(row));
  }
  return m;
}

GradedKernel frobenius_kernel(const RingPresentation& ring, const FrobeniusLevel& level,
                              const FrobeniusOptions& options) {
  check_level(ring, level, options);
  std::vector<Monomial> slots = box(ring.nvars(), level.q);
  std::vector<Monomial> shifts = slots;
  return GradedKernel(ring, std::move(slots), std::move(shifts), options.groebner);
}

Ideal fdiff_power_ideal(const Ideal& j, const FrobeniusLevel& level, const RingPresentation& ring,
                        const FrobeniusOptions& options) {
  check_level(ring, level, options);
  ring.require_graded("fdiff_power_ideal");
  return differential_colon_ideal(j, static_cast<unsigned>(level.q), std::nullopt, ring, options.groebner);
}

Ideal fdiff_power_of_maximal(const RingPresentation& ring, const FrobeniusLevel& level,
                             const FrobeniusOptions& options) {
  ring.require_graded("fdiff_power_of_maximal");
  GradedKernel gk = frobenius_kernel(ring, level, options);
  return ring_ideal(ring, gk.orthogonal_ideal());
}

Ideal frobenius_power_of_maximal(const RingPresentation& ring, std::uint64_t q) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    gens.push_back(Polynomial::monomial(ring.field(), Monomial::unit(ring.nvars(), i, static_cast<std::uint32_t>(q)),
                                        ring.field().one()));
  return ring_ideal(ring, std::move(gens));
}

Ideal fedder_hypersurface_oracle(const RingPresentation& ring, const FrobeniusLevel& level,
                                 const GroebnerOptions& options) {
  if (ring.relations().size() != 1) throw DomainError("the Fedder oracle needs exactly one relation");
  if (ring.field().is_rational() || ring.field().characteristic() != level.p)
    throw DomainError("the Fedder oracle needs the prime field of characteristic " + std::to_string(level.p));
  const Polynomial& f = ring.relations().front();
  std::vector<Polynomial> brackets;
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    brackets.push_back(Polynomial::monomial(
        ring.field(), Monomial::unit(ring.nvars(), i, static_cast<std::uint32_t>(level.q)), ring.field().one()));
  Ideal mq(ring.field(), ring.nvars(), std::move(brackets));
  Ideal colon = ideal_quotient(mq, f.pow(static_cast<unsigned>(level.q - 1)), options);
  return ring_ideal(ring, colon.generators());
}

Ideal fedder_splitting_ideal(const RingPresentation& ring, const FrobeniusLevel& level,
                             const GroebnerOptions& options) {
  if (ring.field().is_rational() || ring.field().characteristic() != level.p)
    throw DomainError("splitting ideals need the prime field of characteristic " + std::to_string(level.p));
  Ideal rel(ring.field(), ring.nvars(), ring.relations());
  std::vector<Polynomial> powered;
  for (const auto& f : ring.relations()) powered.push_back(f.pow(static_cast<unsigned>(level.q)));
  Ideal test = ideal_quotient(Ideal(ring.field(), ring.nvars(), std::move(powered)), rel, options);
  std::vector<Polynomial> brackets;
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    brackets.push_back(Polynomial::monomial(
        ring.field(), Monomial::unit(ring.nvars(), i, static_cast<std::uint32_t>(level.q)), ring.field().one()));
  Ideal colon = ideal_quotient(Ideal(ring.field(), ring.nvars(), std::move(brackets)), test, options);
  return ring_ideal(ring, colon.generators());
}

bool is_f_pure(const RingPresentation& ring, const GroebnerOptions& options) {
  if (ring.field().is_rational()) throw DomainError("F-purity needs a prime field");
  return !fedder_splitting_ideal(ring, FrobeniusLevel::make(ring.field().characteristic(), 1), options).is_unit();
}

FSignatureSequence f_signature_sequence(const RingPresentation& ring, unsigned max_level,
                                        const FrobeniusOptions& options) {
  if (ring.field().is_rational()) throw DomainError("F-signature needs a prime field");
  ring.require_graded("f_signature_sequence");
  if (max_level == 0) throw DomainError("max level must be at least 1");
  FSignatureSequence seq;
  seq.p = ring.field().characteristic();
  seq.dimension = krull_dimension(ring, options.groebner);
  const bool pure = is_f_pure(ring, options.groebner);
  if (!pure) seq.warning = "1 lies in I_1: the ring is not F-pure, every ratio is 0";
  for (unsigned e = 1; e <= max_level; ++e) {
    FrobeniusLevel level = FrobeniusLevel::make(seq.p, e);
    Ideal fdiff = fdiff_power_of_maximal(ring, level, options);
    FSignatureEntry entry;
    entry.e = e;
    entry.fdiff_length = quotient_length(fdiff, options.groebner);
    entry.unit_ideal = !pure;
    entry.length = pure ? entry.fdiff_length : 0;
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), level.q, static_cast<unsigned long>(seq.dimension));
    entry.ratio = mpq_class(mpz_class(static_cast<unsigned long>(entry.length)), denom);
    entry.ratio.canonicalize();
    seq.entries.push_back(std::move(entry));
  }
  return seq;
}

}  // namespace diffsig
