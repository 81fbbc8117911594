#include "diffsig/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace diffsig {

int canonical_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

bool canonical_greater(const Term& a, const Term& b) {
  return canonical_compare(a.monomial, b.monomial) > 0;
}

}  // namespace

Polynomial Polynomial::constant(Field field, std::size_t nvars, const FieldElement& c) {
  Polynomial p(field, nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::monomial(Field field, const Monomial& m, const FieldElement& c) {
  Polynomial p(field, m.size());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(Field field, std::size_t nvars, std::size_t var) {
  return monomial(field, Monomial::unit(nvars, var), field.one());
}

Polynomial Polynomial::from_terms(Field field, std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(field, nvars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), canonical_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

FieldElement Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return field_.zero();
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return canonical_compare(t.monomial, x) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return field_.zero();
}

long Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(terms_.front().monomial.degree());
}

long Polynomial::weighted_degree(std::span<const std::uint32_t> weights) const {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, static_cast<long>(t.monomial.weighted_degree(weights)));
  return d;
}

long Polynomial::min_weighted_degree(std::span<const std::uint32_t> weights) const {
  if (terms_.empty()) return -1;
  long d = static_cast<long>(terms_.front().monomial.weighted_degree(weights));
  for (const auto& t : terms_) d = std::min<long>(d, static_cast<long>(t.monomial.weighted_degree(weights)));
  return d;
}

bool Polynomial::is_homogeneous(std::span<const std::uint32_t> weights) const {
  return terms_.empty() || weighted_degree(weights) == min_weighted_degree(weights);
}

Polynomial Polynomial::homogeneous_component(std::span<const std::uint32_t> weights, std::uint64_t d) const {
  Polynomial p(field_, nvars_);
  for (const auto& t : terms_)
    if (t.monomial.weighted_degree(weights) == d) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(field_, nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = canonical_compare(terms_[i].monomial, o.terms_[j].monomial);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial(field_, nvars_);
  std::unordered_map<Monomial, FieldElement, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto [it, inserted] = acc.try_emplace(a.monomial * b.monomial, a.coeff * b.coeff);
      if (!inserted) it->second += a.coeff * b.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.push_back({m, c});
  Polynomial r(field_, nvars_);
  r.terms_ = std::move(terms);
  std::sort(r.terms_.begin(), r.terms_.end(), canonical_greater);
  return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial r(field_, nvars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    FieldElement v = t.coeff * c;
    if (!v.is_zero()) r.terms_.push_back({t.monomial, std::move(v)});
  }
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial r(field_, nvars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(field_, nvars_, field_.one());
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::rename(std::size_t new_nvars, std::span<const std::size_t> target) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(new_nvars);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.monomial[i] != 0) m.set(target[i], m[target[i]] + t.monomial[i]);
    terms.push_back({std::move(m), t.coeff});
  }
  return from_terms(field_, new_nvars, std::move(terms));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].monomial != o.terms_[i].monomial || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string coeff = t.coeff.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.monomial[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t.monomial[i] > 1) mono += "^" + std::to_string(t.monomial[i]);
    }
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

Polynomial divided_power_derivative(const Polynomial& f, const Monomial& lambda) {
  if (lambda.size() != f.nvars()) throw DomainError("derivative multi-index has the wrong length");
  if (lambda.is_one()) return f;
  std::vector<Term> terms;
  const Field& field = f.field();
  for (const auto& t : f.terms()) {
    if (!lambda.divides(t.monomial)) continue;
    mpz_class c = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i)
      if (lambda[i] != 0) c *= binomial(t.monomial[i], lambda[i]);
    FieldElement v = t.coeff * field.from_mpz(c);
    if (v.is_zero()) continue;
    terms.push_back({t.monomial / lambda, std::move(v)});
  }
  return Polynomial::from_terms(field, f.nvars(), std::move(terms));
}

Polynomial taylor_shift(const Polynomial& f) {
  const std::size_t k = f.nvars();
  std::vector<Term> terms;
  const Field& field = f.field();
  for (const auto& t : f.terms()) {
    // Expand prod_i (x_i + y_i)^{nu_i} term by term.
    std::vector<Monomial> lambdas{Monomial(k)};
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Monomial> next;
      for (const auto& l : lambdas) {
        for (std::uint32_t a = 0; a <= t.monomial[i]; ++a) {
          Monomial m = l;
          m.set(i, a);
          next.push_back(std::move(m));
        }
      }
      lambdas = std::move(next);
    }
    for (const auto& l : lambdas) {
      mpz_class c = 1;
      Monomial m(2 * k);
      for (std::size_t i = 0; i < k; ++i) {
        c *= binomial(t.monomial[i], l[i]);
        m.set(i, t.monomial[i] - l[i]);
        m.set(k + i, l[i]);
      }
      FieldElement v = t.coeff * field.from_mpz(c);
      if (!v.is_zero()) terms.push_back({std::move(m), std::move(v)});
    }
  }
  return Polynomial::from_terms(field, 2 * k, std::move(terms));
}

}  // namespace diffsig
