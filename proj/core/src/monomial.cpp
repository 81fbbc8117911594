#include "diffsig/monomial.hpp"

#include <algorithm>
#include <limits>

#include "diffsig/field.hpp"

namespace diffsig {

Monomial Monomial::unit(std::size_t nvars, std::size_t var, std::uint32_t power) {
  Monomial m(nvars);
  m.set(var, power);
  return m;
}

void Monomial::recompute_degree() {
  degree_ = 0;
  for (auto e : exps_) degree_ += e;
}

std::uint64_t Monomial::weighted_degree(std::span<const std::uint32_t> weights) const {
  if (weights.empty()) return degree_;
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += std::uint64_t(exps_[i]) * weights[i];
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint64_t s = std::uint64_t(exps_[i]) + o.exps_[i];
    if (s > std::numeric_limits<std::uint32_t>::max()) throw DomainError("exponent overflow");
    r.exps_[i] = static_cast<std::uint32_t>(s);
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - o.exps_[i];
  r.degree_ = degree_ - o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], o.exps_[i]);
  r.recompute_degree();
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(exps_[i], o.exps_[i]);
  r.recompute_degree();
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

bool graded_lex_before(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

namespace {

void fill_degree(std::size_t nvars, std::size_t pos, std::uint32_t remaining, Monomial& cur,
                 std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur.set(pos, remaining);
    out.push_back(cur);
    cur.set(pos, 0);
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    cur.set(pos, e);
    fill_degree(nvars, pos + 1, remaining - e, cur, out);
  }
  cur.set(pos, 0);
}

void fill_weighted(std::span<const std::uint32_t> w, std::size_t pos, std::uint64_t remaining,
                   Monomial& cur, std::vector<Monomial>& out) {
  if (pos == w.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (std::uint64_t e = remaining / w[pos] + 1; e-- > 0;) {
    cur.set(pos, static_cast<std::uint32_t>(e));
    fill_weighted(w, pos + 1, remaining - e * w[pos], cur, out);
  }
  cur.set(pos, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  fill_degree(nvars, 0, d, cur, out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::uint32_t d) {
  std::vector<Monomial> out;
  for (std::uint32_t k = 0; k <= d; ++k) {
    auto layer = monomials_of_degree(nvars, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Monomial> monomials_of_weighted_degree(std::span<const std::uint32_t> weights,
                                                   std::uint64_t d) {
  std::vector<Monomial> out;
  Monomial cur(weights.size());
  fill_weighted(weights, 0, d, cur, out);
  std::sort(out.begin(), out.end(), graded_lex_before);
  return out;
}

MonomialOrder MonomialOrder::degrevlex(std::vector<std::uint32_t> weights) {
  MonomialOrder o;
  o.kind_ = Kind::DegRevLex;
  if (std::any_of(weights.begin(), weights.end(), [](auto w) { return w != 1; }))
    o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  return o;
}

MonomialOrder MonomialOrder::elimination(std::vector<bool> eliminated) {
  MonomialOrder o;
  o.kind_ = Kind::Elimination;
  o.eliminated_ = std::move(eliminated);
  return o;
}

int MonomialOrder::compare_degrevlex(const Monomial& a, const Monomial& b) const {
  std::uint64_t da = a.weighted_degree(weights_);
  std::uint64_t db = b.weighted_degree(weights_);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::compare_block(const Monomial& a, const Monomial& b, bool block) const {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (eliminated_[i] == block) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (eliminated_[i] != block) continue;
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::DegRevLex:
      return compare_degrevlex(a, b);
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::Elimination: {
      int c = compare_block(a, b, true);
      if (c != 0) return c;
      return compare_block(a, b, false);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::DegRevLex:
      return "degrevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Elimination:
      return "elimination";
  }
  return "?";
}

}  // namespace diffsig
