#include "diffsig/groebner.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace diffsig {

namespace {

struct MTerm {
  Monomial m;
  std::uint32_t comp;
  FieldElement c;
};

using MVec = std::vector<MTerm>;

class TermOrder {
 public:
  explicit TermOrder(const MonomialOrder& order) : order_(order) {}
  // Position over term: lower component index is greater.
  int compare(const Monomial& am, std::uint32_t ac, const Monomial& bm, std::uint32_t bc) const {
    if (ac != bc) return ac < bc ? 1 : -1;
    return order_.compare(am, bm);
  }
  int compare(const MTerm& a, const MTerm& b) const { return compare(a.m, a.comp, b.m, b.comp); }
  const MonomialOrder& monomial_order() const { return order_; }

 private:
  const MonomialOrder& order_;
};

MVec to_mvec(const ModuleElement& v, const TermOrder& ord) {
  MVec out;
  for (std::size_t c = 0; c < v.size(); ++c)
    for (const auto& t : v[c].terms()) out.push_back({t.monomial, static_cast<std::uint32_t>(c), t.coeff});
  std::sort(out.begin(), out.end(), [&](const MTerm& a, const MTerm& b) { return ord.compare(a, b) > 0; });
  return out;
}

ModuleElement from_mvec(const MVec& v, std::size_t rank, const Field& field, std::size_t nvars) {
  std::vector<std::vector<Term>> comps(rank);
  for (const auto& t : v) comps[t.comp].push_back({t.m, t.c});
  ModuleElement out;
  out.reserve(rank);
  for (auto& terms : comps) out.push_back(Polynomial::from_terms(field, nvars, std::move(terms)));
  return out;
}

// a[from..] - coeff * mono * g, all sorted descending.
MVec sub_multiple(const MVec& a, std::size_t from, const FieldElement& coeff, const Monomial& mono, const MVec& g,
                  const TermOrder& ord) {
  MVec out;
  out.reserve(a.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < a.size() && j < g.size()) {
    Monomial gm = g[j].m * mono;
    int c = ord.compare(a[i].m, a[i].comp, gm, g[j].comp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({std::move(gm), g[j].comp, -(g[j].c * coeff)});
      ++j;
    } else {
      FieldElement v = a[i].c - g[j].c * coeff;
      if (!v.is_zero()) out.push_back({a[i].m, a[i].comp, std::move(v)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].m * mono, g[j].comp, -(g[j].c * coeff)});
  return out;
}

void make_monic(MVec& v) {
  if (v.empty() || v.front().c.is_one()) return;
  FieldElement inv = v.front().c.inverse();
  for (auto& t : v) t.c *= inv;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t comp;
};

class Buchberger {
 public:
  Buchberger(Field field, std::size_t nvars, std::size_t rank, const MonomialOrder& order,
             const GroebnerOptions& options)
      : field_(field), nvars_(nvars), rank_(rank), ord_(order), options_(options) {}

  std::vector<MVec> run(std::vector<MVec> input) {
    std::sort(input.begin(), input.end(), [&](const MVec& a, const MVec& b) {
      if (a.empty() || b.empty()) return b.empty() && !a.empty();
      return ord_.compare(a.front(), b.front()) < 0;
    });
    for (auto& v : input) {
      MVec r = reduce_full(v);
      if (r.empty()) continue;
      make_monic(r);
      insert(std::move(r));
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (ord_.compare(pairs_[k].lcm, pairs_[k].comp, pairs_[best].lcm, pairs_[best].comp) < 0) best = k;
      }
      Pair p = std::move(pairs_[best]);
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();
      if (++processed > options_.max_pairs)
        throw BudgetExhausted("S-pair budget of " + std::to_string(options_.max_pairs) + " exhausted");
      MVec s = spoly(p);
      MVec r = reduce_full(s);
      if (r.empty()) continue;
      make_monic(r);
      insert(std::move(r));
    }
    return finalize();
  }

  MVec reduce_full(const MVec& v) const {
    MVec out;
    MVec cur = v;
    std::size_t pos = 0;
    while (pos < cur.size()) {
      const MTerm& lt = cur[pos];
      const MVec* reducer = find_reducer(lt);
      if (reducer == nullptr) {
        out.push_back(lt);
        ++pos;
        continue;
      }
      FieldElement coeff = lt.c / reducer->front().c;
      Monomial mono = lt.m / reducer->front().m;
      cur = sub_multiple(cur, pos, coeff, mono, *reducer, ord_);
      pos = 0;
    }
    return out;
  }

 private:
  const MVec* find_reducer(const MTerm& t) const {
    for (std::size_t idx : active_) {
      const MTerm& lead = basis_[idx].front();
      if (lead.comp == t.comp && lead.m.divides(t.m)) return &basis_[idx];
    }
    return nullptr;
  }

  MVec spoly(const Pair& p) const {
    const MVec& f = basis_[p.i];
    const MVec& g = basis_[p.j];
    Monomial mf = p.lcm / f.front().m;
    Monomial mg = p.lcm / g.front().m;
    MVec a;
    a.reserve(f.size());
    for (const auto& t : f) a.push_back({t.m * mf, t.comp, t.c});
    return sub_multiple(a, 0, field_.one(), mg, g, ord_);
  }

  // Gebauer-Möller update. The product criterion is only valid for ideals.
  void insert(MVec h) {
    const std::size_t hidx = basis_.size();
    basis_.push_back(std::move(h));
    const MTerm& hl = basis_[hidx].front();

    std::vector<Pair> candidates;
    for (std::size_t g : active_) {
      const MTerm& gl = basis_[g].front();
      if (gl.comp != hl.comp) continue;
      candidates.push_back({g, hidx, hl.m.lcm(gl.m), hl.comp});
    }
    std::vector<bool> keep(candidates.size(), true);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const bool coprime = rank_ == 1 && basis_[candidates[a].i].front().m.coprime(hl.m);
      if (coprime) continue;
      for (std::size_t b = 0; b < candidates.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (candidates[b].lcm.divides(candidates[a].lcm)) {
          if (candidates[b].lcm != candidates[a].lcm || b < a) {
            keep[a] = false;
            break;
          }
        }
      }
    }
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!keep[a]) continue;
      if (rank_ == 1 && basis_[candidates[a].i].front().m.coprime(hl.m)) continue;
      fresh.push_back(std::move(candidates[a]));
    }
    std::vector<Pair> remaining;
    remaining.reserve(pairs_.size() + fresh.size());
    for (auto& p : pairs_) {
      if (p.comp == hl.comp && hl.m.divides(p.lcm)) {
        Monomial li = basis_[p.i].front().m.lcm(hl.m);
        Monomial lj = basis_[p.j].front().m.lcm(hl.m);
        if (li != p.lcm && lj != p.lcm) continue;
      }
      remaining.push_back(std::move(p));
    }
    for (auto& p : fresh) remaining.push_back(std::move(p));
    pairs_ = std::move(remaining);

    std::vector<std::size_t> still;
    for (std::size_t g : active_) {
      const MTerm& gl = basis_[g].front();
      if (gl.comp == hl.comp && hl.m.divides(gl.m)) continue;
      still.push_back(g);
    }
    still.push_back(hidx);
    active_ = std::move(still);
  }

  std::vector<MVec> finalize() const {
    // Minimal basis: drop elements whose leading term is divisible by another.
    std::vector<MVec> minimal;
    for (std::size_t a : active_) {
      bool redundant = false;
      for (std::size_t b : active_) {
        if (a == b) continue;
        const MTerm& la = basis_[a].front();
        const MTerm& lb = basis_[b].front();
        if (la.comp == lb.comp && lb.m.divides(la.m) && (lb.m != la.m || b < a)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(basis_[a]);
    }
    // Interreduce tails.
    std::vector<MVec> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      Buchberger helper(field_, nvars_, rank_, ord_.monomial_order(), options_);
      for (std::size_t b = 0; b < minimal.size(); ++b) {
        if (b == a) continue;
        helper.basis_.push_back(minimal[b]);
        helper.active_.push_back(helper.basis_.size() - 1);
      }
      MVec tail(minimal[a].begin() + 1, minimal[a].end());
      MVec r{minimal[a].front()};
      MVec rt = helper.reduce_full(tail);
      r.insert(r.end(), rt.begin(), rt.end());
      make_monic(r);
      reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const MVec& x, const MVec& y) { return ord_.compare(x.front(), y.front()) < 0; });
    return reduced;
  }

  Field field_;
  std::size_t nvars_;
  std::size_t rank_;
  TermOrder ord_;
  GroebnerOptions options_;
  std::vector<MVec> basis_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<ModuleElement> module_groebner_basis(const std::vector<ModuleElement>& gens, std::size_t rank,
                                                 const MonomialOrder& order, const GroebnerOptions& options) {
  if (gens.empty()) return {};
  const Field field = gens.front().front().field();
  const std::size_t nvars = gens.front().front().nvars();
  TermOrder ord(order);
  std::vector<MVec> input;
  for (const auto& g : gens) {
    if (g.size() != rank) throw DomainError("module element has the wrong rank");
    input.push_back(to_mvec(g, ord));
  }
  Buchberger bb(field, nvars, rank, order, options);
  std::vector<MVec> result = bb.run(std::move(input));
  std::vector<ModuleElement> out;
  out.reserve(result.size());
  for (const auto& v : result) out.push_back(from_mvec(v, rank, field, nvars));
  return out;
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                       const GroebnerOptions& options) {
  std::vector<ModuleElement> mgens;
  for (const auto& g : gens)
    if (!g.is_zero()) mgens.push_back({g});
  std::vector<Polynomial> out;
  for (auto& v : module_groebner_basis(mgens, 1, order, options)) out.push_back(std::move(v[0]));
  return out;
}

ModuleElement module_reduce(const ModuleElement& v, const std::vector<ModuleElement>& basis,
                            const MonomialOrder& order) {
  if (v.empty()) return v;
  const Field field = v.front().field();
  const std::size_t nvars = v.front().nvars();
  TermOrder ord(order);
  std::vector<MVec> vecs;
  for (const auto& g : basis) {
    MVec m = to_mvec(g, ord);
    if (!m.empty()) vecs.push_back(std::move(m));
  }
  MVec cur = to_mvec(v, ord);
  MVec out;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const MTerm& lt = cur[pos];
    const MVec* reducer = nullptr;
    for (const auto& g : vecs) {
      if (g.front().comp == lt.comp && g.front().m.divides(lt.m)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      out.push_back(lt);
      ++pos;
      continue;
    }
    FieldElement coeff = lt.c / reducer->front().c;
    Monomial mono = lt.m / reducer->front().m;
    cur = sub_multiple(cur, pos, coeff, mono, *reducer, ord);
    pos = 0;
  }
  return from_mvec(out, v.size(), field, nvars);
}

bool module_contains(const std::vector<ModuleElement>& gens, const ModuleElement& v,
                     const std::vector<Polynomial>& relations, const GroebnerOptions& options) {
  if (v.empty()) return true;
  const std::size_t rank = v.size();
  const Field field = v.front().field();
  const std::size_t nvars = v.front().nvars();
  std::vector<ModuleElement> all = gens;
  for (const auto& f : relations) {
    for (std::size_t j = 0; j < rank; ++j) {
      ModuleElement e(rank, Polynomial(field, nvars));
      e[j] = f;
      all.push_back(std::move(e));
    }
  }
  auto gb = module_groebner_basis(all, rank, MonomialOrder::degrevlex(), options);
  ModuleElement r = module_reduce(v, gb, MonomialOrder::degrevlex());
  return std::all_of(r.begin(), r.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  if (f.is_zero() || basis.empty()) return f;
  std::vector<ModuleElement> mb;
  for (const auto& g : basis) mb.push_back({g});
  return module_reduce({f}, mb, order)[0];
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(Field field, std::size_t nvars, std::vector<Polynomial> gens, MonomialOrder order)
    : field_(field), nvars_(nvars), order_(std::move(order)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.nvars() != nvars) throw DomainError("generator lives in a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(Field field, std::size_t nvars) {
  return Ideal(field, nvars, {Polynomial::constant(field, nvars, field.one())});
}

Ideal Ideal::maximal(Field field, std::size_t nvars) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < nvars; ++i) gens.push_back(Polynomial::variable(field, nvars, i));
  return Ideal(field, nvars, std::move(gens));
}

const std::vector<Polynomial>& Ideal::basis(const GroebnerOptions& options) const {
  std::call_once(cache_->once, [&] { cache_->basis = diffsig::groebner_basis(gens_, order_, options); });
  return cache_->basis;
}

Polynomial Ideal::normal_form(const Polynomial& f) const { return reduce(f, basis(), order_); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b[0].is_constant() && !b[0].is_zero();
}

Ideal Ideal::operator+(const Ideal& o) const {
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
  return Ideal(field_, nvars_, std::move(gens), order_);
}

Ideal Ideal::operator*(const Ideal& o) const {
  std::vector<Polynomial> gens;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) gens.push_back(a * b);
  return Ideal(field_, nvars_, std::move(gens), order_);
}

Ideal Ideal::pow(unsigned k) const {
  Ideal r = unit(field_, nvars_);
  for (unsigned i = 0; i < k; ++i) r = Ideal(field_, nvars_, (r * *this).minimal_generators(), order_);
  return r;
}

std::vector<Polynomial> Ideal::minimal_generators() const { return basis(); }

bool operator==(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options) {
  return Ideal(ideal.field(), ideal.nvars(), groebner_basis(ideal.generators(), order, options), order);
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal) { return ideal.normal_form(f); }

Ideal eliminate(const Ideal& ideal, const std::vector<bool>& keep, const GroebnerOptions& options) {
  if (keep.size() != ideal.nvars()) throw DomainError("keep mask has the wrong length");
  std::vector<bool> eliminated(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) eliminated[i] = !keep[i];
  auto gb = groebner_basis(ideal.generators(), MonomialOrder::elimination(eliminated), options);
  std::vector<Polynomial> out;
  for (auto& g : gb) {
    bool only_kept = true;
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < keep.size() && only_kept; ++i)
        if (!keep[i] && t.monomial[i] != 0) only_kept = false;
      if (!only_kept) break;
    }
    if (only_kept) out.push_back(std::move(g));
  }
  return Ideal(ideal.field(), ideal.nvars(), std::move(out));
}

namespace {

// Second components of the Gröbner elements whose first component vanishes.
std::vector<Polynomial> second_components(const std::vector<ModuleElement>& gens, const GroebnerOptions& options) {
  auto gb = module_groebner_basis(gens, 2, MonomialOrder::degrevlex(), options);
  std::vector<Polynomial> out;
  for (auto& v : gb)
    if (v[0].is_zero() && !v[1].is_zero()) out.push_back(std::move(v[1]));
  return out;
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  if (a.is_zero() || b.is_zero()) return Ideal(a.field(), a.nvars());
  // (g, g) for g in A and (h, 0) for h in B: a vanishing first component
  // means sum(alpha g) = -sum(beta h), which lies in A ∩ B.
  std::vector<ModuleElement> gens;
  Polynomial zero(a.field(), a.nvars());
  for (const auto& g : a.generators()) gens.push_back({g, g});
  for (const auto& h : b.generators()) gens.push_back({h, zero});
  return Ideal(a.field(), a.nvars(), second_components(gens, options));
}

Ideal ideal_quotient(const Ideal& a, const Polynomial& b, const GroebnerOptions& options) {
  if (b.is_zero()) return Ideal::unit(a.field(), a.nvars());
  if (a.contains(b)) return Ideal::unit(a.field(), a.nvars());
  // Syzygies of [b | gens(A)] projected onto the coefficient of b.
  std::vector<ModuleElement> gens;
  Polynomial zero(a.field(), a.nvars());
  gens.push_back({b, Polynomial::constant(a.field(), a.nvars(), a.field().one())});
  for (const auto& g : a.generators()) gens.push_back({g, zero});
  return Ideal(a.field(), a.nvars(), second_components(gens, options));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  Ideal result = Ideal::unit(a.field(), a.nvars());
  bool first = true;
  for (const auto& g : b.generators()) {
    Ideal q = ideal_quotient(a, g, options);
    if (q.is_unit()) continue;
    result = first ? q : ideal_intersection(result, q, options);
    first = false;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Kernels

namespace {

bool tuple_before(const ModuleElement& a, const ModuleElement& b) {
  long da = -1, db = -1;
  for (const auto& p : a) da = std::max(da, p.degree());
  for (const auto& p : b) db = std::max(db, p.degree());
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& ta = a[i].terms();
    const auto& tb = b[i].terms();
    std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t k = 0; k < n; ++k) {
      int c = canonical_compare(ta[k].monomial, tb[k].monomial);
      if (c != 0) return c > 0;
      if (ta[k].coeff != tb[k].coeff) return ta[k].coeff.to_string() < tb[k].coeff.to_string();
    }
    if (ta.size() != tb.size()) return ta.size() > tb.size();
  }
  return false;
}

}  // namespace

KernelBasis module_kernel(const PolyMatrix& m, const std::vector<Polynomial>& relations, Field field,
                          std::size_t nvars, const GroebnerOptions& options) {
  Ideal rel(field, nvars, relations);
  KernelBasis out;
  if (m.rows == 0) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      ModuleElement e(m.cols, Polynomial(field, nvars));
      e[j] = Polynomial::constant(field, nvars, field.one());
      if (!rel.is_unit()) out.generators.push_back(std::move(e));
    }
    return out;
  }
  const std::size_t rank = m.rows + m.cols;
  std::vector<ModuleElement> gens;
  for (std::size_t j = 0; j < m.cols; ++j) {
    ModuleElement v(rank, Polynomial(field, nvars));
    for (std::size_t r = 0; r < m.rows; ++r) v[r] = rel.normal_form(m.at(r, j));
    v[m.rows + j] = Polynomial::constant(field, nvars, field.one());
    gens.push_back(std::move(v));
  }
  for (const auto& f : rel.basis()) {
    for (std::size_t r = 0; r < m.rows; ++r) {
      ModuleElement v(rank, Polynomial(field, nvars));
      v[r] = f;
      gens.push_back(std::move(v));
    }
  }
  auto gb = module_groebner_basis(gens, rank, MonomialOrder::degrevlex(), options);
  std::vector<ModuleElement> kernel;
  for (auto& v : gb) {
    bool upper_zero = true;
    for (std::size_t r = 0; r < m.rows && upper_zero; ++r) upper_zero = v[r].is_zero();
    if (!upper_zero) continue;
    ModuleElement k;
    bool nonzero = false;
    for (std::size_t j = 0; j < m.cols; ++j) {
      k.push_back(rel.normal_form(v[m.rows + j]));
      nonzero = nonzero || !k.back().is_zero();
    }
    if (!nonzero) continue;
    // Monic on the first nonzero slot so duplicates coincide.
    for (const auto& p : k) {
      if (p.is_zero()) continue;
      FieldElement inv = p.terms().front().coeff.inverse();
      for (auto& q : k) q = q.scaled(inv);
      break;
    }
    kernel.push_back(std::move(k));
  }
  std::sort(kernel.begin(), kernel.end(), tuple_before);
  kernel.erase(std::unique(kernel.begin(), kernel.end()), kernel.end());
  out.generators = std::move(kernel);
  return out;
}

bool kernel_contains(const PolyMatrix& m, const ModuleElement& v, const Ideal& relations) {
  if (v.size() != m.cols) throw DomainError("tuple length does not match the matrix");
  for (std::size_t r = 0; r < m.rows; ++r) {
    Polynomial acc(relations.field(), relations.nvars());
    for (std::size_t c = 0; c < m.cols; ++c) {
      const Polynomial& e = m.at(r, c);
      if (e.is_zero() || v[c].is_zero()) continue;
      acc += e * v[c];
    }
    if (!relations.contains(acc)) return false;
  }
  return true;
}

}  // namespace diffsig
