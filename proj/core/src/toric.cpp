#include "diffsig/toric.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include <nlohmann/json.hpp>

#include "diffsig/field.hpp"

namespace diffsig {

namespace {

using RatMatrix = std::vector<RatVector>;
using IntMatrix = std::vector<std::vector<mpz_class>>;

long to_long(const mpz_class& v) {
  if (!v.fits_slong_p()) throw DomainError("integer coordinate does not fit in 64 bits");
  return v.get_si();
}

RatVector to_rat(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

mpq_class dot(const RatVector& a, const RatVector& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Row echelon form in place; returns the rank.
std::size_t echelon(RatMatrix& m) {
  if (m.empty()) return 0;
  std::size_t cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (sgn(m[i][c]) == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t rank_of(RatMatrix m) { return echelon(m); }

mpq_class det(RatMatrix m) {
  std::size_t n = m.size();
  mpq_class d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      mpq_class f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

/// Unique solution of A x = b (A may be tall), or nullopt.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  RatMatrix m(rows, RatVector(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    std::copy(a[i].begin(), a[i].end(), m[i].begin());
    m[i][cols] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      mpq_class f = m[i][c];
      for (std::size_t j = 0; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  if (r < cols) return std::nullopt;
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(m[i][cols]) != 0) return std::nullopt;
  RatVector x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = m[i][cols];
  return x;
}

/// Generalized cross product of k-1 vectors in Q^k.
RatVector normal_of(const RatMatrix& rows, std::size_t k) {
  RatVector n(k);
  for (std::size_t j = 0; j < k; ++j) {
    RatMatrix minor;
    for (const auto& r : rows) {
      RatVector m;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) m.push_back(r[c]);
      minor.push_back(std::move(m));
    }
    n[j] = (j % 2 ? -1 : 1) * det(minor);
  }
  return n;
}

IntVector primitive(const RatVector& v) {
  mpz_class l = 1;
  for (const auto& x : v) l = lcm(l, mpz_class(x.get_den()));
  std::vector<mpz_class> z(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    z[i] = mpz_class(v[i] * l);
    g = gcd(g, z[i]);
  }
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_long(g == 0 ? z[i] : mpz_class(z[i] / g));
  return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  do f(idx);
  while (k > 0 && next_combination(idx, n));
}

/// Hermite normal form of the rows; zero rows dropped.
IntMatrix hermite(IntMatrix m) {
  if (m.empty()) return m;
  std::size_t cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[r][c].get_mpz_t(), m[i][c].get_mpz_t());
      mpz_class a = m[r][c] / g, b = m[i][c] / g;
      for (std::size_t j = 0; j < cols; ++j) {
        mpz_class x = m[r][j], y = m[i][j];
        m[r][j] = s * x + t * y;
        m[i][j] = -b * x + a * y;
      }
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

std::vector<IntVector> to_long_rows(const IntMatrix& m) {
  std::vector<IntVector> out;
  for (const auto& row : m) {
    IntVector v;
    for (const auto& x : row) v.push_back(to_long(x));
    out.push_back(std::move(v));
  }
  return out;
}

IntMatrix to_mpz_rows(const std::vector<IntVector>& m) {
  IntMatrix out;
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

// ---- polytopes given by inequalities a.x <= b ------------------------------

struct HalfSpaces {
  std::size_t dim = 0;
  RatMatrix a;
  RatVector b;
};

struct VertexData {
  RatMatrix vertices;
  std::vector<std::vector<bool>> tight;  // [vertex][constraint]
};

VertexData enumerate_vertices(const HalfSpaces& h) {
  std::set<RatVector> found;
  for_each_subset(h.a.size(), h.dim, [&](const std::vector<std::size_t>& idx) {
    RatMatrix a;
    RatVector b;
    for (auto i : idx) {
      a.push_back(h.a[i]);
      b.push_back(h.b[i]);
    }
    auto x = solve(a, b);
    if (!x) return;
    for (std::size_t i = 0; i < h.a.size(); ++i)
      if (dot(h.a[i], *x) > h.b[i]) return;
    found.insert(*x);
  });
  VertexData vd;
  vd.vertices.assign(found.begin(), found.end());
  for (const auto& v : vd.vertices) {
    std::vector<bool> t(h.a.size());
    for (std::size_t i = 0; i < h.a.size(); ++i) t[i] = dot(h.a[i], v) == h.b[i];
    vd.tight.push_back(std::move(t));
  }
  return vd;
}

std::size_t affine_dimension(const RatMatrix& pts, const std::vector<std::size_t>& ids) {
  if (ids.size() <= 1) return 0;
  RatMatrix diff;
  for (std::size_t i = 1; i < ids.size(); ++i) {
    RatVector d(pts[ids[0]].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[ids[i]][j] - pts[ids[0]][j];
    diff.push_back(std::move(d));
  }
  return rank_of(std::move(diff));
}

/// Pulling triangulation: cone from an apex over every facet not containing it.
struct Triangulator {
  const VertexData& vd;
  unsigned seed;
  mpq_class total = 0;
  std::vector<std::size_t> prefix;

  void run(const std::vector<std::size_t>& face, std::size_t dim, unsigned depth) {
    if (dim == 0) {
      prefix.push_back(face[0]);
      add_simplex();
      prefix.pop_back();
      return;
    }
    std::size_t apex = face[(std::size_t(seed) * 2654435761u + depth) % face.size()];
    std::set<std::vector<std::size_t>> facets;
    std::size_t ncons = vd.tight.empty() ? 0 : vd.tight[0].size();
    for (std::size_t c = 0; c < ncons; ++c) {
      if (vd.tight[apex][c]) continue;
      std::vector<std::size_t> sub;
      for (auto v : face)
        if (vd.tight[v][c]) sub.push_back(v);
      if (sub.empty() || sub.size() == face.size()) continue;
      if (facets.count(sub)) continue;
      if (affine_dimension(vd.vertices, sub) == dim - 1) facets.insert(sub);
    }
    prefix.push_back(apex);
    for (const auto& f : facets) run(f, dim - 1, depth + 1);
    prefix.pop_back();
  }

  void add_simplex() {
    RatMatrix m;
    const auto& o = vd.vertices[prefix[0]];
    for (std::size_t i = 1; i < prefix.size(); ++i) {
      RatVector d(o.size());
      for (std::size_t j = 0; j < o.size(); ++j) d[j] = vd.vertices[prefix[i]][j] - o[j];
      m.push_back(std::move(d));
    }
    total += abs(det(std::move(m)));
  }
};

/// d! times the volume of a full-dimensional polytope.
mpq_class normalized_volume(const HalfSpaces& h, const VertexData& vd, unsigned seed) {
  std::vector<std::size_t> all(vd.vertices.size());
  std::iota(all.begin(), all.end(), 0);
  if (all.empty() || affine_dimension(vd.vertices, all) != h.dim)
    throw DomainError("polytope is not full dimensional");
  Triangulator t{vd, seed, 0, {}};
  t.run(all, h.dim, 0);
  return t.total;
}

mpz_class factorial(std::size_t d) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), d);
  return f;
}

HalfSpaces diff_region(const RationalCone& cone) {
  HalfSpaces h;
  h.dim = cone.dimension;
  RatVector sum(h.dim);
  for (const auto& l : cone.facets) {
    RatVector a(h.dim);
    for (std::size_t i = 0; i < h.dim; ++i) {
      a[i] = -l[i];
      sum[i] += l[i];
    }
    h.a.push_back(std::move(a));
    h.b.push_back(0);
  }
  h.a.push_back(std::move(sum));
  h.b.push_back(1);
  return h;
}

/// {t : 0 <= (t B)_i <= 1} for the rows of B.
HalfSpaces cube_region(const std::vector<IntVector>& basis, std::size_t ambient) {
  HalfSpaces h;
  h.dim = basis.size();
  for (std::size_t i = 0; i < ambient; ++i) {
    RatVector a(h.dim);
    for (std::size_t j = 0; j < h.dim; ++j) a[j] = basis[j][i];
    RatVector na = a;
    for (auto& x : na) x = -x;
    h.a.push_back(std::move(na));
    h.b.push_back(0);
    h.a.push_back(std::move(a));
    h.b.push_back(1);
  }
  return h;
}

void check_rays(const std::vector<IntVector>& vs, const char* what) {
  if (vs.empty()) throw DomainError(std::string("no ") + what + " given");
  for (const auto& v : vs) {
    if (v.size() != vs[0].size()) throw DomainError(std::string(what) + " have different lengths");
    if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }))
      throw DomainError(std::string("zero vector among ") + what);
  }
}

}  // namespace

std::vector<IntVector> integer_kernel(const std::vector<IntVector>& a, std::size_t ncols) {
  IntMatrix m = to_mpz_rows(a);
  IntMatrix u(ncols, std::vector<mpz_class>(ncols));
  for (std::size_t i = 0; i < ncols; ++i) u[i][i] = 1;
  // Unimodular column operations; u[.][c] tracks column c.
  auto combine = [&](std::size_t row, std::size_t p, std::size_t c) {
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[row][p].get_mpz_t(), m[row][c].get_mpz_t());
    mpz_class x = m[row][p] / g, y = m[row][c] / g;
    auto apply = [&](IntMatrix& mat) {
      for (auto& r : mat) {
        mpz_class vp = r[p], vc = r[c];
        r[p] = s * vp + t * vc;
        r[c] = -y * vp + x * vc;
      }
    };
    apply(m);
    apply(u);
  };
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.size() && r < ncols; ++i) {
    if (m[i].size() != ncols) throw DomainError("matrix rows have inconsistent lengths");
    for (std::size_t c = r + 1; c < ncols; ++c)
      if (m[i][c] != 0) combine(i, r, c);
    if (m[i][r] != 0) ++r;
  }
  IntMatrix kernel;
  for (std::size_t c = r; c < ncols; ++c) {
    std::vector<mpz_class> col(ncols);
    for (std::size_t i = 0; i < ncols; ++i) col[i] = u[i][c];
    kernel.push_back(std::move(col));
  }
  return to_long_rows(hermite(std::move(kernel)));
}

std::vector<IntVector> saturate(const std::vector<IntVector>& vectors, std::size_t n) {
  auto perp = integer_kernel(vectors, n);
  if (perp.empty()) {
    std::vector<IntVector> id(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  return integer_kernel(perp, n);
}

RationalCone cone_facets(const std::vector<IntVector>& input) {
  check_rays(input, "rays");
  std::size_t d = input[0].size();
  RatMatrix rays;
  for (const auto& r : input) rays.push_back(to_rat(r));
  std::size_t k = rank_of(rays);

  RationalCone cone;
  cone.dimension = k;
  if (k < d) {
    cone.span_basis = saturate(input, d);
    RatMatrix bt(d, RatVector(k));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < k; ++j) bt[i][j] = cone.span_basis[j][i];
    for (auto& r : rays) r = *solve(bt, r);
  }

  std::set<IntVector> facets;
  for_each_subset(rays.size(), k - 1, [&](const std::vector<std::size_t>& idx) {
    RatMatrix sub;
    for (auto i : idx) sub.push_back(rays[i]);
    if (rank_of(sub) != k - 1) return;
    RatVector n = normal_of(sub, k);
    int sign = 0;
    for (const auto& r : rays) {
      int s = sgn(dot(n, r));
      if (s == 0) continue;
      if (sign == 0) sign = s;
      else if (s != sign) return;
    }
    if (sign == 0) return;
    if (sign < 0)
      for (auto& x : n) x = -x;
    facets.insert(primitive(n));
  });
  cone.facets.assign(facets.begin(), facets.end());

  RatMatrix fm;
  for (const auto& f : cone.facets) fm.push_back(to_rat(f));
  if (rank_of(fm) < k) throw DomainError("cone is not pointed");

  std::set<IntVector> extreme;
  for (const auto& r : rays) {
    RatMatrix tight;
    for (const auto& f : fm)
      if (sgn(dot(f, r)) == 0) tight.push_back(f);
    if (rank_of(tight) == k - 1) extreme.insert(primitive(r));
  }
  cone.rays.assign(extreme.begin(), extreme.end());
  return cone;
}

RationalCone cone_from_facets(const std::vector<IntVector>& input) {
  check_rays(input, "facets");
  std::size_t d = input[0].size();
  RatMatrix forms;
  for (const auto& f : input) forms.push_back(to_rat(f));
  if (rank_of(forms) < d) throw DomainError("facet forms do not define a pointed cone");
  std::set<IntVector> rays;
  for_each_subset(forms.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
    RatMatrix sub;
    for (auto i : idx) sub.push_back(forms[i]);
    if (rank_of(sub) != d - 1) return;
    RatVector n = normal_of(sub, d);
    int sign = 0;
    for (const auto& f : forms) {
      int s = sgn(dot(n, f));
      if (s == 0) continue;
      if (sign == 0) sign = s;
      else if (s != sign) return;
    }
    if (sign < 0)
      for (auto& x : n) x = -x;
    rays.insert(primitive(n));
  });
  if (rays.empty()) throw DomainError("facet forms define the zero cone");
  return cone_facets({rays.begin(), rays.end()});
}

RationalPolytope diff_signature_region(const RationalCone& cone) {
  auto vd = enumerate_vertices(diff_region(cone));
  RationalPolytope p;
  p.dimension = cone.dimension;
  if (cone.span_basis.empty()) {
    p.vertices = vd.vertices;
    return p;
  }
  std::size_t ambient = cone.span_basis[0].size();
  for (const auto& v : vd.vertices) {
    RatVector x(ambient);
    for (std::size_t j = 0; j < v.size(); ++j)
      for (std::size_t i = 0; i < ambient; ++i) x[i] += v[j] * cone.span_basis[j][i];
    p.vertices.push_back(std::move(x));
  }
  return p;
}

mpq_class diff_signature_polytope(const RationalCone& cone, unsigned seed) {
  if (cone.dimension == 0 || cone.facets.empty()) throw DomainError("cone has no facets");
  auto h = diff_region(cone);
  return normalized_volume(h, enumerate_vertices(h), seed);
}

mpq_class f_signature_cone(const RationalCone& cone, unsigned seed) {
  if (cone.dimension == 0 || cone.facets.empty()) throw DomainError("cone has no facets");
  std::size_t d = cone.dimension;
  std::vector<IntVector> cols(d, IntVector(cone.facets.size()));
  for (std::size_t i = 0; i < cone.facets.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) cols[j][i] = cone.facets[i][j];
  auto h = cube_region(cols, cone.facets.size());
  mpq_class v = normalized_volume(h, enumerate_vertices(h), seed);
  return v / factorial(d);
}

mpq_class f_signature_polytope(const LinearSubspaceSemigroup& l, unsigned seed) {
  check_rays(l.basis, "basis vectors");
  auto basis = saturate(l.basis, l.ambient);
  auto h = cube_region(basis, l.ambient);
  auto vd = enumerate_vertices(h);
  std::vector<std::size_t> all(vd.vertices.size());
  std::iota(all.begin(), all.end(), 0);
  if (affine_dimension(vd.vertices, all) != basis.size())
    throw DomainError("L meets the positive orthant in a lower-dimensional cone");
  return normalized_volume(h, vd, seed) / factorial(basis.size());
}

mpq_class lattice_count_ratio(const LinearSubspaceSemigroup& l, long n) {
  if (n <= 0) throw DomainError("scale must be positive");
  check_rays(l.basis, "basis vectors");
  auto basis = saturate(l.basis, l.ambient);
  std::size_t d = basis.size();
  auto vd = enumerate_vertices(cube_region(basis, l.ambient));
  std::vector<long> lo(d), hi(d);
  mpz_class cells = 1;
  for (std::size_t j = 0; j < d; ++j) {
    mpq_class mn = vd.vertices[0][j], mx = mn;
    for (const auto& v : vd.vertices) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    mpz_class a, b;
    mpq_class sa = mn * n, sb = mx * n;
    mpz_fdiv_q(a.get_mpz_t(), sa.get_num_mpz_t(), sa.get_den_mpz_t());
    mpz_cdiv_q(b.get_mpz_t(), sb.get_num_mpz_t(), sb.get_den_mpz_t());
    lo[j] = to_long(a);
    hi[j] = to_long(b);
    cells *= hi[j] - lo[j] + 1;
  }
  if (cells > 100'000'000) throw BudgetExhausted("lattice count box exceeds 1e8 points");
  std::vector<long> t = lo;
  std::vector<long> x(l.ambient);
  mpz_class count = 0;
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < l.ambient && inside; ++i) {
      long s = 0;
      for (std::size_t j = 0; j < d; ++j) s += t[j] * basis[j][i];
      inside = s >= 0 && s <= n;
    }
    if (inside) ++count;
    std::size_t j = 0;
    while (j < d && t[j] == hi[j]) t[j] = lo[j], ++j;
    if (j == d) break;
    ++t[j];
  }
  mpz_class denom;
  mpz_pow_ui(denom.get_mpz_t(), mpz_class(n).get_mpz_t(), d);
  return mpq_class(count, denom);
}

mpq_class polytope_volume(const RationalPolytope& p, unsigned seed) {
  if (p.vertices.empty()) throw DomainError("polytope has no vertices");
  std::size_t amb = p.vertices[0].size();
  std::vector<IntVector> dirs;
  for (const auto& v : p.vertices) {
    if (v.size() != amb) throw DomainError("vertices have different lengths");
    RatVector d(amb);
    for (std::size_t i = 0; i < amb; ++i) d[i] = v[i] - p.vertices[0][i];
    if (std::any_of(d.begin(), d.end(), [](const mpq_class& x) { return sgn(x) != 0; }))
      dirs.push_back(primitive(d));
  }
  if (dirs.empty()) return 1;
  auto basis = saturate(dirs, amb);
  std::size_t k = basis.size();
  RatMatrix bt(amb, RatVector(k));
  for (std::size_t i = 0; i < amb; ++i)
    for (std::size_t j = 0; j < k; ++j) bt[i][j] = basis[j][i];
  RatMatrix pts;
  for (const auto& v : p.vertices) {
    RatVector d(amb);
    for (std::size_t i = 0; i < amb; ++i) d[i] = v[i] - p.vertices[0][i];
    pts.push_back(*solve(bt, d));
  }
  // Hull facets through k affinely independent points.
  HalfSpaces h;
  h.dim = k;
  std::set<std::pair<RatVector, mpq_class>> seen;
  for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
    RatMatrix diff;
    for (std::size_t i = 1; i < idx.size(); ++i) {
      RatVector d(k);
      for (std::size_t j = 0; j < k; ++j) d[j] = pts[idx[i]][j] - pts[idx[0]][j];
      diff.push_back(std::move(d));
    }
    if (rank_of(diff) != k - 1) return;
    RatVector n = normal_of(diff, k);
    mpq_class b = dot(n, pts[idx[0]]);
    int sign = 0;
    for (const auto& q : pts) {
      int s = sgn(dot(n, q) - b);
      if (s == 0) continue;
      if (sign == 0) sign = s;
      else if (s != sign) return;
    }
    if (sign > 0) {
      for (auto& x : n) x = -x;
      b = -b;
    }
    IntVector pn = primitive(n);
    RatVector a = to_rat(pn);
    mpq_class scale = a[0] != 0 ? a[0] / n[0] : mpq_class(0);
    if (scale == 0)
      for (std::size_t j = 0; j < k; ++j)
        if (sgn(n[j]) != 0) {
          scale = a[j] / n[j];
          break;
        }
    mpq_class bb = b * scale;
    if (seen.insert({a, bb}).second) {
      h.a.push_back(std::move(a));
      h.b.push_back(bb);
    }
  });
  return normalized_volume(h, enumerate_vertices(h), seed) / factorial(k);
}

RationalCone segre_cone(unsigned m, unsigned n) {
  if (m == 0 || n == 0) throw DomainError("Segre factors need at least one variable");
  std::size_t d = m + n - 1;
  std::vector<IntVector> rays;
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < n; ++j) {
      IntVector r(d, 0);
      r[i] = 1;
      if (j + 1 < n) r[m + j] = 1;
      rays.push_back(std::move(r));
    }
  return cone_facets(rays);
}

RationalCone veronese_cone(unsigned d) {
  if (d == 0) throw DomainError("Veronese degree must be positive");
  return cone_facets({{1, 0}, {1, static_cast<long>(d)}});
}

LinearSubspaceSemigroup segre_subspace(unsigned m, unsigned n) {
  // With a single variable on one side the coordinate a_1 >= 0 is not a facet.
  if (m < 2 || n < 2) throw DomainError("Segre subspace needs at least two variables per factor");
  IntVector row(m + n, 1);
  for (unsigned j = 0; j < n; ++j) row[m + j] = -1;
  return {m + n, integer_kernel({row}, m + n)};
}

LinearSubspaceSemigroup subspace_of_cone(const RationalCone& cone) {
  std::vector<IntVector> basis(cone.dimension, IntVector(cone.facets.size()));
  for (std::size_t i = 0; i < cone.facets.size(); ++i)
    for (std::size_t j = 0; j < cone.dimension; ++j) basis[j][i] = cone.facets[i][j];
  return {cone.facets.size(), basis};
}

namespace {

std::vector<IntVector> int_rows(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw DomainError(std::string("missing array \"") + key + "\"");
  std::vector<IntVector> rows;
  for (const auto& r : j[key]) {
    if (!r.is_array()) throw DomainError(std::string("\"") + key + "\" must be a list of integer lists");
    IntVector v;
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw DomainError(std::string("non-integer entry in \"") + key + "\"");
      v.push_back(x.get<long>());
    }
    rows.push_back(std::move(v));
  }
  return rows;
}

nlohmann::json parse(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

RationalCone load_cone_json(const std::string& text) {
  auto j = parse(text);
  if (j.contains("rays")) return cone_facets(int_rows(j, "rays"));
  if (j.contains("facets")) return cone_from_facets(int_rows(j, "facets"));
  throw DomainError("cone JSON needs \"rays\" or \"facets\"");
}

LinearSubspaceSemigroup load_subspace_json(const std::string& text) {
  auto j = parse(text);
  auto rows = int_rows(j, "lattice_basis");
  if (rows.empty()) throw DomainError("empty lattice basis");
  return {rows[0].size(), rows};
}

}  // namespace diffsig
