#include "diffsig/formulas.hpp"

#include <array>
#include <utility>

#include "diffsig/field.hpp"
#include "diffsig/linalg.hpp"

namespace diffsig {

namespace {

constexpr std::array<std::pair<FormulaKind, const char*>, 8> kNames{{
    {FormulaKind::Determinantal, "determinantal"},
    {FormulaKind::Symmetric, "symmetric"},
    {FormulaKind::Pfaffian, "pfaffian"},
    {FormulaKind::Segre, "segre"},
    {FormulaKind::Veronese, "veronese"},
    {FormulaKind::FiniteGroup, "finite-group"},
    {FormulaKind::Quadric, "quadric"},
    {FormulaKind::Grassmannian24, "grassmannian-2-4"},
}};

mpq_class inverse_power_of_two(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return mpq_class(1, p);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("formula parameters out of range: " + what);
}

mpz_class int_det(const std::vector<std::vector<mpz_class>>& m) { return determinant(m); }

mpq_class determinantal(long m, long n, long r) {
  std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(r));
  for (long i = 1; i <= r; ++i)
    for (long j = 1; j <= r; ++j) a[i - 1][j - 1] = binomial(m + n - i - j, m - i);
  mpq_class v = inverse_power_of_two(r * (m + n - r)) * int_det(a);
  v.canonicalize();
  return v;
}

mpq_class symmetric(long k, long n) {
  // Sum over k-subsets l_1 < ... < l_k of {1..n}.
  std::vector<long> l(k);
  for (long i = 0; i < k; ++i) l[i] = i + 1;
  mpz_class sum = 0;
  while (true) {
    std::vector<std::vector<mpz_class>> a(k, std::vector<mpz_class>(k));
    for (long i = 1; i <= k; ++i)
      for (long j = 1; j <= k; ++j) a[i - 1][j - 1] = binomial(n - i, n - l[j - 1]);
    sum += int_det(a);
    long i = k - 1;
    while (i >= 0 && l[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++l[i];
    for (long j = i + 1; j < k; ++j) l[j] = l[j - 1] + 1;
  }
  mpq_class v = inverse_power_of_two(k * n - k * (k - 1) / 2) * sum;
  v.canonicalize();
  return v;
}

mpq_class pfaffian(long r, long n) {
  std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(r));
  const long top = 2 * n - 4 * r - 2;
  for (long i = 1; i <= r; ++i)
    for (long j = 1; j <= r; ++j)
      a[i - 1][j - 1] = binomial(top, n - 2 * r - i + j - 1) - binomial(top, n - 2 * r - i - j - 1);
  mpq_class v = inverse_power_of_two(r * (2 * n - 2 * r - 1)) * int_det(a);
  v.canonicalize();
  return v;
}

}  // namespace

FormulaKind parse_formula_kind(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (name == n) return k;
  throw DomainError("unknown formula kind '" + std::string(name) + "'");
}

std::string formula_kind_name(FormulaKind kind) {
  for (const auto& [k, n] : kNames)
    if (k == kind) return n;
  return "?";
}

std::vector<std::string> formula_parameters(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::Determinantal: return {"m", "n", "r"};
    case FormulaKind::Symmetric:
    case FormulaKind::Pfaffian: return {"k", "n"};
    case FormulaKind::Segre: return {"m", "n"};
    case FormulaKind::Veronese:
    case FormulaKind::Quadric: return {"d"};
    case FormulaKind::FiniteGroup: return {"order"};
    case FormulaKind::Grassmannian24: return {};
  }
  return {};
}

mpq_class closed_form_signature(const FormulaRequest& req) {
  const auto names = formula_parameters(req.kind);
  if (req.params.size() != names.size())
    throw DomainError(formula_kind_name(req.kind) + " takes " + std::to_string(names.size()) + " parameter(s)");
  const auto& p = req.params;
  switch (req.kind) {
    case FormulaKind::Determinantal:
      // At r = m the ring is a polynomial ring and the determinant formula fails.
      require(1 <= p[2] && p[2] < p[0] && p[0] <= p[1], "determinantal needs 1 <= r < m <= n");
      return determinantal(p[0], p[1], p[2]);
    case FormulaKind::Symmetric:
      require(1 <= p[0] && p[0] < p[1], "symmetric needs 1 <= k < n");
      return symmetric(p[0], p[1]);
    case FormulaKind::Pfaffian:
      require(1 <= p[0] && p[1] > 2 * (p[0] + 1), "pfaffian needs k >= 1 and n > 2(k+1)");
      return pfaffian(p[0], p[1]);
    case FormulaKind::Segre: {
      require(p[0] >= 2 && p[1] >= 2, "segre needs m, n >= 2");
      mpq_class v = mpq_class(binomial(p[0] + p[1] - 2, p[0] - 1)) * inverse_power_of_two(p[0] + p[1] - 1);
      v.canonicalize();
      return v;
    }
    case FormulaKind::Veronese:
      require(p[0] >= 1, "veronese needs d >= 1");
      return mpq_class(1, p[0]);
    case FormulaKind::FiniteGroup:
      require(p[0] >= 1, "finite-group needs |G| >= 1");
      return mpq_class(1, p[0]);
    case FormulaKind::Quadric:
      require(p[0] >= 2 && p[0] < 4096, "quadric needs d >= 2");
      return inverse_power_of_two(p[0] - 1);
    case FormulaKind::Grassmannian24:
      return mpq_class(1, 16);
  }
  throw DomainError("unknown formula kind");
}

}  // namespace diffsig
