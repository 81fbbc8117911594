#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace diffsig {

enum class FormulaKind {
  Determinantal,  // (m, n, r): m x n matrices of rank <= r, 1 <= r < m <= n
  Symmetric,      // (k, n): n x n symmetric matrices of rank <= k, 1 <= k < n
  Pfaffian,       // (k, n): n x n alternating matrices of rank <= 2k, n > 2(k + 1)
  Segre,          // (m, n): P^(m-1) x P^(n-1), m, n >= 2
  Veronese,       // (d): d-th Veronese subring of K[x, y], d >= 1
  FiniteGroup,    // (|G|): no element fixes a hyperplane
  Quadric,        // (d): x_1^2 + ... + x_(d+1)^2, d >= 2
  Grassmannian24, // (): Gr(2, 4)
};

struct FormulaRequest {
  FormulaKind kind;
  std::vector<long> params;
};

FormulaKind parse_formula_kind(std::string_view name);
std::string formula_kind_name(FormulaKind kind);
/// Parameter names in the order `params` expects them.
std::vector<std::string> formula_parameters(FormulaKind kind);

/// Exact closed-form differential signature. Throws DomainError when the
/// parameters are outside the range where the formula is known to hold.
mpq_class closed_form_signature(const FormulaRequest& req);

}  // namespace diffsig
