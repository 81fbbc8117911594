#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffsig/monomial.hpp"
#include "diffsig/polynomial.hpp"

namespace diffsig {

/// R = K[x_1..x_k]/(f_1..f_m) together with a term order and positive
/// grading weights.
class RingPresentation {
 public:
  RingPresentation(Field field, std::vector<std::string> vars, std::vector<Polynomial> relations = {},
                   MonomialOrder order = MonomialOrder::degrevlex(),
                   std::vector<std::uint32_t> weights = {});

  /// Convenience: relations given as text in the polynomial grammar.
  static RingPresentation from_strings(Field field, std::vector<std::string> vars,
                                       const std::vector<std::string>& relations,
                                       std::vector<std::uint32_t> weights = {});

  const Field& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const MonomialOrder& order() const { return order_; }
  /// Always has nvars() entries.
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  bool standard_weights() const;
  /// Every relation is homogeneous for the grading weights.
  bool is_graded() const;
  /// Throws DomainError unless is_graded().
  void require_graded(std::string_view what) const;

  Polynomial zero() const { return Polynomial(field_, nvars()); }
  Polynomial one() const { return Polynomial::constant(field_, nvars(), field_.one()); }
  Polynomial var(std::size_t i) const { return Polynomial::variable(field_, nvars(), i); }
  std::optional<std::size_t> var_index(std::string_view name) const;

  Polynomial parse(std::string_view text) const;
  std::string format(const Polynomial& p) const { return p.to_string(vars_); }

  /// Same ring with different relations (used for sub-computations).
  RingPresentation with_relations(std::vector<Polynomial> relations) const;

 private:
  Field field_;
  std::vector<std::string> vars_;
  std::vector<Polynomial> relations_;
  MonomialOrder order_;
  std::vector<std::uint32_t> weights_;
};

/// Recursive-descent parser for the polynomial grammar: integer literals,
/// identifiers, `^` with integer exponents, `*`, `/` by an integer literal,
/// `+`, `-`, parentheses. Throws DomainError with the byte offset on error.
Polynomial parse_polynomial(std::string_view text, const Field& field,
                            const std::vector<std::string>& vars);

/// Reads a ring presentation file: {"field": "Q" | {"Fp": p}, "vars": [...],
/// "relations": [...], "order": "degrevlex", "weights": [...]}.
RingPresentation load_ring_json(const std::string& json_text);
RingPresentation load_ring_file(const std::string& path);

}  // namespace diffsig
