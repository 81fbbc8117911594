#include "diffsig/ring.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace diffsig {

RingPresentation::RingPresentation(Field field, std::vector<std::string> vars,
                                   std::vector<Polynomial> relations, MonomialOrder order,
                                   std::vector<std::uint32_t> weights)
    : field_(field), vars_(std::move(vars)), order_(std::move(order)), weights_(std::move(weights)) {
  if (weights_.empty()) weights_.assign(vars_.size(), 1);
  if (weights_.size() != vars_.size()) throw DomainError("one grading weight per variable is required");
  if (std::any_of(weights_.begin(), weights_.end(), [](auto w) { return w == 0; }))
    throw DomainError("grading weights must be positive");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw DomainError("duplicate variable name '" + vars_[i] + "'");
  for (auto& f : relations) {
    if (f.nvars() != vars_.size()) throw DomainError("relation lives in a different ring");
    if (f.is_zero()) continue;  // 0 is never kept as a relation
    relations_.push_back(std::move(f));
  }
}

RingPresentation RingPresentation::from_strings(Field field, std::vector<std::string> vars,
                                                const std::vector<std::string>& relations,
                                                std::vector<std::uint32_t> weights) {
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(parse_polynomial(r, field, vars));
  return RingPresentation(field, std::move(vars), std::move(rels), MonomialOrder::degrevlex(),
                          std::move(weights));
}

bool RingPresentation::standard_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w == 1; });
}

bool RingPresentation::is_graded() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [&](const Polynomial& f) { return f.is_homogeneous(weights_) && f.constant_term().is_zero(); });
}

void RingPresentation::require_graded(std::string_view what) const {
  if (!is_graded())
    throw DomainError(std::string(what) + " requires a graded presentation (homogeneous relations)");
}

std::optional<std::size_t> RingPresentation::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

Polynomial RingPresentation::parse(std::string_view text) const { return parse_polynomial(text, field_, vars_); }

RingPresentation RingPresentation::with_relations(std::vector<Polynomial> relations) const {
  return RingPresentation(field_, vars_, std::move(relations), order_, weights_);
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Field& field, const std::vector<std::string>& vars)
      : text_(text), field_(field), vars_(vars) {}

  Polynomial run() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("syntax error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    skip_ws();
    Polynomial acc(field_, vars_.size());
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        skip_ws();
        std::size_t at = pos_;
        mpz_class d = integer();
        if (d == 0) {
          pos_ = at;
          fail("division by zero");
        }
        FieldElement inv = field_.from_rational(mpq_class(mpz_class(1), d));
        acc = acc.scaled(inv);
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      mpz_class e = integer();
      if (e > 100000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class v = integer();
      return Polynomial::constant(field_, vars_.size(), field_.from_mpz(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Polynomial::variable(field_, vars_.size(), i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Field& field_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Field& field, const std::vector<std::string>& vars) {
  return Parser(text, field, vars).run();
}

RingPresentation load_ring_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed ring file: ") + e.what());
  }
  try {
    Field field = Field::rationals();
    const auto& f = j.at("field");
    if (f.is_string()) {
      if (f.get<std::string>() != "Q") throw DomainError("unknown field '" + f.get<std::string>() + "'");
    } else {
      field = Field::prime(f.at("Fp").get<std::uint64_t>());
    }
    auto vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<std::string> rels;
    if (j.contains("relations")) rels = j.at("relations").get<std::vector<std::string>>();
    std::vector<std::uint32_t> weights;
    if (j.contains("weights")) weights = j.at("weights").get<std::vector<std::uint32_t>>();
    std::string order = j.value("order", std::string("degrevlex"));
    MonomialOrder mo = MonomialOrder::degrevlex();
    if (order == "lex") {
      mo = MonomialOrder::lex();
    } else if (order != "degrevlex") {
      throw DomainError("unknown monomial order '" + order + "'");
    }
    std::vector<Polynomial> polys;
    for (const auto& r : rels) polys.push_back(parse_polynomial(r, field, vars));
    return RingPresentation(field, std::move(vars), std::move(polys), mo, std::move(weights));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed ring file: ") + e.what());
  }
}

RingPresentation load_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read ring file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_ring_json(ss.str());
}

}  // namespace diffsig
