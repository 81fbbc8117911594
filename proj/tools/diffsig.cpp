#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "diffsig/formulas.hpp"
#include "diffsig/frobenius.hpp"
#include "diffsig/principal_parts.hpp"
#include "diffsig/quotient.hpp"
#include "diffsig/symbolic_powers.hpp"
#include "diffsig/toric.hpp"
#include "report.hpp"

using namespace diffsig;
using diffsig::cli::Json;
using diffsig::cli::Report;

namespace {

struct Common {
  std::string ring_path;
  unsigned max_order = 4;
  unsigned max_level = 2;
  std::size_t budget = GroebnerOptions{}.max_pairs;
  std::uint64_t max_box = FrobeniusOptions{}.max_box;
  std::string out;
  std::string format = "table";
};

struct Args {
  std::string ideal;
  std::string element;
  std::string order_name = "degrevlex";
  std::string rays, facets, cone_file;
  std::string lattice_basis, subspace_file;
  std::string kind, params;
  std::string method = "auto";
  std::vector<long> counts;
  unsigned n = 2;
  unsigned order = 2;
  unsigned level = 1;
  unsigned seed = 0;
};

Common common;
Args args;

GroebnerOptions gb_options() { return GroebnerOptions{common.budget}; }
FrobeniusOptions frob_options() { return FrobeniusOptions{common.max_box, gb_options()}; }

RingPresentation load_ring() {
  if (common.ring_path.empty()) throw DomainError("--ring is required for this command");
  return load_ring_file(common.ring_path);
}

std::string rational(const mpq_class& q) { return q.get_str(); }

Json ring_summary(const RingPresentation& ring) {
  Json j = Json::object();
  j["field"] = ring.field().to_string();
  j["vars"] = ring.vars();
  Json rels = Json::array();
  for (const auto& f : ring.relations()) rels.push_back(ring.format(f));
  j["relations"] = rels;
  return j;
}

Json poly_list(const RingPresentation& ring, const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(ring.format(p));
  return out;
}

/// Rewrites identifiers such as "xyz" that are concatenations of variable
/// names into explicit products "x*y*z".
std::string expand_juxtaposition(const std::string& text, const RingPresentation& ring) {
  auto split = [&](const std::string& id) -> std::optional<std::vector<std::string>> {
    std::vector<std::optional<std::vector<std::string>>> best(id.size() + 1);
    best[0] = std::vector<std::string>{};
    for (std::size_t i = 0; i < id.size(); ++i) {
      if (!best[i]) continue;
      for (const auto& v : ring.vars())
        if (id.compare(i, v.size(), v) == 0 && !best[i + v.size()]) {
          auto next = *best[i];
          next.push_back(v);
          best[i + v.size()] = std::move(next);
        }
    }
    return best[id.size()];
  };
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string id = text.substr(i, j - i);
      auto parts = ring.var_index(id) ? std::nullopt : split(id);
      if (parts) {
        for (std::size_t k = 0; k < parts->size(); ++k) out += (k ? "*" : "") + (*parts)[k];
      } else {
        out += id;
      }
      i = j;
    } else {
      out += text[i++];
    }
  }
  return out;
}

std::vector<Polynomial> parse_list(const RingPresentation& ring, const std::string& text) {
  std::vector<Polynomial> out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(ring.parse(expand_juxtaposition(cur, ring)));
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) flush();
    else cur += c;
  }
  flush();
  return out;
}

/// The ideal given by --ideal, or the homogeneous maximal ideal when the flag
/// is absent or "m".
Ideal chosen_ideal(const RingPresentation& ring) {
  if (args.ideal.empty() || args.ideal == "m") return maximal_ideal(ring);
  return ring_ideal(ring, parse_list(ring, args.ideal));
}

Json colength(const Ideal& i) {
  try {
    return quotient_length(i, gb_options());
  } catch (const DomainError&) {
    return "infinite";
  }
}

Json int_rows(const std::vector<IntVector>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

// ---- commands ---------------------------------------------------------------

Report cmd_signature() {
  auto ring = load_ring();
  auto seq = signature_sequence(ring, common.max_order, gb_options());
  Report r;
  r.body["command"] = "signature";
  r.body["ring"] = ring_summary(ring);
  r.body["dimension"] = seq.dimension;
  Json rows = Json::array();
  for (const auto& e : seq.entries) {
    Json row = Json::object();
    row["n"] = e.n;
    row["order"] = e.n - 1;
    row["length"] = e.length;
    row["ratio-exact"] = rational(e.ratio_rank);
    row["ratio-decimal"] = cli::decimal(e.ratio_rank);
    row["ratio-volume"] = rational(e.ratio_volume);
    rows.push_back(row);
  }
  r.body["entries"] = rows;
  r.body["note"] = "length(R/m^<n>) = free rank of P^(n-1); ratio-exact = length/binom(n-1+d,d)";
  r.csv_rows = "entries";
  r.csv_columns = {"n", "length", "ratio-exact", "ratio-decimal"};
  return r;
}

Report cmd_free_rank() {
  auto ring = load_ring();
  auto fr = free_rank(ring, args.order, gb_options());
  Report r;
  r.body["command"] = "free-rank";
  r.body["ring"] = ring_summary(ring);
  r.body["order"] = fr.order;
  r.body["free rank"] = fr.free_rank;
  r.body["rank of P^n"] = fr.ambient_rank.get_str();
  Json w = Json::array();
  for (const auto& op : fr.witnesses) w.push_back(op.to_string(ring));
  r.body["unitary witnesses"] = w;
  return r;
}

Report cmd_operators() {
  auto ring = load_ring();
  auto ops = operators_of_order(ring, args.order, gb_options());
  Report r;
  r.body["command"] = "operators";
  r.body["ring"] = ring_summary(ring);
  r.body["order"] = args.order;
  Json slots = Json::array();
  for (const auto& m : monomials_up_to_degree(ring.nvars(), args.order)) {
    Polynomial p = Polynomial::monomial(ring.field(), m, ring.field().one());
    slots.push_back(ring.format(p));
  }
  r.body["slots"] = slots;
  Json rows = Json::array();
  for (const auto& op : ops) {
    Json row = Json::object();
    row["tuple"] = op.to_string(ring);
    auto w = unitary_witness(op, ring);
    row["unitary"] = w ? "yes" : "no";
    rows.push_back(row);
  }
  r.body["generators"] = rows;
  r.csv_rows = "generators";
  return r;
}

Report cmd_diff_power() {
  auto ring = load_ring();
  Ideal j = chosen_ideal(ring);
  const bool maximal = j == maximal_ideal(ring);
  std::string method = args.method;
  if (method == "auto") method = maximal ? "linear" : "colon";
  if (method == "linear" && !maximal) throw DomainError("--method linear applies to the maximal ideal only");
  if (method != "linear" && method != "colon") throw DomainError("--method must be auto, linear or colon");
  Ideal p = method == "linear" ? diff_power_of_maximal(ring, args.n, gb_options())
                               : diff_power_ideal(j, args.n, ring, gb_options());
  Report r;
  r.body["command"] = "diff-power";
  r.body["ring"] = ring_summary(ring);
  r.body["ideal"] = poly_list(ring, j.minimal_generators());
  r.body["n"] = args.n;
  r.body["method"] = method;
  r.body["generators"] = poly_list(ring, p.minimal_generators());
  r.body["colength"] = colength(p);
  r.body["equals J^n"] = p == ring_ideal(ring, j.pow(args.n).generators());
  return r;
}

Report cmd_diff_core() {
  auto ring = load_ring();
  Ideal j = chosen_ideal(ring);
  auto core = diff_core_truncated(j, common.max_order, ring, gb_options());
  Report r;
  r.body["command"] = "diff-core";
  r.body["ring"] = ring_summary(ring);
  r.body["ideal"] = poly_list(ring, j.minimal_generators());
  r.body["window"] = core.window;
  r.body["core generators"] = poly_list(ring, core.core.minimal_generators());
  r.body["last two equal"] = core.last_two_equal;
  r.body["note"] = "intersection of J^<1> .. J^<N>; equality at the end of the window is not a proof of stabilization";
  return r;
}

Report cmd_dsimple_witness() {
  auto ring = load_ring();
  if (args.element.empty()) throw DomainError("--element is required");
  Polynomial h = ring.parse(expand_juxtaposition(args.element, ring));
  auto w = d_simplicity_witness(h, common.max_order, ring, gb_options());
  Report r;
  r.body["command"] = "dsimple-witness";
  r.body["ring"] = ring_summary(ring);
  r.body["element"] = ring.format(h);
  r.body["max order"] = common.max_order;
  if (w) {
    r.body["found"] = true;
    r.body["order"] = w->order;
    r.body["operator"] = w->op.to_string(ring);
    r.body["image"] = ring.format(w->image);
  } else {
    r.body["found"] = false;
    r.body["note"] = "no operator of order <= max order sends the element outside m";
  }
  return r;
}

Report cmd_degree_bound() {
  auto ring = load_ring();
  auto b = graded_degree_bound(ring, common.max_order, gb_options());
  Report r;
  r.body["command"] = "degree-bound";
  r.body["ring"] = ring_summary(ring);
  Json rows = Json::array();
  for (std::size_t i = 0; i < b.min_degrees.size(); ++i) {
    Json row = Json::object();
    row["n"] = i + 1;
    row["min degree"] = b.min_degrees[i];
    rows.push_back(row);
  }
  r.body["degrees"] = rows;
  r.body["alpha"] = rational(b.alpha);
  r.body["multiplicity"] = b.multiplicity.get_str();
  r.body["dimension"] = b.dimension;
  r.body["bound"] = rational(b.bound);
  r.body["note"] = "alpha is the maximum over the window only; the bound e*alpha^d is a heuristic";
  r.csv_rows = "degrees";
  return r;
}

Report cmd_frobenius_power() {
  auto ring = load_ring();
  if (ring.field().is_rational()) throw DomainError("Frobenius powers need a prime field");
  auto level = FrobeniusLevel::make(ring.field().characteristic(), args.level);
  Ideal j = chosen_ideal(ring);
  const bool maximal = j == maximal_ideal(ring);
  Ideal p = fdiff_power_ideal(j, level, ring, frob_options());
  Report r;
  r.body["command"] = "frobenius-power";
  r.body["ring"] = ring_summary(ring);
  r.body["ideal"] = poly_list(ring, j.minimal_generators());
  r.body["q"] = level.q;
  r.body["generators"] = poly_list(ring, p.minimal_generators());
  r.body["colength"] = colength(p);
  if (maximal) {
    Ideal la = fdiff_power_of_maximal(ring, level, frob_options());
    r.body["agrees with linear algebra"] = la == p;
    r.body["contains m^[q]"] = p.contains(frobenius_power_of_maximal(ring, level.q));
    Ideal fedder = fedder_splitting_ideal(ring, level, gb_options());
    r.body["splitting ideal"] = poly_list(ring, fedder.minimal_generators());
    r.body["equals splitting ideal"] = fedder == p;
  }
  return r;
}

Report cmd_f_signature() {
  auto ring = load_ring();
  auto seq = f_signature_sequence(ring, common.max_level, frob_options());
  Report r;
  r.body["command"] = "f-signature";
  r.body["ring"] = ring_summary(ring);
  r.body["p"] = seq.p;
  r.body["dimension"] = seq.dimension;
  Json rows = Json::array();
  for (const auto& e : seq.entries) {
    Json row = Json::object();
    row["e"] = e.e;
    row["length"] = e.length;
    row["ratio-exact"] = rational(e.ratio);
    row["ratio-decimal"] = cli::decimal(e.ratio);
    row["fdiff-length"] = e.fdiff_length;
    rows.push_back(row);
  }
  r.body["entries"] = rows;
  if (seq.warning) r.body["warning"] = *seq.warning;
  r.csv_rows = "entries";
  r.csv_columns = {"e", "length", "ratio-exact", "ratio-decimal"};
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Report cmd_toric() {
  RationalCone cone;
  if (!args.rays.empty()) cone = load_cone_json("{\"rays\": " + args.rays + "}");
  else if (!args.facets.empty()) cone = load_cone_json("{\"facets\": " + args.facets + "}");
  else if (!args.cone_file.empty()) cone = load_cone_json(read_file(args.cone_file));
  else throw DomainError("give --rays, --facets or --cone");
  Report r;
  r.body["command"] = "toric";
  r.body["dimension"] = cone.dimension;
  r.body["rays"] = int_rows(cone.rays);
  r.body["facets"] = int_rows(cone.facets);
  if (!cone.span_basis.empty()) r.body["span basis"] = int_rows(cone.span_basis);
  r.body["differential signature"] = rational(diff_signature_polytope(cone, args.seed));
  r.body["F-signature"] = rational(f_signature_cone(cone, args.seed));
  return r;
}

Report cmd_toric_f() {
  LinearSubspaceSemigroup l;
  if (!args.lattice_basis.empty()) l = load_subspace_json("{\"lattice_basis\": " + args.lattice_basis + "}");
  else if (!args.subspace_file.empty()) l = load_subspace_json(read_file(args.subspace_file));
  else throw DomainError("give --lattice-basis or --subspace");
  Report r;
  r.body["command"] = "toric-f";
  r.body["ambient"] = l.ambient;
  r.body["lattice basis"] = int_rows(saturate(l.basis, l.ambient));
  mpq_class s = f_signature_polytope(l, args.seed);
  r.body["F-signature"] = rational(s);
  if (!args.counts.empty()) {
    Json rows = Json::array();
    for (long n : args.counts) {
      mpq_class c = lattice_count_ratio(l, n);
      Json row = Json::object();
      row["n"] = n;
      row["count ratio"] = cli::decimal(c);
      row["gap"] = cli::decimal(c - s);
      rows.push_back(row);
    }
    r.body["counting oracle"] = rows;
    r.csv_rows = "counting oracle";
  }
  return r;
}

Report cmd_formula() {
  FormulaRequest req{parse_formula_kind(args.kind), {}};
  std::stringstream ss(args.params);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.find_first_not_of(" ") == std::string::npos) continue;
    try {
      req.params.push_back(std::stol(tok));
    } catch (const std::exception&) {
      throw DomainError("parameter '" + tok + "' is not an integer");
    }
  }
  Report r;
  r.body["command"] = "formula";
  r.body["kind"] = formula_kind_name(req.kind);
  Json params = Json::object();
  auto names = formula_parameters(req.kind);
  for (std::size_t i = 0; i < names.size() && i < req.params.size(); ++i) params[names[i]] = req.params[i];
  r.body["parameters"] = params;
  mpq_class v = closed_form_signature(req);
  r.body["differential signature"] = rational(v);
  r.body["decimal"] = cli::decimal(v);
  return r;
}

Report cmd_symbolic() {
  auto ring = load_ring();
  if (!ring.relations().empty()) throw DomainError("symbolic powers are computed in a polynomial ring (no relations)");
  if (args.ideal.empty()) throw DomainError("--ideal is required");
  Ideal j(ring.field(), ring.nvars(), parse_list(ring, args.ideal), ring.order());
  Ideal p = symbolic_power(j, args.n, gb_options());
  Report r;
  r.body["command"] = "symbolic";
  r.body["ring"] = ring_summary(ring);
  r.body["ideal"] = poly_list(ring, j.minimal_generators());
  r.body["n"] = args.n;
  r.body["label"] = "differential power J^<n>; the symbolic power J^(n) when J is radical";
  r.body["generators"] = poly_list(ring, p.minimal_generators());
  r.body["equals J^n"] = p == j.pow(args.n);
  try {
    auto primes = squarefree_minimal_primes(j);
    r.body["matches prime-power intersection"] = intersect_powers(primes, args.n, gb_options()) == p;
  } catch (const DomainError&) {
    // Not a squarefree monomial ideal: no oracle.
  }
  return r;
}

Report cmd_gb() {
  auto ring = load_ring();
  MonomialOrder order = args.order_name == "lex" ? MonomialOrder::lex()
                        : args.order_name == "degrevlex"
                            ? MonomialOrder::degrevlex(ring.weights())
                            : throw DomainError("--term-order must be degrevlex or lex");
  std::vector<Polynomial> gens = args.ideal.empty() ? std::vector<Polynomial>{} : parse_list(ring, args.ideal);
  for (const auto& f : ring.relations()) gens.push_back(f);
  Ideal i(ring.field(), ring.nvars(), std::move(gens), order);
  Report r;
  r.body["command"] = "gb";
  r.body["ring"] = ring_summary(ring);
  r.body["order"] = order.name();
  r.body["basis"] = poly_list(ring, i.basis(gb_options()));
  return r;
}

Report cmd_multiplicity() {
  auto ring = load_ring();
  Report r;
  r.body["command"] = "multiplicity";
  r.body["ring"] = ring_summary(ring);
  r.body["dimension"] = krull_dimension(ring, gb_options());
  r.body["multiplicity"] = multiplicity(ring, gb_options()).get_str();
  return r;
}

void add_common(CLI::App* sub, bool ring) {
  if (ring) sub->add_option("--ring", common.ring_path, "ring presentation file (JSON)");
  sub->add_option("--max-order", common.max_order, "largest operator order");
  sub->add_option("--max-level", common.max_level, "largest Frobenius level e");
  sub->add_option("--budget", common.budget, "S-pair budget for Groebner computations");
  sub->add_option("--max-box", common.max_box, "largest exponent box for Frobenius linear algebra");
  sub->add_option("--out", common.out, "write the report to this path");
  sub->add_option("--format", common.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diffsig: differential operators, differential powers and signatures of graded algebras"};
  app.require_subcommand(1);
  std::function<Report()> action;

  auto sub = [&](const char* name, const char* help, bool ring, Report (*fn)()) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, ring);
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  sub("signature", "free ranks of P^0..P^N and signature ratios", true, cmd_signature);
  sub("free-rank", "free rank of P^n with unitary witnesses", true, cmd_free_rank)
      ->add_option("--order", args.order, "operator order n");
  sub("operators", "module generators of the order-n operators", true, cmd_operators)
      ->add_option("--order", args.order, "operator order n");
  auto* dp = sub("diff-power", "generators of the differential power J^<n>", true, cmd_diff_power);
  dp->add_option("--ideal", args.ideal, "comma-separated generators (default: m)");
  dp->add_option("--n", args.n, "n");
  dp->add_option("--method", args.method, "auto, linear or colon");
  sub("diff-core", "intersection of J^<1>..J^<N>", true, cmd_diff_core)
      ->add_option("--ideal", args.ideal, "comma-separated generators (default: m)");
  sub("dsimple-witness", "operator sending an element to a unit", true, cmd_dsimple_witness)
      ->add_option("--element", args.element, "element h of R");
  sub("degree-bound", "graded upper bound e*alpha^d", true, cmd_degree_bound);
  auto* fp = sub("frobenius-power", "generators of J^{F<q>}", true, cmd_frobenius_power);
  fp->add_option("--ideal", args.ideal, "comma-separated generators (default: m)");
  fp->add_option("--level", args.level, "e, with q = p^e");
  sub("f-signature", "F-signature sequence for e = 1..E", true, cmd_f_signature);
  auto* t = sub("toric", "toric differential signature and F-signature of a cone", false, cmd_toric);
  t->add_option("--rays", args.rays, "JSON list of ray generators");
  t->add_option("--facets", args.facets, "JSON list of facet forms");
  t->add_option("--cone", args.cone_file, "cone JSON file");
  t->add_option("--seed", args.seed, "triangulation seed");
  auto* tf = sub("toric-f", "F-signature of K[N^r ∩ L]", false, cmd_toric_f);
  tf->add_option("--lattice-basis", args.lattice_basis, "JSON list of basis vectors of L");
  tf->add_option("--subspace", args.subspace_file, "subspace JSON file");
  tf->add_option("--count", args.counts, "scales n for the lattice-point counting oracle");
  tf->add_option("--seed", args.seed, "triangulation seed");
  auto* f = sub("formula", "closed-form differential signatures", false, cmd_formula);
  f->add_option("--kind", args.kind, "determinantal, symmetric, pfaffian, segre, veronese, finite-group, quadric, grassmannian-2-4")
      ->required();
  f->add_option("--params", args.params, "comma-separated integer parameters");
  auto* sy = sub("symbolic", "symbolic power by elimination", true, cmd_symbolic);
  sy->add_option("--ideal", args.ideal, "comma-separated generators");
  sy->add_option("--n", args.n, "n");
  auto* g = sub("gb", "reduced Groebner basis of an ideal plus the relations", true, cmd_gb);
  g->add_option("--ideal", args.ideal, "comma-separated generators");
  g->add_option("--term-order", args.order_name, "degrevlex or lex");
  sub("multiplicity", "Krull dimension and multiplicity", true, cmd_multiplicity);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    Report report = action();
    cli::Format fmt = common.format == "json"  ? cli::Format::Json
                      : common.format == "csv" ? cli::Format::Csv
                                               : cli::Format::Table;
    std::string text = cli::render(report, fmt);
    if (common.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(common.out, std::ios::binary);
      if (!out) throw DomainError("cannot write " + common.out);
      out << text;
      if (!out) throw DomainError("cannot write " + common.out);
    }
    return 0;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
