#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace diffsig::cli {

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_table(const Json& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

void render_table(std::ostringstream& out, const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& [k, _] : rows.front().items()) cols.push_back(k);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(r.contains(cols[c]) ? scalar(r[cols[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    out << "  ";
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << '\n';
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::string decimal(const mpq_class& q, unsigned digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class num = q.get_num() * scale * 2 + q.get_den() * (sgn(q) < 0 ? -1 : 1);
  mpz_class den = q.get_den() * 2;
  mpz_class r;
  mpz_tdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  bool negative = r < 0;
  if (negative) r = -r;
  std::string s = r.get_str();
  if (s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
  s.insert(s.size() - digits, ".");
  return (negative ? "-" : "") + s;
}

std::string render(const Report& report, Format format) {
  const Json& body = report.body;
  if (format == Format::Json) return body.dump(2) + "\n";

  std::ostringstream out;
  if (format == Format::Csv) {
    if (!report.csv_rows.empty() && body.contains(report.csv_rows)) {
      const Json& rows = body[report.csv_rows];
      std::vector<std::string> cols = report.csv_columns;
      if (cols.empty() && is_table(rows))
        for (const auto& [k, _] : rows.front().items()) cols.push_back(k);
      for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << csv_cell(cols[c]);
      out << '\n';
      for (const auto& r : rows) {
        for (std::size_t c = 0; c < cols.size(); ++c)
          out << (c ? "," : "") << csv_cell(r.contains(cols[c]) ? scalar(r[cols[c]]) : "");
        out << '\n';
      }
      return out.str();
    }
    out << "key,value\n";
    for (const auto& [k, v] : body.items()) {
      if (v.is_array()) {
        for (const auto& e : v)
          if (!e.is_structured()) out << csv_cell(k) << ',' << csv_cell(scalar(e)) << '\n';
      } else if (!v.is_object()) {
        out << csv_cell(k) << ',' << csv_cell(scalar(v)) << '\n';
      }
    }
    return out.str();
  }

  for (const auto& [k, v] : body.items()) {
    if (is_table(v)) {
      out << k << ":\n";
      render_table(out, v);
    } else if (v.is_array()) {
      out << k << ":" << (v.empty() ? " (none)" : "") << '\n';
      for (const auto& e : v) out << "  " << (e.is_array() ? e.dump() : scalar(e)) << '\n';
    } else if (v.is_object()) {
      out << k << ":\n";
      for (const auto& [k2, v2] : v.items()) out << "  " << k2 << " = " << scalar(v2) << '\n';
    } else {
      out << k << " = " << scalar(v) << '\n';
    }
  }
  return out.str();
}

}  // namespace diffsig::cli
