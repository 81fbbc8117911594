#pragma once

#include <gmpxx.h>

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace diffsig::cli {

using Json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

/// One command's result. `body` is the single source for every format:
/// scalars become "key: value" lines, string arrays become indented lists,
/// arrays of objects become aligned tables. CSV emits `csv_rows` (or the
/// scalar fields when it is empty) restricted to `csv_columns` if given.
struct Report {
  Json body = Json::object();
  std::string csv_rows;
  std::vector<std::string> csv_columns;
};

std::string render(const Report& report, Format format);

/// Decimal expansion rounded to `digits` places.
std::string decimal(const mpq_class& q, unsigned digits = 12);

}  // namespace diffsig::cli
