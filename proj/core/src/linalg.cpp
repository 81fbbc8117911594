#include "diffsig/linalg.hpp"

#include <algorithm>

namespace diffsig {

SparseRow axpy(const SparseRow& row, const FieldElement& c, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || other[j].first < row[i].first) {
      out.emplace_back(other[j].first, other[j].second * c);
      ++j;
    } else {
      FieldElement v = row[i].second + other[j].second * c;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

EchelonBasis::EchelonBasis(Field field, std::size_t ncols)
    : field_(field), ncols_(ncols), pivot_row_(ncols, -1) {}

SparseRow EchelonBasis::reduce(SparseRow row) const {
  std::size_t pos = 0;
  while (pos < row.size()) {
    long r = pivot_row_[row[pos].first];
    if (r < 0) {
      ++pos;
      continue;
    }
    // Entries before `pos` are untouched: stored rows start at their pivot.
    FieldElement c = -row[pos].second;
    SparseRow head(row.begin(), row.begin() + static_cast<long>(pos));
    SparseRow tail(row.begin() + static_cast<long>(pos), row.end());
    SparseRow reduced = axpy(tail, c, rows_[static_cast<std::size_t>(r)]);
    head.insert(head.end(), reduced.begin(), reduced.end());
    row = std::move(head);
  }
  return row;
}

bool EchelonBasis::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  FieldElement inv = row.front().second.inverse();
  for (auto& e : row) e.second *= inv;
  pivot_row_[row.front().first] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

std::vector<SparseRow> EchelonBasis::reduced() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].front().first < rows_[b].front().first; });
  std::vector<SparseRow> out(order.size());
  std::vector<long> where(ncols_, -1);
  // Back substitution from the last pivot up: each row only needs the rows
  // with larger pivots, which are already fully reduced.
  for (std::size_t k = order.size(); k-- > 0;) {
    SparseRow row = rows_[order[k]];
    std::size_t pos = 1;
    while (pos < row.size()) {
      long r = where[row[pos].first];
      if (r < 0) {
        ++pos;
        continue;
      }
      FieldElement c = -row[pos].second;
      SparseRow head(row.begin(), row.begin() + static_cast<long>(pos));
      SparseRow tail(row.begin() + static_cast<long>(pos), row.end());
      SparseRow red = axpy(tail, c, out[static_cast<std::size_t>(r)]);
      head.insert(head.end(), red.begin(), red.end());
      row = std::move(head);
    }
    where[row.front().first] = static_cast<long>(k);
    out[k] = std::move(row);
  }
  return out;
}

std::vector<SparseRow> EchelonBasis::nullspace() const {
  std::vector<SparseRow> rref = reduced();
  // For each free column f: v_f = 1 and v_p = -R[p][f] for every pivot p.
  std::vector<std::vector<std::pair<std::uint32_t, FieldElement>>> by_free(ncols_);
  for (const auto& row : rref) {
    std::uint32_t p = row.front().first;
    for (std::size_t i = 1; i < row.size(); ++i) by_free[row[i].first].emplace_back(p, -row[i].second);
  }
  std::vector<SparseRow> out;
  for (std::uint32_t f = 0; f < ncols_; ++f) {
    if (pivot_row_[f] >= 0) continue;
    SparseRow v = std::move(by_free[f]);
    v.emplace_back(f, field_.one());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank_of(const Field& field, std::size_t ncols, const std::vector<SparseRow>& rows) {
  EchelonBasis e(field, ncols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
  // Bareiss elimination keeps every intermediate entry integral.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

mpq_class determinant(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[k], m[piv]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      mpq_class f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

}  // namespace diffsig
