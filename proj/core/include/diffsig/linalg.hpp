#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "diffsig/field.hpp"

namespace diffsig {

/// Sparse vector over a field: (index, nonzero value) pairs, indices ascending.
using SparseRow = std::vector<std::pair<std::uint32_t, FieldElement>>;

/// row += c * other, keeping the result sparse and sorted.
SparseRow axpy(const SparseRow& row, const FieldElement& c, const SparseRow& other);

/// Incrementally built row-echelon basis. Each stored row is monic at its
/// pivot, the lowest index carrying a nonzero value.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t ncols);

  /// Remainder of `row` after eliminating every stored pivot.
  SparseRow reduce(SparseRow row) const;
  /// Adds `row` if independent of the stored rows; returns whether it was.
  bool insert(SparseRow row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  bool is_pivot(std::uint32_t col) const { return pivot_row_[col] >= 0; }

  /// Reduced row-echelon form: every pivot column is zero in every other row.
  /// Rows are returned in ascending pivot order.
  std::vector<SparseRow> reduced() const;

  /// Basis of {v : row . v = 0 for every stored row}, one vector per free column.
  std::vector<SparseRow> nullspace() const;

 private:
  Field field_;
  std::size_t ncols_;
  std::vector<SparseRow> rows_;
  std::vector<long> pivot_row_;
};

/// Rank of a list of sparse rows.
std::size_t rank_of(const Field& field, std::size_t ncols, const std::vector<SparseRow>& rows);

/// Dense determinant of a square rational matrix by fraction-free elimination.
mpz_class determinant(std::vector<std::vector<mpz_class>> m);
mpq_class determinant(std::vector<std::vector<mpq_class>> m);

}  // namespace diffsig
