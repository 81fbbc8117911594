#include "support.hpp"

#include "diffsig/linalg.hpp"

namespace diffsig::testing {

std::size_t free_rank_oracle(const RingPresentation& ring, unsigned n) {
  auto ops = operators_of_order(ring, n);
  if (ops.empty()) return 0;
  EchelonBasis basis(ring.field(), ops.front().entries.size());
  for (const auto& op : ops) {
    SparseRow row;
    for (std::size_t i = 0; i < op.entries.size(); ++i) {
      FieldElement c = op.entries[i].constant_term();
      if (!c.is_zero()) row.emplace_back(static_cast<std::uint32_t>(i), c);
    }
    basis.insert(row);
  }
  return basis.rank();
}

}  // namespace diffsig::testing
