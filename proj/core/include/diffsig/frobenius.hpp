#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffsig/principal_parts.hpp"

namespace diffsig {

/// q = p^e with e >= 1.
struct FrobeniusLevel {
  std::uint32_t p = 2;
  unsigned e = 1;
  std::uint64_t q = 2;

  static FrobeniusLevel make(std::uint32_t p, unsigned e);
};

/// Size guard for the exponent box {lambda : lambda_j < q}, which has q^k
/// members. The default admits q <= 8 in up to four variables.
struct FrobeniusOptions {
  std::uint64_t max_box = 4096;
  GroebnerOptions groebner;
};

/// Presentation matrix of (R (x) R)/Delta^[q]: rows lambda in the box, columns
/// (mu, i) with mu in the box, entries (1/(nu-mu)!) d^(nu-mu) f_i truncated
/// to the box. `order` holds q - 1.
JacobiTaylorMatrix frobenius_jacobi_taylor(const RingPresentation& ring, const FrobeniusLevel& level,
                                           const FrobeniusOptions& options = {});

/// Graded kernel engine over the q-box.
GradedKernel frobenius_kernel(const RingPresentation& ring, const FrobeniusLevel& level,
                              const FrobeniusOptions& options = {});

/// J^{F<q>} from the colon formula with Delta^[q].
Ideal fdiff_power_ideal(const Ideal& j, const FrobeniusLevel& level, const RingPresentation& ring,
                        const FrobeniusOptions& options = {});

/// m^{F<q>} by graded linear algebra over the q-box.
Ideal fdiff_power_of_maximal(const RingPresentation& ring, const FrobeniusLevel& level,
                             const FrobeniusOptions& options = {});

/// (m^[q] :_S f^(q-1)) + (f) for a single relation f.
Ideal fedder_hypersurface_oracle(const RingPresentation& ring, const FrobeniusLevel& level,
                                 const GroebnerOptions& options = {});

/// I_e = (m^[q] :_S (I^[q] :_S I)) + I, the splitting-ideal description that
/// holds for any presentation. Contains 1 exactly when R is not F-pure.
Ideal fedder_splitting_ideal(const RingPresentation& ring, const FrobeniusLevel& level,
                             const GroebnerOptions& options = {});

bool is_f_pure(const RingPresentation& ring, const GroebnerOptions& options = {});

/// m^[q] + relations.
Ideal frobenius_power_of_maximal(const RingPresentation& ring, std::uint64_t q);

struct FSignatureEntry {
  unsigned e = 0;
  std::size_t length = 0;        // length of R/I_e (0 when 1 lies in I_e)
  mpq_class ratio;               // length / p^(e d)
  bool unit_ideal = false;       // 1 in I_e
  std::size_t fdiff_length = 0;  // length of R/m^{F<q>}, always computed
};

struct FSignatureSequence {
  std::uint32_t p = 2;
  std::size_t dimension = 0;
  std::vector<FSignatureEntry> entries;
  /// Set when R is not F-pure: then every I_e is the unit ideal, while
  /// m^{F<q>} never is.
  std::optional<std::string> warning;
};

FSignatureSequence f_signature_sequence(const RingPresentation& ring, unsigned max_level,
                                        const FrobeniusOptions& options = {});

}  // namespace diffsig
