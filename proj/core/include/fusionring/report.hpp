#pragma once

#include "fusionring/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fusionring {

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

/// Evidence for one checked instance: the index tuple, the computed value
/// and its signed distance to the threshold (negative = violated).
struct Witness {
  std::vector<long> indices;
  std::string value;
  std::string margin;
  std::string detail;
};

struct CriterionReport {
  std::string ring;
  std::string criterion;
  Verdict verdict = Verdict::Pass;
  std::vector<Witness> witnesses;   // violations; non-empty iff verdict is Fail
  std::vector<Witness> unresolved;  // instances the search could not decide
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, std::string>> parameters;
  unsigned precision_bits = kDefaultPrecisionBits;
  std::string tolerance;

  /// Sets the verdict from the witness lists: any violation fails, otherwise
  /// any unresolved instance makes the report inconclusive.
  void settle();
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'f00d'2020'0001ULL;

/// Numerical settings shared by all criteria.
struct Settings {
  unsigned precision_bits = kDefaultPrecisionBits;
  /// When set, the tolerance is 10^tolerance_exp10; otherwise 2^{-bits/2}.
  std::optional<int> tolerance_exp10;
  std::uint64_t seed = kDefaultSeed;

  /// Must be called inside a PrecisionScope for precision_bits.
  Real tolerance() const;
  std::string tolerance_string() const;
  /// Significant digits used for values in reports.
  int digits() const;
};

/// Maximum residual of an identity checked over many index tuples.
struct ResidualReport {
  std::string check;
  Real max_residual{0};
  std::vector<long> worst;
  std::size_t evaluated = 0;
};

/// Pass iff max_residual < threshold; the worst tuple is echoed either way.
CriterionReport residual_report(const std::string& ring, const ResidualReport& residual,
                                const Real& threshold, const Settings& settings);

CriterionReport make_report(const std::string& ring, const std::string& criterion,
                            const Settings& settings);

}  // namespace fusionring
