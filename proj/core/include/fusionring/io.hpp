#pragma once

// The .fring text format (format = 1). One declaration per line, '#' starts
// a comment, whitespace inside a line is insignificant:
//
//   format = 1
//   ring fibonacci
//   rank = 2
//   unit = 0
//   dual = [0, 1]
//   N[1,1] = {0:1, 1:1}
//
// Products with a unit factor may be omitted and are filled in from the unit
// axiom. Any other omitted product, like `N[i,j] = {}`, is the zero product;
// the validator then reports which axioms that breaks.

#include "fusionring/report.hpp"
#include "fusionring/ring.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fusionring {

inline constexpr int kRingFormatVersion = 1;
inline constexpr int kReportFormatVersion = 1;
inline constexpr std::size_t kMaxParsedRank = 64;

/// Parses the text into a ring without checking the fusion axioms. Throws
/// ParseError for lexical problems, out-of-range indices and duplicates.
FusionRing parse_ring_unvalidated(std::string_view text);

/// parse_ring_unvalidated followed by validate(); throws AxiomError on
/// violated axioms.
FusionRing parse_ring(std::string_view text);

std::string serialize_ring(const FusionRing& ring);

/// JSON document {"format": 1, "reports": [...]} with one object per report.
std::string report_json(const std::vector<CriterionReport>& reports);
std::string report_json(const CriterionReport& report);

}  // namespace fusionring
