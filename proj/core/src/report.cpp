#include "fusionring/report.hpp"

#include <algorithm>

namespace fusionring {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

void CriterionReport::settle() {
  if (!witnesses.empty()) {
    verdict = Verdict::Fail;
  } else if (!unresolved.empty()) {
    verdict = Verdict::Inconclusive;
  } else {
    verdict = Verdict::Pass;
  }
}

Real Settings::tolerance() const {
  if (tolerance_exp10) {
    return boost::multiprecision::pow(Real(10), Real(*tolerance_exp10));
  }
  return default_tolerance(precision_bits);
}

std::string Settings::tolerance_string() const {
  if (tolerance_exp10) {
    return "1e" + std::to_string(*tolerance_exp10);
  }
  return "2^-" + std::to_string(precision_bits / 2);
}

int Settings::digits() const {
  int d = decimal_digits_for(precision_bits);
  if (tolerance_exp10) {
    d = std::min(d, std::max(20, -*tolerance_exp10 + 5));
  } else {
    d = std::min(d, static_cast<int>(precision_bits * 0.30103 / 2) + 5);
  }
  return std::max(d, 15);
}

CriterionReport make_report(const std::string& ring, const std::string& criterion,
                            const Settings& settings) {
  CriterionReport r;
  r.ring = ring;
  r.criterion = criterion;
  r.precision_bits = settings.precision_bits;
  r.tolerance = settings.tolerance_string();
  return r;
}

CriterionReport residual_report(const std::string& ring, const ResidualReport& residual,
                                const Real& threshold, const Settings& settings) {
  CriterionReport r = make_report(ring, residual.check, settings);
  r.parameters.emplace_back("threshold", to_decimal(threshold, 6));
  r.parameters.emplace_back("tuples", std::to_string(residual.evaluated));
  Witness w{residual.worst, to_decimal(residual.max_residual, settings.digits()),
            to_decimal(Real(threshold - residual.max_residual), 6), "largest residual"};
  if (residual.max_residual < threshold) {
    std::string note = "max residual " + to_decimal(residual.max_residual, 6);
    if (!residual.worst.empty()) {
      note += " at tuple (";
      for (std::size_t k = 0; k < residual.worst.size(); ++k) {
        note += (k ? "," : "") + std::to_string(residual.worst[k]);
      }
      note += ")";
    }
    r.notes.push_back(note);
  } else {
    r.witnesses.push_back(std::move(w));
  }
  r.settle();
  return r;
}

}  // namespace fusionring
