#pragma once

// Shared helpers for the unit tests: access to the fixture files and to the
// independently derived values in oracle/derived.json.

#include <fusionring/catalog.hpp>
#include <fusionring/io.hpp>
#include <fusionring/numeric.hpp>
#include <fusionring/spectra.hpp>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace fr_test {

using namespace fusionring;

inline std::string data_path(const std::string& name) {
  return std::string(FUSIONRING_TEST_DATA) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FusionRing load_fixture(const std::string& name) {
  return parse_ring(read_file(data_path(name)));
}

inline const nlohmann::json& oracle() {
  static const nlohmann::json doc = nlohmann::json::parse(read_file(FUSIONRING_ORACLE_FILE));
  return doc;
}

/// Parses a decimal string at the current working precision.
inline Real real(const std::string& s) { return Real(s); }

inline Complex complex_of(const nlohmann::json& pair) {
  return {real(pair[0].get<std::string>()), real(pair[1].get<std::string>())};
}

inline std::vector<Complex> oracle_row(const nlohmann::json& character) {
  std::vector<Complex> row;
  for (const auto& v : character["values"]) {
    row.push_back(complex_of(v));
  }
  return row;
}

inline Real distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Real m(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, Real(abs(a[i] - b[i])));
  }
  return m;
}

/// Index of the computed character equal to the oracle character, or
/// spectrum.size() if none matches within tol.
inline std::size_t match_character(const Spectrum& spectrum, const std::vector<Complex>& row,
                                   const Real& tol) {
  for (std::size_t s = 0; s < spectrum.size(); ++s) {
    if (distance(spectrum.chars[s], row) < tol) {
      return s;
    }
  }
  return spectrum.size();
}

/// Computed character index for each oracle character of the named ring.
inline std::vector<std::size_t> oracle_matching(const std::string& ring_name, const Spectrum& spectrum,
                                                const Real& tol) {
  std::vector<std::size_t> map;
  for (const auto& c : oracle()["rings"][ring_name]["characters"]) {
    const std::size_t s = match_character(spectrum, oracle_row(c), tol);
    REQUIRE_MESSAGE(s < spectrum.size(), "no computed character matches an oracle character of "
                                             << ring_name);
    map.push_back(s);
  }
  return map;
}

}  // namespace fr_test
