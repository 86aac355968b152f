#include "cli.hpp"

#include <fusionring/catalog.hpp>
#include <fusionring/criteria.hpp>
#include <fusionring/errors.hpp>
#include <fusionring/group.hpp>
#include <fusionring/integrality.hpp>
#include <fusionring/io.hpp>
#include <fusionring/spectra.hpp>
#include <fusionring/tuples.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace fusionring::cli {

namespace {

using json = nlohmann::ordered_json;

// Thrown for bad input or usage; mapped to exit code 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kCriteria = {"axioms", "schur",         "lpw",         "lpw-general",
                                            "isaacs", "strong-isaacs", "consistency", "all"};

struct RunConfig {
  unsigned precision = kDefaultPrecisionBits;
  int tol_exp = -40;
  int nmax = 3;
  std::vector<Rational> s_values = {{0, 1}, {1, 2}, {1, 1}};
  std::string criterion = "all";
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> maxdeg;

  Settings settings() const {
    Settings st;
    st.precision_bits = precision;
    st.tolerance_exp10 = tol_exp;
    st.seed = seed;
    return st;
  }
};

// Raw option values before validation.
struct RawOptions {
  std::optional<unsigned> precision;
  int tol_exp = -40;
  int nmax = 3;
  std::string s_list = "0,1/2,1";
  std::string criterion = "all";
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> maxdeg;
};

unsigned resolve_precision(const std::optional<unsigned>& flag) {
  unsigned bits = kDefaultPrecisionBits;
  if (flag) {
    bits = *flag;
  } else if (const char* env = std::getenv("FUSIONRING_PRECISION"); env && *env) {
    try {
      std::size_t used = 0;
      const long v = std::stol(env, &used);
      if (used != std::string(env).size() || v <= 0) {
        throw std::invalid_argument("bad");
      }
      bits = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("FUSIONRING_PRECISION is not a positive integer: ") + env);
    }
  }
  if (bits < kMinPrecisionBits || bits > 65536) {
    throw UsageError("precision must be between " + std::to_string(kMinPrecisionBits) +
                     " and 65536 bits");
  }
  return bits;
}

RunConfig make_config(const RawOptions& raw) {
  RunConfig cfg;
  cfg.precision = resolve_precision(raw.precision);
  if (raw.tol_exp > -16) {
    throw UsageError("--tol exponent must be <= -16");
  }
  cfg.tol_exp = raw.tol_exp;
  if (raw.nmax < 3 || raw.nmax > 6) {
    throw UsageError("--n must lie in [3, 6]");
  }
  cfg.nmax = raw.nmax;
  cfg.s_values.clear();
  std::stringstream ss(raw.s_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      cfg.s_values.push_back(Rational::parse(item));
    } catch (const std::exception& e) {
      throw UsageError("invalid --s entry '" + item + "': " + e.what());
    }
  }
  if (cfg.s_values.empty()) {
    throw UsageError("--s needs at least one value");
  }
  cfg.criterion = raw.criterion;
  cfg.format = raw.format;
  cfg.seed = raw.seed;
  if (raw.maxdeg && (*raw.maxdeg < 1 || *raw.maxdeg > 64)) {
    throw UsageError("--maxdeg must lie in [1, 64]");
  }
  cfg.maxdeg = raw.maxdeg;
  return cfg;
}

FusionRing load_ring(const std::string& source) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) {
    try {
      return catalog(source.substr(prefix.size()));
    } catch (const std::out_of_range&) {
      throw UsageError("unknown catalog ring '" + source.substr(prefix.size()) +
                       "' (see 'fusionring catalog list')");
    }
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) {
    throw UsageError("cannot open '" + source + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    FusionRing ring = parse_ring_unvalidated(buffer.str());
    if (ring.name().empty()) {
      ring = ring.renamed(std::filesystem::path(source).stem().string());
    }
    return ring;
  } catch (const ParseError& e) {
    throw UsageError(source + ": " + e.what());
  } catch (const StructuralError& e) {
    throw UsageError(source + ": " + e.what());
  }
}

CriterionReport axioms_report(const FusionRing& ring, const std::vector<AxiomViolation>& violations,
                              const Settings& settings) {
  CriterionReport report = make_report(ring.name(), "axioms", settings);
  for (const auto& v : violations) {
    report.witnesses.push_back({to_long(v.indices), to_string(v.kind), "-1", v.detail});
  }
  report.parameters.emplace_back("rank", std::to_string(ring.rank()));
  report.settle();
  return report;
}

std::string chop(const Complex& z, const Real& tol, int digits) {
  Complex c = z;
  if (boost::multiprecision::abs(c.re) < tol) {
    c.re = 0;
  }
  if (boost::multiprecision::abs(c.im) < tol) {
    c.im = 0;
  }
  return to_decimal(c, digits);
}

Verdict combine(const std::vector<CriterionReport>& reports) {
  Verdict v = Verdict::Pass;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) {
      return Verdict::Fail;
    }
    if (r.verdict == Verdict::Inconclusive) {
      v = Verdict::Inconclusive;
    }
  }
  return v;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return kExitPass;
    case Verdict::Fail:
      return kExitFail;
    case Verdict::Inconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

std::string upper(const std::string& s) {
  std::string u = s;
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
  return u;
}

std::string index_text(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    s += (k ? "," : "") + std::to_string(v[k]);
  }
  return s + ")";
}

void print_text(std::ostream& out, const std::vector<CriterionReport>& reports, std::size_t limit = 10) {
  auto list = [&](const char* label, const std::vector<Witness>& ws) {
    for (std::size_t k = 0; k < ws.size() && k < limit; ++k) {
      const Witness& w = ws[k];
      out << "    " << label << " " << index_text(w.indices) << ": value " << w.value << ", margin "
          << w.margin;
      if (!w.detail.empty()) {
        out << "; " << w.detail;
      }
      out << '\n';
    }
    if (ws.size() > limit) {
      out << "    ... and " << ws.size() - limit << " more\n";
    }
  };
  for (const auto& r : reports) {
    out << upper(to_string(r.verdict)) << "  " << r.criterion;
    if (!r.parameters.empty()) {
      out << "  [";
      for (std::size_t k = 0; k < r.parameters.size(); ++k) {
        out << (k ? ", " : "") << r.parameters[k].first << "=" << r.parameters[k].second;
      }
      out << "]";
    }
    out << '\n';
    list("witness", r.witnesses);
    list("unresolved", r.unresolved);
    for (const auto& n : r.notes) {
      out << "    note: " << n << '\n';
    }
  }
}

void emit(std::ostream& out, const RunConfig& cfg, const FusionRing& ring,
          const std::vector<CriterionReport>& reports) {
  if (cfg.format == "json") {
    out << report_json(reports);
    return;
  }
  out << "ring " << ring.name() << " (rank " << ring.rank() << ", "
      << (ring.is_commutative() ? "commutative" : "noncommutative") << "), precision "
      << cfg.precision << " bits, tolerance 1e" << cfg.tol_exp << '\n';
  print_text(out, reports);
  out << "overall: " << upper(to_string(combine(reports))) << '\n';
}

void add_residual(std::vector<CriterionReport>& reports, const FusionRing& ring,
                  const ResidualReport& rr, const Settings& settings) {
  reports.push_back(residual_report(ring.name(), rr, settings.tolerance(), settings));
}

void consistency_reports(std::vector<CriterionReport>& reports, const FusionRing& ring,
                         const Spectrum& spectrum, const RunConfig& cfg) {
  const Settings st = cfg.settings();
  for (int n = 3; n <= std::min(cfg.nmax, 4); ++n) {
    add_residual(reports, ring, In_recursion_check(ring, spectrum, n, st), st);
  }
  const DualRing dr = dual_ring(ring, spectrum, st);
  const std::size_t k = dr.size;
  add_residual(reports, ring, {"dual-ring-commutativity", dr.commutativity_residual, {}, k * k * k}, st);
  add_residual(reports, ring, {"dual-ring-associativity", dr.associativity_residual, {}, k * k * k * k}, st);
  add_residual(reports, ring, {"dual-ring-unit", dr.unit_residual, {}, 2 * k * k}, st);
  add_residual(reports, ring, orthogonality_check(ring, spectrum), st);
  add_residual(reports, ring, trace_expansion_check(spectrum), st);
  for (const Rational& s : cfg.s_values) {
    for (int n = 3; n <= std::min(cfg.nmax, 4); ++n) {
      add_residual(reports, ring, isaacs_equivalence_check(ring, spectrum, s, n, st), st);
    }
  }
}

int run_check(const std::string& source, const RunConfig& cfg, std::ostream& out) {
  if (std::find(kCriteria.begin(), kCriteria.end(), cfg.criterion) == kCriteria.end()) {
    throw UsageError("unknown criterion '" + cfg.criterion + "'");
  }
  if (cfg.format != "text" && cfg.format != "json") {
    throw UsageError("--format must be text or json");
  }
  const FusionRing ring = load_ring(source);
  const Settings st = cfg.settings();
  PrecisionScope scope(cfg.precision);
  const std::string& crit = cfg.criterion;
  const bool all = crit == "all";
  const bool commutative = ring.is_commutative();

  std::vector<AxiomViolation> violations;
  try {
    violations = validate(ring);
  } catch (const StructuralError& e) {
    throw UsageError(e.what());
  }
  std::vector<CriterionReport> reports;
  if (all || crit == "axioms" || !violations.empty()) {
    reports.push_back(axioms_report(ring, violations, st));
  }
  if (!violations.empty()) {
    if (crit != "axioms") {
      reports.back().notes.push_back("remaining criteria skipped: the input is not a fusion ring");
    }
    emit(out, cfg, ring, reports);
    return kExitFail;
  }
  if (crit == "axioms") {
    emit(out, cfg, ring, reports);
    return exit_code(combine(reports));
  }

  if (!commutative && (crit == "isaacs" || crit == "strong-isaacs" || crit == "consistency")) {
    throw UsageError("criterion '" + crit + "' requires a commutative ring");
  }

  const FpData fp = fp_dimensions(ring, st);
  if (all || crit == "schur") {
    reports.push_back(schur_inequalities(ring, fp.dims, st));
  }

  const bool want_lpw = all || crit == "lpw";
  const bool want_general = crit == "lpw-general" || (want_lpw && !commutative);
  if (want_general) {
    const IrrepSet irreps = decompose_regular(ring, st);
    for (int n = 3; n <= cfg.nmax; ++n) {
      reports.push_back(lpw_general(ring, irreps, fp.dims, n, st));
      if (crit != "lpw-general") {
        reports.back().notes.push_back(
            "ring is noncommutative: characters do not exist, the general form was searched");
      }
    }
  }
  if (!commutative) {
    if (all) {
      reports.front().notes.push_back(
          "integrality and consistency criteria omitted: they need a commutative ring");
    }
    emit(out, cfg, ring, reports);
    return exit_code(combine(reports));
  }

  const Spectrum spectrum = character_table(ring, st);
  if (want_lpw) {
    for (int n = 3; n <= cfg.nmax; ++n) {
      reports.push_back(lpw_positivity(ring, spectrum, n, st));
    }
  }
  if (all || crit == "isaacs") {
    for (const Rational& s : cfg.s_values) {
      reports.push_back(isaacs_check(ring, spectrum, s, st, cfg.maxdeg));
      if (reports.back().verdict == Verdict::Pass && Rational{1, 2} <= s) {
        reports.push_back(frobenius_type_check(ring, spectrum, s, st));
      }
    }
  }
  if (all || crit == "strong-isaacs") {
    reports.push_back(strongly_isaacs_check(ring, spectrum, cfg.nmax, st, cfg.maxdeg));
  }
  if (all || crit == "consistency") {
    consistency_reports(reports, ring, spectrum, cfg);
  }
  emit(out, cfg, ring, reports);
  return exit_code(combine(reports));
}

int run_spectra(const std::string& source, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != "text" && cfg.format != "json") {
    throw UsageError("--format must be text or json");
  }
  const FusionRing ring = load_ring(source);
  try {
    require_valid(ring);
  } catch (const AxiomError& e) {
    throw UsageError(std::string("input is not a fusion ring: ") + e.what());
  }
  const Settings st = cfg.settings();
  PrecisionScope scope(cfg.precision);
  const Real tol = st.tolerance();
  const int digits = st.digits();

  json doc;
  doc["format"] = kReportFormatVersion;
  doc["ring"] = ring.name();
  doc["rank"] = ring.rank();
  doc["commutative"] = ring.is_commutative();
  doc["precision_bits"] = cfg.precision;

  std::vector<std::string> codegrees;
  if (ring.is_commutative()) {
    const Spectrum sp = character_table(ring, st);
    doc["fpdim"] = to_decimal(sp.fpdim, digits);
    doc["dims"] = json::array();
    for (const auto& d : sp.dims) {
      doc["dims"].push_back(to_decimal(d, digits));
    }
    doc["characters"] = json::array();
    for (std::size_t s = 0; s < sp.size(); ++s) {
      json c;
      c["codegree"] = to_decimal(sp.codegrees[s], digits);
      c["conjugate"] = sp.conj[s];
      c["values"] = json::array();
      for (const auto& z : sp.chars[s]) {
        c["values"].push_back(chop(z, tol, digits));
      }
      doc["characters"].push_back(c);
      codegrees.push_back(to_decimal(sp.codegrees[s], digits));
    }
  } else {
    const FpData fp = fp_dimensions(ring, st);
    const IrrepSet irreps = decompose_regular(ring, st);
    doc["fpdim"] = to_decimal(fp.fpdim, digits);
    doc["dims"] = json::array();
    for (const auto& d : fp.dims) {
      doc["dims"].push_back(to_decimal(d, digits));
    }
    doc["irreps"] = json::array();
    for (const auto& irrep : irreps.irreps) {
      json c;
      c["dim"] = irrep.dim;
      c["codegree"] = to_decimal(irrep.codegree, digits);
      c["traces"] = json::array();
      for (const auto& z : irrep.trace_vector()) {
        c["traces"].push_back(chop(z, tol, digits));
      }
      doc["irreps"].push_back(c);
      codegrees.push_back(to_decimal(irrep.codegree, digits));
    }
  }
  doc["codegrees"] = codegrees;

  if (cfg.format == "json") {
    out << doc.dump(2) << '\n';
    return kExitPass;
  }
  out << "ring " << ring.name() << " (rank " << ring.rank() << ", "
      << (ring.is_commutative() ? "commutative" : "noncommutative") << ")\n";
  out << "fpdim " << doc["fpdim"].get<std::string>() << '\n';
  for (std::size_t i = 0; i < doc["dims"].size(); ++i) {
    out << "d_" << i << " = " << doc["dims"][i].get<std::string>() << '\n';
  }
  if (ring.is_commutative()) {
    for (std::size_t s = 0; s < doc["characters"].size(); ++s) {
      const json& c = doc["characters"][s];
      out << "rho_" << s << ": codegree " << c["codegree"].get<std::string>() << ", conjugate rho_"
          << c["conjugate"].get<std::size_t>() << '\n';
      for (std::size_t i = 0; i < c["values"].size(); ++i) {
        out << "    rho_" << s << "(b_" << i << ") = " << c["values"][i].get<std::string>() << '\n';
      }
    }
  } else {
    for (std::size_t s = 0; s < doc["irreps"].size(); ++s) {
      const json& c = doc["irreps"][s];
      out << "irrep " << s << ": dim " << c["dim"].get<std::size_t>() << ", codegree "
          << c["codegree"].get<std::string>() << '\n';
    }
  }
  return kExitPass;
}

int run_catalog(const std::string& action, const std::string& name, std::ostream& out) {
  if (action == "list") {
    for (const auto& n : catalog_names()) {
      const FusionRing ring = catalog(n);
      out << n << "  rank " << ring.rank() << (ring.is_commutative() ? "" : "  noncommutative") << '\n';
    }
    out << "cyclic_<n>  rank n, for 1 <= n <= 32\n";
    return kExitPass;
  }
  if (action == "show") {
    if (name.empty()) {
      throw UsageError("catalog show needs a ring name");
    }
    try {
      out << serialize_ring(catalog(name));
    } catch (const std::out_of_range&) {
      throw UsageError("unknown catalog ring '" + name + "'");
    }
    return kExitPass;
  }
  throw UsageError("catalog action must be 'list' or 'show'");
}

int run_oracle(const std::string& which, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != "text" && cfg.format != "json") {
    throw UsageError("--format must be text or json");
  }
  const Settings st = cfg.settings();
  PrecisionScope scope(cfg.precision);
  RepGOracle oracle = [&] {
    if (which == "s3") {
      return s3_oracle();
    }
    const std::string prefix = "cyclic_";
    if (which.rfind(prefix, 0) == 0) {
      try {
        std::size_t used = 0;
        const auto n = std::stoul(which.substr(prefix.size()), &used);
        if (used + prefix.size() == which.size() && n >= 1 && n <= kMaxPermDegree) {
          return cyclic_oracle(n);
        }
      } catch (const std::exception&) {
      }
    }
    throw UsageError("unknown oracle '" + which + "' (expected s3 or cyclic_<n>, n <= " +
                     std::to_string(kMaxPermDegree) + ")");
  }();
  const Spectrum spectrum = character_table(oracle.ring, st);
  std::vector<int> ns;
  for (int n = 3; n <= std::max(cfg.nmax, 4); ++n) {
    ns.push_back(n);
  }
  std::vector<CriterionReport> reports;
  for (const auto& rr : crosscheck_repG(oracle, spectrum, ns, st)) {
    const bool counting = rr.check.rfind("orbit-divisibility", 0) == 0;
    reports.push_back(residual_report(oracle.ring.name(), rr, counting ? Real(0.5) : st.tolerance(), st));
  }
  reports.front().notes.push_back("group order " + std::to_string(oracle.group.order()) + ", " +
                                  std::to_string(oracle.group.classes.size()) + " conjugacy classes");
  emit(out, cfg, oracle.ring, reports);
  return exit_code(combine(reports));
}

void add_numeric_options(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--precision", raw.precision, "working precision in bits (default 256)");
  cmd->add_option("--tol", raw.tol_exp, "tolerance exponent: threshold 10^EXP (default -40)");
  cmd->add_option("--format", raw.format, "output format: text or json");
  cmd->add_option("--seed", raw.seed, "random seed for spectral splitting and searches");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Necessary-condition checker for categorifiability of fusion rings", "fusionring"};
  app.require_subcommand(1);

  RawOptions raw;
  std::string source;
  std::string catalog_action;
  std::string catalog_name;
  std::string oracle_name;

  CLI::App* check = app.add_subcommand("check", "run categorification criteria on a ring");
  check->add_option("ring", source, "path to a .fring file or catalog:<name>")->required();
  check->add_option("--criterion", raw.criterion,
                    "axioms|schur|lpw|lpw-general|isaacs|strong-isaacs|consistency|all");
  check->add_option("--n", raw.nmax, "largest tuple size n, in [3, 6] (default 3)");
  check->add_option("--s", raw.s_list, "comma-separated exponents s (default 0,1/2,1)");
  check->add_option("--maxdeg", raw.maxdeg, "maximal degree for the integer-relation search");
  add_numeric_options(check, raw);

  CLI::App* spectra = app.add_subcommand("spectra", "print dimensions, characters and codegrees");
  spectra->add_option("ring", source, "path to a .fring file or catalog:<name>")->required();
  add_numeric_options(spectra, raw);

  CLI::App* cat = app.add_subcommand("catalog", "list or show built-in rings");
  cat->add_option("action", catalog_action, "list | show")->required();
  cat->add_option("name", catalog_name, "ring name for 'show'");

  CLI::App* oracle = app.add_subcommand("oracle", "cross-check J invariants against a permutation group");
  oracle->add_option("group", oracle_name, "s3 | cyclic_<n>")->required();
  oracle->add_option("--n", raw.nmax, "largest tuple size, in [3, 6] (default 4)");
  add_numeric_options(oracle, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitPass;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*check) {
      return run_check(source, make_config(raw), out);
    }
    if (*spectra) {
      return run_spectra(source, make_config(raw), out);
    }
    if (*cat) {
      return run_catalog(catalog_action, catalog_name, out);
    }
    RawOptions oracle_raw = raw;
    if (oracle->count("--n") == 0) {
      oracle_raw.nmax = 4;
    }
    return run_oracle(oracle_name, make_config(oracle_raw), out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << " (try a higher --precision)\n";
    return kExitInconclusive;
  }
}

}  // namespace fusionring::cli
