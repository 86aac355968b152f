#include "support.hpp"

#include <fusionring/criteria.hpp>
#include <fusionring/errors.hpp>

using namespace fusionring;
using fr_test::real;

namespace {

Settings settings256() {
  Settings st;
  st.tolerance_exp10 = -40;
  return st;
}

std::vector<std::string> commutative_catalog() {
  std::vector<std::string> out;
  for (const auto& name : catalog_names()) {
    if (catalog(name).is_commutative()) {
      out.push_back(name);
    }
  }
  out.push_back("cyclic_6");
  return out;
}

std::size_t row_matching(const Spectrum& sp, std::vector<long> values) {
  std::vector<Complex> row;
  for (long v : values) {
    row.emplace_back(Real(v));
  }
  return fr_test::match_character(sp, row, Real("1e-40"));
}

}  // namespace

TEST_CASE("Schur-type coefficient bounds hold on the catalog") {
  PrecisionScope scope(256);
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const FusionRing ring = catalog(name);
    const FpData fp = fp_dimensions(ring, settings256());
    const CriterionReport rep = schur_inequalities(ring, fp.dims, settings256());
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.witnesses.empty());
  }
}

TEST_CASE("Ising meets bound (iii) with zero margin") {
  PrecisionScope scope(256);
  const FusionRing ring = catalog("ising");
  const CriterionReport rep = schur_inequalities(ring, fp_dimensions(ring).dims, settings256());
  CHECK(rep.verdict == Verdict::Pass);
  bool found = false;
  for (const auto& n : rep.notes) {
    found = found || (n.rfind("(iii)", 0) == 0 && n.find("margin 0") != std::string::npos);
  }
  CHECK(found);
}

TEST_CASE("Schur bounds fail for inconsistent dimensions") {
  PrecisionScope scope(256);
  const FusionRing ring = catalog("fibonacci");
  // Pretend tau has dimension 1: tau^2 = 1 + tau then breaks (i) and (ii).
  const CriterionReport rep = schur_inequalities(ring, {Real(1), Real(1)}, settings256());
  CHECK(rep.verdict == Verdict::Fail);
  REQUIRE_FALSE(rep.witnesses.empty());
  CHECK(rep.witnesses[0].margin.front() == '-');
}

TEST_CASE("an inflated Fibonacci coefficient breaks (iii) against the original dimensions") {
  PrecisionScope scope(256);
  const FusionRing fib = catalog("fibonacci");
  const std::vector<Real> dims = fp_dimensions(fib, settings256()).dims;
  const CriterionReport rep = schur_inequalities(fib.with_entry(1, 1, 1, 3), dims, settings256());
  CHECK(rep.verdict == Verdict::Fail);
  bool found = false;
  for (const auto& w : rep.witnesses) {
    found = found || (w.detail.rfind("(iii)", 0) == 0 && w.indices == std::vector<long>{1, 1, 1});
  }
  CHECK(found);
  // with its own dimensions the inflated ring is consistent
  const FusionRing inflated = fib.with_entry(1, 1, 1, 3);
  CHECK(schur_inequalities(inflated, fp_dimensions(inflated).dims, settings256()).verdict ==
        Verdict::Pass);
}

TEST_CASE("I_n positivity on the catalog for n = 3, 4, 5") {
  PrecisionScope scope(256);
  for (const auto& name : commutative_catalog()) {
    const FusionRing ring = catalog(name);
    const Spectrum sp = character_table(ring, settings256());
    for (int n = 3; n <= 5; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      const CriterionReport rep = lpw_positivity(ring, sp, n, settings256());
      CHECK(rep.verdict == Verdict::Pass);
    }
  }
}

TEST_CASE("Rep(S3): I_3 over three copies of the transposition character vanishes") {
  PrecisionScope scope(256);
  const FusionRing ring = catalog("rep_s3");
  const Spectrum sp = character_table(ring, settings256());
  const std::size_t t = row_matching(sp, {1, -1, 0});
  REQUIRE(t < sp.size());
  const Complex v = invariant_In(ring, sp, {t, t, t});
  CHECK(abs(v) < Real("1e-40"));
}

TEST_CASE("n = 2 is orthogonality and n = 1 picks out the FP character") {
  PrecisionScope scope(256);
  const Real tol("1e-40");
  const FusionRing ring = catalog("fib_x_fib");
  const Spectrum sp = character_table(ring, settings256());
  for (std::size_t s = 0; s < sp.size(); ++s) {
    for (std::size_t t = 0; t < sp.size(); ++t) {
      const Complex v = invariant_In(ring, sp, {s, t});
      const Real expected = sp.conj[s] == t ? sp.codegrees[s] : Real(0);
      CHECK(abs(v - Complex(expected)) < tol);
    }
    // I_1(rho) = sum_i d_i rho(b_i) = fpdim if rho is FP, else 0
    const Complex one = invariant_In(ring, sp, {s});
    CHECK(abs(one - Complex(s == 0 ? sp.fpdim : Real(0))) < tol);
  }
}

TEST_CASE("the rank-3 counterexample fails I_3 positivity") {
  PrecisionScope scope(256);
  const FusionRing ring = fr_test::load_fixture("lpw_counterexample.fring");
  const Spectrum sp = character_table(ring, settings256());
  const CriterionReport rep = lpw_positivity(ring, sp, 3, settings256());
  CHECK(rep.verdict == Verdict::Fail);
  REQUIRE(rep.witnesses.size() == 1);
  const auto& o = fr_test::oracle()["lpw_counterexample"];
  const auto& w = rep.witnesses[0];
  std::vector<Index> idx(w.indices.begin(), w.indices.end());
  const Complex v = invariant_In(ring, sp, idx);
  CHECK(abs(v - Complex(real(o["I3_min"]))) < Real("1e-40"));
  CHECK(w.margin.front() == '-');
}

TEST_CASE("general positivity search") {
  PrecisionScope scope(256);
  SUBCASE("S3 group ring passes") {
    const FusionRing ring = catalog("group_s3");
    const IrrepSet set = decompose_regular(ring, settings256());
    const FpData fp = fp_dimensions(ring, settings256());
    const CriterionReport rep = lpw_general(ring, set, fp.dims, 3, settings256());
    CHECK(rep.verdict == Verdict::Pass);
    CHECK_FALSE(rep.notes.empty());
  }
  SUBCASE("the counterexample is found through one-dimensional irreps") {
    const FusionRing ring = fr_test::load_fixture("lpw_counterexample.fring");
    const Spectrum sp = character_table(ring, settings256());
    const CriterionReport rep = lpw_general(ring, irreps_from_characters(sp), sp.dims, 3, settings256());
    CHECK(rep.verdict == Verdict::Fail);
  }
  SUBCASE("a noncommutative counterexample: group_s3 tensor counterexample") {
    const FusionRing ring = tensor_product(catalog("group_s3"),
                                           fr_test::load_fixture("lpw_counterexample.fring"), "mix");
    const IrrepSet set = decompose_regular(ring, settings256());
    const FpData fp = fp_dimensions(ring, settings256());
    const CriterionReport rep = lpw_general(ring, set, fp.dims, 3, settings256(), {4, 32});
    CHECK(rep.verdict == Verdict::Fail);
  }
}

TEST_CASE("I_n recursion") {
  PrecisionScope scope(256);
  for (const auto& name : commutative_catalog()) {
    const FusionRing ring = catalog(name);
    const Spectrum sp = character_table(ring, settings256());
    for (int n = 3; n <= 4; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      const ResidualReport rr = In_recursion_check(ring, sp, n, settings256());
      CHECK(rr.max_residual < Real("1e-35"));
      CHECK(rr.evaluated == static_cast<std::size_t>(std::pow(sp.size(), n)));
    }
  }
  const FusionRing ring = catalog("fibonacci");
  CHECK_THROWS_AS(In_recursion_check(ring, character_table(ring), 2), std::invalid_argument);
}

TEST_CASE("dual ring axioms") {
  PrecisionScope scope(256);
  const Real tol("1e-35");
  for (const auto& name : commutative_catalog()) {
    CAPTURE(name);
    const FusionRing ring = catalog(name);
    const Spectrum sp = character_table(ring, settings256());
    const DualRing dr = dual_ring(ring, sp, settings256());
    CHECK(dr.commutativity_residual < tol);
    CHECK(dr.associativity_residual < tol);
    CHECK(dr.unit_residual < tol);
  }
}

TEST_CASE("cyclic_3 dual ring structure constants are 0 or 1") {
  PrecisionScope scope(256);
  const Real tol("1e-35");
  const FusionRing ring = catalog("cyclic_3");
  const Spectrum sp = character_table(ring, settings256());
  const DualRing dr = dual_ring(ring, sp, settings256());
  for (Index s = 0; s < 3; ++s) {
    for (Index t = 0; t < 3; ++t) {
      int ones = 0;
      for (Index u = 0; u < 3; ++u) {
        const Complex c = dr(s, t, u);
        const bool zero = abs(c) < tol;
        const bool one = abs(c - Complex(Real(1))) < tol;
        CHECK((zero || one));
        ones += one ? 1 : 0;
      }
      CHECK(ones == 1);  // characters of Z/3 multiply like the dual group
    }
  }
}

TEST_CASE("orthogonality and trace expansion residuals") {
  PrecisionScope scope(256);
  for (const auto& name : commutative_catalog()) {
    CAPTURE(name);
    const FusionRing ring = catalog(name);
    const Spectrum sp = character_table(ring, settings256());
    CHECK(orthogonality_check(ring, sp).max_residual < Real("1e-40"));
    CHECK(trace_expansion_check(sp).max_residual < Real("1e-40"));
  }
}

TEST_CASE("commutative-only criteria reject noncommutative rings") {
  PrecisionScope scope(256);
  const FusionRing g = catalog("group_s3");
  Spectrum fake = character_table(catalog("cyclic_6"));
  CHECK_THROWS_AS(invariant_In(g, fake, {0, 0, 0}), DomainError);
  CHECK_THROWS_AS(lpw_positivity(g, fake, 3), DomainError);
  CHECK_THROWS_AS(dual_ring(g, fake), DomainError);
}
