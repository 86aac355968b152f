#pragma once

// Spectral data of a fusion ring at working precision: Frobenius-Perron
// dimensions, the character table of a commutative ring, and the irreducible
// representations of the complexified ring in general.

#include "fusionring/linalg.hpp"
#include "fusionring/report.hpp"
#include "fusionring/ring.hpp"

#include <vector>

namespace fusionring {

struct FpData {
  std::vector<Real> dims;  // d_i > 0, d_0 = 1
  Real fpdim;              // sum_i d_i^2
};

/// Perron eigenvector of sum_i L_i by power iteration; d_i is the eigenvalue
/// of L_i on it. Throws NumericalError on non-convergence or a non-positive
/// Perron entry.
FpData fp_dimensions(const FusionRing& ring, const Settings& settings = {});

/// Character table of a commutative ring. Rows are ordered: the FP character
/// first, then by descending codegree, ties broken by lexicographic value.
struct Spectrum {
  std::vector<Real> dims;
  Real fpdim;
  std::vector<std::vector<Complex>> chars;  // chars[s][i] = rho_s(b_i)
  std::vector<Real> codegrees;              // alpha_s = sum_i |rho_s(b_i)|^2
  std::vector<Index> conj;                  // chars[conj[s]][i] = conj(chars[s][i])
  Index fp_index = 0;

  std::size_t size() const { return chars.size(); }
};

/// Throws DomainError for noncommutative rings and NumericalError when the
/// eigenvalue collisions cannot be resolved.
Spectrum character_table(const FusionRing& ring, const Settings& settings = {});

/// Complex matrix of left multiplication by b_i.
CMatrix left_cmatrix(const FusionRing& ring, Index i);

/// One irreducible representation: matrices[i] = rho(b_i).
struct Irrep {
  std::size_t dim = 0;
  std::vector<CMatrix> matrices;
  Real codegree;
  CVector trace_vector() const;
};

struct IrrepSet {
  std::vector<Irrep> irreps;
};

/// Decomposes the regular representation into isotypic blocks by splitting
/// eigenspaces of random self-adjoint elements of its commutant.
IrrepSet decompose_regular(const FusionRing& ring, const Settings& settings = {});

/// Scalar by which z_rho = sum_i Tr(rho(b_i)) b_{i*} acts on rho. Throws
/// NumericalError if rho(z_rho) is not scalar within the tolerance.
Real codegree(const FusionRing& ring, const std::vector<CMatrix>& matrices,
              const Settings& settings = {});

/// | sum_i f1(rho(b_i) v1) f2(rho(b_{i*}) v2) - alpha f2(v1) f1(v2) |, with
/// functionals applied bilinearly (no conjugation).
Real matrel_check(const FusionRing& ring, const Irrep& irrep, const CVector& v1, const CVector& v2,
                  const CVector& f1, const CVector& f2);

/// Wraps the characters of a commutative ring as one-dimensional irreps.
IrrepSet irreps_from_characters(const Spectrum& spectrum);

}  // namespace fusionring
