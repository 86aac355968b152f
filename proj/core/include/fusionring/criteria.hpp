#pragma once

// Categorification obstructions computable from the ring alone: the
// fusion-coefficient inequalities, the positivity of the I_n invariants and
// the dual ring they define.

#include "fusionring/report.hpp"
#include "fusionring/ring.hpp"
#include "fusionring/spectra.hpp"

#include <vector>

namespace fusionring {

/// The four coefficient bounds, checked over all index tuples:
///   (i)   sum_m N_ijm^2 <= min(d_i^2, d_j^2)
///   (ii)  N_ijm d_m <= d_i d_j
///   (iii) N_ijm <= min(d_i, d_j, d_m)
///   (iv)  sum_m N_{i1 i2 m} N_{i3 i4 m} <= d_{ip} d_{iq} for all p != q.
/// These hold in every fusion ring, so a failure means bad input data or
/// exhausted precision.
CriterionReport schur_inequalities(const FusionRing& ring, const std::vector<Real>& dims,
                                   const Settings& settings = {});

/// I_n(rho_1..rho_n) = sum_i d_i^{2-n} rho_1(b_i) ... rho_n(b_i).
/// Throws DomainError for a noncommutative ring.
Complex invariant_In(const FusionRing& ring, const Spectrum& spectrum,
                     const std::vector<Index>& chars);

/// Scans I_n over all character multisets of size n (n >= 3). Fails when a
/// value has real part < -tol or imaginary part beyond tol.
CriterionReport lpw_positivity(const FusionRing& ring, const Spectrum& spectrum, int n,
                               const Settings& settings = {});

struct SearchBudget {
  int starts = 16;
  int sweeps = 64;
};

/// Counterexample search for the general (possibly noncommutative) form:
/// minimizes Re sum_i d_i^{2-n} prod_k (rho_k(b_i) v_k, v_k) over unit vectors
/// v_k by alternating minimal-eigenvector updates. A pass means only that no
/// violation was found within the budget.
CriterionReport lpw_general(const FusionRing& ring, const IrrepSet& irreps,
                            const std::vector<Real>& dims, int n, const Settings& settings = {},
                            SearchBudget budget = {});

/// max |I_n - sum_rho alpha_rho^{-1} I_{n-1}(.., rho) I_3(conj rho, .., ..)|
/// over all ordered character tuples.
ResidualReport In_recursion_check(const FusionRing& ring, const Spectrum& spectrum, int n,
                                  const Settings& settings = {});

/// Structure constants c[s][t][u] = alpha_u^{-1} I_3(rho_s, rho_t, conj rho_u)
/// of the product on characters, with the residuals of its algebra axioms.
struct DualRing {
  std::size_t size = 0;
  std::vector<Complex> constants;
  Real commutativity_residual{0};
  Real associativity_residual{0};
  Real unit_residual{0};

  const Complex& operator()(Index s, Index t, Index u) const {
    return constants[(s * size + t) * size + u];
  }
};

DualRing dual_ring(const FusionRing& ring, const Spectrum& spectrum,
                   const Settings& settings = {});

/// max |I_2(rho_s, rho_t) - alpha_s delta_{t, conj s}| over all pairs.
ResidualReport orthogonality_check(const FusionRing& ring, const Spectrum& spectrum);

/// max |sum_s alpha_s^{-1} rho_s(b_i) - delta_{i0}| over all i.
ResidualReport trace_expansion_check(const Spectrum& spectrum);

}  // namespace fusionring
