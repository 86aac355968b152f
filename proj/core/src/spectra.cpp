#include "fusionring/spectra.hpp"

#include "fusionring/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace fusionring {

using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

namespace {

constexpr int kRedraws = 8;
constexpr long kPowerIterationCap = 200000;

CMatrix from_int(const IntMatrix& m) {
  CMatrix c(m.size(), m.size());
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) {
      if (m[a][b] != 0) {
        c(a, b) = Complex(Real(m[a][b]));
      }
    }
  }
  return c;
}

// Random coefficients with c_{dual(i)} = conj(c_i), so that sum_i c_i X_i is
// Hermitian whenever X_{dual(i)} = X_i^dagger.
std::vector<Complex> hermitian_coefficients(const FusionRing& ring, std::mt19937_64& rng) {
  const std::size_t r = ring.rank();
  std::vector<Complex> c(r);
  for (Index i = 1; i < r; ++i) {
    const Index j = ring.dual(i);
    if (j < i) {
      continue;
    }
    Real re = uniform_signed(rng);
    if (j == i) {
      c[i] = Complex(re);
    } else {
      Real im = uniform_signed(rng);
      c[i] = Complex(re, im);
      c[j] = Complex(re, -im);
    }
  }
  return c;
}

CMatrix combine(const std::vector<CMatrix>& family, const std::vector<Complex>& c) {
  CMatrix h(family.front().rows(), family.front().cols());
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (c[i].re == 0 && c[i].im == 0) {
      continue;
    }
    h += family[i] * c[i];
  }
  return h;
}

// Groups sorted eigenvalues whose consecutive gaps fall below the threshold.
std::vector<std::vector<std::size_t>> cluster_values(const std::vector<Real>& values,
                                                      const Real& threshold) {
  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k == 0 || values[k] - values[k - 1] >= threshold) {
      clusters.emplace_back();
    }
    clusters.back().push_back(k);
  }
  return clusters;
}

Real collision_threshold(const CMatrix& h) {
  const unsigned bits = current_precision_bits();
  return pow2(-static_cast<long>(bits / 4)) * std::max(Real(1), h.frobenius_norm());
}

// Recursively splits span(q) into eigenspaces of random Hermitian
// combinations of `family` restricted to it, until every block is accepted.
void split_subspace(const FusionRing& ring, const std::vector<CMatrix>& family, const CMatrix& q,
                    const std::function<bool(const CMatrix&)>& accept, std::mt19937_64& rng,
                    std::vector<CMatrix>& out, int depth = 0) {
  if (accept(q)) {
    out.push_back(q);
    return;
  }
  if (depth > 64) {
    throw NumericalError("eigenspace refinement exceeded the recursion limit");
  }
  const CMatrix qa = q.adjoint();
  for (int attempt = 0; attempt <= kRedraws; ++attempt) {
    CMatrix h = qa * combine(family, hermitian_coefficients(ring, rng)) * q;
    HermitianEigen eig = hermitian_eigen(h);
    auto clusters = cluster_values(eig.values, collision_threshold(h));
    if (clusters.size() < 2) {
      continue;
    }
    for (const auto& cl : clusters) {
      CMatrix u(h.rows(), cl.size());
      for (std::size_t k = 0; k < cl.size(); ++k) {
        u.set_column(k, eig.vectors.column(cl[k]));
      }
      CMatrix block = q * u;
      orthonormalize_columns(block);
      split_subspace(ring, family, block, accept, rng, out, depth + 1);
    }
    return;
  }
  throw NumericalError("eigenvalue collision persisted after " + std::to_string(kRedraws) +
                       " redraws; cannot separate a " + std::to_string(q.cols()) +
                       "-dimensional eigenspace");
}

std::vector<CMatrix> left_family(const FusionRing& ring) {
  std::vector<CMatrix> family;
  for (Index i = 0; i < ring.rank(); ++i) {
    family.push_back(left_cmatrix(ring, i));
  }
  return family;
}

// Lexicographic comparison of value vectors (real then imaginary part,
// skipping b_0) with a tolerance; returns -1, 0 or 1.
int compare_values(const std::vector<Complex>& a, const std::vector<Complex>& b, const Real& tol) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (abs(a[i].re - b[i].re) > tol) {
      return a[i].re < b[i].re ? -1 : 1;
    }
    if (abs(a[i].im - b[i].im) > tol) {
      return a[i].im < b[i].im ? -1 : 1;
    }
  }
  return 0;
}

Real max_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Real worst(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, Real(abs(a[i] - b[i])));
  }
  return worst;
}

// Indices ordered FP first, then by descending codegree, then lexicographically.
std::vector<std::size_t> canonical_order(const std::vector<std::vector<Complex>>& values,
                                         const std::vector<Real>& codegrees, std::size_t fp,
                                         const Real& tol) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (a == fp || b == fp) {
      return a == fp && b != fp;
    }
    const Real scale = std::max(Real(1), std::max(codegrees[a], codegrees[b]));
    if (abs(codegrees[a] - codegrees[b]) > tol * scale) {
      return codegrees[a] > codegrees[b];
    }
    return compare_values(values[a], values[b], tol) < 0;
  });
  return order;
}

}  // namespace

CMatrix left_cmatrix(const FusionRing& ring, Index i) { return from_int(left_matrix(ring, i)); }

FpData fp_dimensions(const FusionRing& ring, const Settings& settings) {
  PrecisionScope scope(settings.precision_bits);
  const std::size_t r = ring.rank();
  FpData out;
  if (r == 1) {
    out.dims = {Real(1)};
    out.fpdim = Real(1);
    return out;
  }

  IntMatrix total(r, std::vector<Coeff>(r, 0));
  for (Index i = 0; i < r; ++i) {
    for (Index m = 0; m < r; ++m) {
      for (Index j = 0; j < r; ++j) {
        total[m][j] += ring.N(i, j, m);
      }
    }
  }

  auto apply = [&](const IntMatrix& a, const std::vector<Real>& x) {
    std::vector<Real> y(r, Real(0));
    for (Index m = 0; m < r; ++m) {
      for (Index j = 0; j < r; ++j) {
        if (a[m][j] != 0) {
          y[m] += a[m][j] * x[j];
        }
      }
    }
    return y;
  };

  const Real stop = pow2(-static_cast<long>(settings.precision_bits) + 16);
  std::vector<Real> v(r, Real(1));
  Real lambda(0);
  bool converged = false;
  for (long it = 0; it < kPowerIterationCap; ++it) {
    std::vector<Real> w = apply(total, v);
    // Normalize so that the unit coordinate is 1; then v_i tends to d_i.
    Real scale = w[0];
    if (scale <= 0) {
      throw NumericalError("power iteration produced a non-positive Perron entry");
    }
    Real delta(0);
    for (Index k = 0; k < r; ++k) {
      w[k] /= scale;
      delta = std::max(delta, Real(abs(w[k] - v[k])));
    }
    v = std::move(w);
    lambda = scale;
    if (delta <= stop * std::max(Real(1), v[0])) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NumericalError("power iteration for the Perron eigenvector did not converge");
  }
  for (Index k = 0; k < r; ++k) {
    if (v[k] <= 0) {
      throw NumericalError("Perron eigenvector has a non-positive entry at index " +
                           std::to_string(k));
    }
  }

  Real vv(0);
  for (const auto& x : v) {
    vv += x * x;
  }
  const Real tol = settings.tolerance();
  out.dims.resize(r);
  out.fpdim = Real(0);
  for (Index i = 0; i < r; ++i) {
    std::vector<Real> lv = apply(left_matrix(ring, i), v);
    Real rq(0);
    for (Index k = 0; k < r; ++k) {
      rq += lv[k] * v[k];
    }
    rq /= vv;
    Real residual(0);
    for (Index k = 0; k < r; ++k) {
      residual = std::max(residual, Real(abs(lv[k] - rq * v[k])));
    }
    if (residual > tol * std::max(Real(1), rq)) {
      throw NumericalError("Perron vector is not an eigenvector of L_" + std::to_string(i));
    }
    out.dims[i] = rq;
    out.fpdim += rq * rq;
  }
  return out;
}

Spectrum character_table(const FusionRing& ring, const Settings& settings) {
  if (!ring.is_commutative()) {
    throw DomainError("character_table requires a commutative ring");
  }
  PrecisionScope scope(settings.precision_bits);
  const std::size_t r = ring.rank();
  const Real tol = settings.tolerance();

  Spectrum spec;
  FpData fp = fp_dimensions(ring, settings);
  spec.dims = fp.dims;
  spec.fpdim = fp.fpdim;
  if (r == 1) {
    spec.chars = {{Complex(Real(1))}};
    spec.codegrees = {Real(1)};
    spec.conj = {0};
    spec.fp_index = 0;
    return spec;
  }

  const std::vector<CMatrix> family = left_family(ring);
  std::mt19937_64 rng(settings.seed);
  std::vector<CMatrix> blocks;
  split_subspace(
      ring, family, CMatrix::identity(r), [](const CMatrix& q) { return q.cols() == 1; }, rng,
      blocks);
  if (blocks.size() != r) {
    throw NumericalError("simultaneous diagonalization produced " + std::to_string(blocks.size()) +
                         " lines, expected " + std::to_string(r));
  }

  std::vector<std::vector<Complex>> chars;
  std::vector<Real> codegrees;
  for (const CMatrix& q : blocks) {
    const CVector u = q.column(0);
    std::vector<Complex> row(r);
    Real alpha(0);
    for (Index i = 0; i < r; ++i) {
      const CVector lu = family[i] * u;
      row[i] = dot(u, lu);
      CVector res = lu;
      for (Index k = 0; k < r; ++k) {
        res[k] -= row[i] * u[k];
      }
      if (norm(res) > tol * std::max(Real(1), Real(abs(row[i])))) {
        throw NumericalError("joint eigenvector check failed for L_" + std::to_string(i));
      }
      alpha += norm2(row[i]);
    }
    // Rayleigh quotients of a unit vector: rho(b_0) = 1 up to rounding.
    row[0] = Complex(Real(1));
    chars.push_back(std::move(row));
    codegrees.push_back(alpha);
  }

  // The FP character is the row matching the Perron dimensions.
  std::size_t fp_row = r;
  for (std::size_t s = 0; s < r; ++s) {
    std::vector<Complex> dims_c(spec.dims.begin(), spec.dims.end());
    if (max_distance(chars[s], dims_c) <= tol * std::max(Real(1), spec.fpdim)) {
      fp_row = s;
      break;
    }
  }
  if (fp_row == r) {
    throw NumericalError("no character matches the Frobenius-Perron dimensions");
  }

  const auto order = canonical_order(chars, codegrees, fp_row, tol);
  for (std::size_t k : order) {
    spec.chars.push_back(chars[k]);
    spec.codegrees.push_back(codegrees[k]);
  }
  spec.fp_index = 0;
  // Use the power-iteration dimensions for the FP row itself.
  for (Index i = 0; i < r; ++i) {
    spec.chars[0][i] = Complex(spec.dims[i]);
  }
  for (std::size_t s = 0; s < r; ++s) {
    Real alpha(0);
    for (const Complex& z : spec.chars[s]) {
      alpha += norm2(z);
    }
    spec.codegrees[s] = alpha;
  }

  spec.conj.assign(r, r);
  for (std::size_t s = 0; s < r; ++s) {
    std::vector<Complex> target(r);
    for (Index i = 0; i < r; ++i) {
      target[i] = conj(spec.chars[s][i]);
    }
    for (std::size_t t = 0; t < r; ++t) {
      if (max_distance(spec.chars[t], target) <= tol * std::max(Real(1), spec.fpdim)) {
        spec.conj[s] = t;
        break;
      }
    }
    if (spec.conj[s] == r) {
      throw NumericalError("character " + std::to_string(s) + " has no conjugate row");
    }
  }
  return spec;
}

CVector Irrep::trace_vector() const {
  CVector t;
  t.reserve(matrices.size());
  for (const auto& m : matrices) {
    t.push_back(m.trace());
  }
  return t;
}

Real codegree(const FusionRing& ring, const std::vector<CMatrix>& matrices,
              const Settings& settings) {
  const std::size_t n = matrices.front().rows();
  CMatrix z(n, n);
  for (Index i = 0; i < ring.rank(); ++i) {
    z += matrices[ring.dual(i)] * matrices[i].trace();
  }
  const Complex alpha = z.trace() / Real(static_cast<long>(n));
  CMatrix dev = z - CMatrix::identity(n) * alpha;
  const Real tol = settings.tolerance();
  const Real scale = std::max(Real(1), Real(abs(alpha)));
  if (dev.frobenius_norm() > tol * scale || abs(alpha.im) > tol * scale) {
    throw NumericalError("z_rho does not act as a scalar on the representation");
  }
  return alpha.re;
}

IrrepSet decompose_regular(const FusionRing& ring, const Settings& settings) {
  PrecisionScope scope(settings.precision_bits);
  const std::size_t r = ring.rank();
  const Real tol = settings.tolerance();
  IrrepSet out;
  if (r == 1) {
    Irrep triv;
    triv.dim = 1;
    triv.matrices = {CMatrix::identity(1)};
    triv.codegree = Real(1);
    out.irreps.push_back(std::move(triv));
    return out;
  }

  const std::vector<CMatrix> left = left_family(ring);
  std::vector<CMatrix> right;
  for (Index i = 0; i < r; ++i) {
    right.push_back(from_int(right_matrix(ring, i)));
  }

  auto restrict_to = [&](const CMatrix& q) {
    const CMatrix qa = q.adjoint();
    std::vector<CMatrix> blocks;
    blocks.reserve(r);
    for (const auto& l : left) {
      blocks.push_back(qa * l * q);
    }
    return blocks;
  };

  // A block is accepted once the restricted left action spans End(W)
  // (Burnside), i.e. W is irreducible.
  auto irreducible = [&](const CMatrix& q) {
    const std::size_t k = q.cols();
    if (k == 1) {
      return true;
    }
    const auto blocks = restrict_to(q);
    CMatrix gram(r, r);
    for (Index a = 0; a < r; ++a) {
      for (Index b = 0; b < r; ++b) {
        gram(a, b) = (blocks[a].adjoint() * blocks[b]).trace();
      }
    }
    HermitianEigen eig = hermitian_eigen(gram);
    const Real cut = pow2(-static_cast<long>(settings.precision_bits / 4)) *
                     std::max(Real(1), eig.values.back());
    std::size_t rank = 0;
    for (const auto& v : eig.values) {
      if (v > cut) {
        ++rank;
      }
    }
    return rank == k * k;
  };

  std::mt19937_64 rng(settings.seed);
  std::vector<CMatrix> blocks;
  split_subspace(ring, right, CMatrix::identity(r), irreducible, rng, blocks);

  // Group the irreducible blocks into isomorphism classes by trace vector.
  struct ClassInfo {
    CMatrix basis;
    CVector traces;
    std::size_t multiplicity = 0;
  };
  std::vector<ClassInfo> classes;
  for (const CMatrix& q : blocks) {
    const auto mats = restrict_to(q);
    for (Index i = 0; i < r; ++i) {
      CMatrix defect = left[i] * q - q * mats[i];
      if (defect.frobenius_norm() > tol * std::max(Real(1), left[i].frobenius_norm())) {
        throw NumericalError("eigenspace is not invariant under left multiplication");
      }
    }
    CVector traces;
    for (const auto& m : mats) {
      traces.push_back(m.trace());
    }
    auto it = std::find_if(classes.begin(), classes.end(), [&](const ClassInfo& c) {
      return c.basis.cols() == q.cols() &&
             max_distance(c.traces, traces) <= tol * std::max(Real(1), Real(static_cast<long>(r)));
    });
    if (it == classes.end()) {
      classes.push_back({q, traces, 1});
    } else {
      ++it->multiplicity;
    }
  }

  std::size_t dim_sum = 0;
  std::vector<Irrep> irreps;
  std::vector<std::vector<Complex>> trace_rows;
  std::vector<Real> codegrees;
  for (const auto& c : classes) {
    const std::size_t n = c.basis.cols();
    if (c.multiplicity != n) {
      throw NumericalError("irreducible of dimension " + std::to_string(n) + " occurs " +
                           std::to_string(c.multiplicity) +
                           " times in the regular representation");
    }
    dim_sum += n * n;
    Irrep irrep;
    irrep.dim = n;
    irrep.matrices = restrict_to(c.basis);
    irrep.codegree = codegree(ring, irrep.matrices, settings);
    trace_rows.push_back(c.traces);
    codegrees.push_back(irrep.codegree);
    irreps.push_back(std::move(irrep));
  }
  if (dim_sum != r) {
    throw NumericalError("irreducible dimensions do not satisfy sum n^2 = rank");
  }

  FpData fp = fp_dimensions(ring, settings);
  std::vector<Complex> dims_c(fp.dims.begin(), fp.dims.end());
  std::size_t fp_row = irreps.size();
  for (std::size_t k = 0; k < irreps.size(); ++k) {
    if (irreps[k].dim == 1 && max_distance(trace_rows[k], dims_c) <= tol * std::max(Real(1), fp.fpdim)) {
      fp_row = k;
      break;
    }
  }
  if (fp_row == irreps.size()) {
    throw NumericalError("no one-dimensional block matches the Frobenius-Perron dimensions");
  }
  for (std::size_t k : canonical_order(trace_rows, codegrees, fp_row, tol)) {
    out.irreps.push_back(std::move(irreps[k]));
  }
  return out;
}

Real matrel_check(const FusionRing& ring, const Irrep& irrep, const CVector& v1, const CVector& v2,
                  const CVector& f1, const CVector& f2) {
  auto apply = [](const CVector& f, const CVector& v) {
    Complex s;
    for (std::size_t k = 0; k < f.size(); ++k) {
      s += f[k] * v[k];
    }
    return s;
  };
  Complex lhs;
  for (Index i = 0; i < ring.rank(); ++i) {
    lhs += apply(f1, irrep.matrices[i] * v1) * apply(f2, irrep.matrices[ring.dual(i)] * v2);
  }
  Complex rhs = Complex(irrep.codegree) * apply(f2, v1) * apply(f1, v2);
  return abs(lhs - rhs);
}

IrrepSet irreps_from_characters(const Spectrum& spectrum) {
  IrrepSet set;
  for (std::size_t s = 0; s < spectrum.size(); ++s) {
    Irrep irrep;
    irrep.dim = 1;
    for (const auto& value : spectrum.chars[s]) {
      CMatrix m(1, 1);
      m(0, 0) = value;
      irrep.matrices.push_back(std::move(m));
    }
    irrep.codegree = spectrum.codegrees[s];
    set.irreps.push_back(std::move(irrep));
  }
  return set;
}

}  // namespace fusionring
