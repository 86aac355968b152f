#include "fusionring/criteria.hpp"

#include "fusionring/errors.hpp"
#include "fusionring/tuples.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace fusionring {

using boost::multiprecision::abs;

namespace {

std::string tuple_text(const std::vector<Index>& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    s += (k ? "," : "") + std::to_string(t[k]);
  }
  return s + ")";
}

void require_commutative(const FusionRing& ring, const char* what) {
  if (!ring.is_commutative()) {
    throw DomainError(std::string(what) + " requires a commutative ring");
  }
}

std::vector<Real> weights(const std::vector<Real>& dims, int n) {
  std::vector<Real> w;
  w.reserve(dims.size());
  for (const auto& d : dims) {
    w.push_back(ipow(d, 2 - n));
  }
  return w;
}

Complex evaluate_In(const Spectrum& spectrum, const std::vector<Real>& w,
                    const std::vector<Index>& chars) {
  Complex total;
  for (Index i = 0; i < spectrum.dims.size(); ++i) {
    Complex term(w[i]);
    for (Index s : chars) {
      term *= spectrum.chars[s][i];
    }
    total += term;
  }
  return total;
}

// Running minimum of a margin family, reported as a note.
struct MarginTracker {
  explicit MarginTracker(std::string l) : label(std::move(l)) {}

  std::string label;
  bool seen = false;
  Real margin;
  std::vector<Index> where;

  void offer(const Real& m, std::vector<Index> at) {
    if (!seen || m < margin) {
      margin = m;
      where = std::move(at);
      seen = true;
    }
  }
};

}  // namespace

CriterionReport schur_inequalities(const FusionRing& ring, const std::vector<Real>& dims,
                                   const Settings& settings) {
  PrecisionScope scope(settings.precision_bits);
  const std::size_t r = ring.rank();
  const Real tol = settings.tolerance();
  const int digits = settings.digits();
  CriterionReport report = make_report(ring.name(), "schur", settings);
  report.notes.push_back(
      "these bounds hold in every fusion ring; a failure indicates invalid input data or "
      "exhausted precision");

  std::vector<std::vector<Real>> dd(r, std::vector<Real>(r));
  std::vector<std::vector<double>> ddf(r, std::vector<double>(r));
  for (Index a = 0; a < r; ++a) {
    for (Index b = 0; b < r; ++b) {
      dd[a][b] = dims[a] * dims[b];
      ddf[a][b] = static_cast<double>(dd[a][b]);
    }
  }

  MarginTracker m1{"(i) sum_m N_ijm^2 <= min(d_i^2, d_j^2)"};
  MarginTracker m2{"(ii) N_ijm <= d_i d_j / d_m"};
  MarginTracker m3{"(iii) N_ijm <= min(d_i, d_j, d_m)"};
  MarginTracker m4{"(iv) sum_m N_{i1 i2 m} N_{i3 i4 m} <= d_ip d_iq"};

  auto record = [&](MarginTracker& t, const Real& lhs, const Real& rhs, std::vector<Index> at,
                    const std::string& detail) {
    Real margin = rhs - lhs;
    if (margin < -tol) {
      report.witnesses.push_back(
          {to_long(at), to_decimal(lhs, digits), to_decimal(margin, digits), t.label + ": " + detail});
    }
    t.offer(margin, std::move(at));
  };

  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) {
      Coeff sq = 0;
      for (Index m = 0; m < r; ++m) {
        const Coeff n = ring.N(i, j, m);
        sq += n * n;
        // (ii) in the multiplied-out form N d_m <= d_i d_j.
        const Real lhs2 = Real(n) * dims[m];
        record(m2, lhs2, dd[i][j], {i, j, m},
               "N" + tuple_text({i, j, m}) + " = " + std::to_string(n) + " exceeds d_i d_j / d_m");
        const Real bound3 = std::min({dims[i], dims[j], dims[m]});
        record(m3, Real(n), bound3, {i, j, m},
               "N" + tuple_text({i, j, m}) + " = " + std::to_string(n) +
                   " exceeds min(d_i, d_j, d_m)");
      }
      record(m1, Real(sq), std::min(dd[i][i], dd[j][j]), {i, j},
             "sum_m N_ijm^2 = " + std::to_string(sq));
    }
  }

  static constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<Index> q(4);
  for (q[0] = 0; q[0] < r; ++q[0]) {
    for (q[1] = 0; q[1] < r; ++q[1]) {
      for (q[2] = 0; q[2] < r; ++q[2]) {
        for (q[3] = 0; q[3] < r; ++q[3]) {
          Coeff s = 0;
          for (Index m = 0; m < r; ++m) {
            s += ring.N(q[0], q[1], m) * ring.N(q[2], q[3], m);
          }
          int best = 0;
          for (int p = 1; p < 6; ++p) {
            if (ddf[q[kPairs[p][0]]][q[kPairs[p][1]]] < ddf[q[kPairs[best][0]]][q[kPairs[best][1]]]) {
              best = p;
            }
          }
          const Index a = q[kPairs[best][0]];
          const Index b = q[kPairs[best][1]];
          const double slack = ddf[a][b] - static_cast<double>(s);
          if (slack > 1e-6 * std::max(1.0, ddf[a][b]) && m4.seen &&
              slack > static_cast<double>(m4.margin) + 1e-6) {
            continue;  // comfortably satisfied and not the tightest instance
          }
          // Exact comparison against every pair when the double check is close.
          for (const auto& pq : kPairs) {
            const Index x = q[pq[0]];
            const Index y = q[pq[1]];
            std::vector<Index> at = {q[0], q[1], q[2], q[3],
                                     static_cast<Index>(pq[0] + 1), static_cast<Index>(pq[1] + 1)};
            record(m4, Real(s), dd[x][y], std::move(at),
                   "sum_m N_{i1 i2 m} N_{i3 i4 m} = " + std::to_string(s) + " exceeds d_i" +
                       std::to_string(pq[0] + 1) + " d_i" + std::to_string(pq[1] + 1));
          }
        }
      }
    }
  }

  for (const MarginTracker* t : {&m1, &m2, &m3, &m4}) {
    if (t->seen) {
      report.notes.push_back(t->label + ": minimal margin " + to_decimal(t->margin, 12) + " at " +
                             tuple_text(t->where));
    }
  }
  report.settle();
  return report;
}

Complex invariant_In(const FusionRing& ring, const Spectrum& spectrum,
                     const std::vector<Index>& chars) {
  require_commutative(ring, "invariant_In");
  const int n = static_cast<int>(chars.size());
  return evaluate_In(spectrum, weights(spectrum.dims, n), chars);
}

CriterionReport lpw_positivity(const FusionRing& ring, const Spectrum& spectrum, int n,
                               const Settings& settings) {
  require_commutative(ring, "lpw_positivity");
  if (n < 1) {
    throw std::invalid_argument("lpw_positivity needs n >= 1");
  }
  PrecisionScope scope(settings.precision_bits);
  const Real tol = settings.tolerance();
  const int digits = settings.digits();
  CriterionReport report = make_report(ring.name(), "lpw(n=" + std::to_string(n) + ")", settings);
  report.parameters.emplace_back("n", std::to_string(n));

  const auto w = weights(spectrum.dims, n);
  // Values this small are zero up to rounding and are not worth a warning.
  const Real zero_floor = pow2(-static_cast<long>(3 * settings.precision_bits / 4)) *
                          std::max(Real(1), spectrum.fpdim);
  std::size_t count = 0;
  std::size_t warnings = 0;
  Real smallest(0);
  std::vector<Index> smallest_at;
  for_each_multiset(spectrum.size(), static_cast<std::size_t>(n), [&](const std::vector<Index>& t) {
    ++count;
    const Complex v = evaluate_In(spectrum, w, t);
    if (smallest_at.empty() || v.re < smallest) {
      smallest = v.re;
      smallest_at = t;
    }
    if (v.re < -tol) {
      report.witnesses.push_back({to_long(t), to_decimal(v, digits), to_decimal(v.re, digits),
                                  "I_" + std::to_string(n) + tuple_text(t) + " has negative real part"});
    } else if (abs(v.im) > tol) {
      report.witnesses.push_back({to_long(t), to_decimal(v, digits),
                                  to_decimal(Real(tol - abs(v.im)), digits),
                                  "I_" + std::to_string(n) + tuple_text(t) + " is not real"});
    } else if (v.re < -zero_floor) {
      ++warnings;
      if (warnings <= 16) {
        report.notes.push_back("warning: I_" + std::to_string(n) + tuple_text(t) + " = " +
                               to_decimal(v.re, digits) + " lies in [-tol, 0)");
      }
    }
  });
  report.parameters.emplace_back("multisets", std::to_string(count));
  report.notes.push_back("smallest real part " + to_decimal(smallest, digits) + " at " +
                         tuple_text(smallest_at));
  if (warnings > 16) {
    report.notes.push_back(std::to_string(warnings - 16) + " further values in [-tol, 0)");
  }
  report.settle();
  return report;
}

CriterionReport lpw_general(const FusionRing& ring, const IrrepSet& irreps,
                            const std::vector<Real>& dims, int n, const Settings& settings,
                            SearchBudget budget) {
  if (n < 1) {
    throw std::invalid_argument("lpw_general needs n >= 1");
  }
  PrecisionScope scope(settings.precision_bits);
  const Real tol = settings.tolerance();
  const int digits = settings.digits();
  const std::size_t r = ring.rank();
  CriterionReport report =
      make_report(ring.name(), "lpw-general(n=" + std::to_string(n) + ")", settings);
  report.parameters.emplace_back("n", std::to_string(n));
  report.parameters.emplace_back("starts", std::to_string(budget.starts));
  report.parameters.emplace_back("sweeps", std::to_string(budget.sweeps));
  report.notes.push_back(
      "verdict pass means no violating product vector was found within the search budget; it is "
      "not a proof of positivity");

  const auto w = weights(dims, n);
  const Real stall = pow2(-static_cast<long>(settings.precision_bits / 4));
  std::size_t tuple_counter = 0;
  Real smallest(0);
  std::vector<Index> smallest_at;

  for_each_multiset(irreps.irreps.size(), static_cast<std::size_t>(n), [&](const std::vector<Index>& t) {
    std::mt19937_64 rng(settings.seed + 0x9e3779b97f4a7c15ULL * (++tuple_counter));
    const std::size_t nf = t.size();

    // quad[k][i] = v_k^dagger rho_k(b_i) v_k
    auto quadratic = [&](std::size_t k, const CVector& v) {
      std::vector<Complex> out(r);
      for (Index i = 0; i < r; ++i) {
        out[i] = dot(v, irreps.irreps[t[k]].matrices[i] * v);
      }
      return out;
    };
    auto value_of = [&](const std::vector<std::vector<Complex>>& quad) {
      Complex total;
      for (Index i = 0; i < r; ++i) {
        Complex term(w[i]);
        for (std::size_t k = 0; k < nf; ++k) {
          term *= quad[k][i];
        }
        total += term;
      }
      return total;
    };
    auto random_unit = [&](std::size_t dim) {
      CVector v(dim);
      for (auto& z : v) {
        z = Complex(uniform_signed(rng), uniform_signed(rng));
      }
      normalize(v);
      return v;
    };

    bool all_scalar = true;
    for (Index s : t) {
      all_scalar = all_scalar && irreps.irreps[s].dim == 1;
    }
    const int starts = all_scalar ? 1 : budget.starts;

    bool any_converged = false;
    bool violated = false;
    Complex best_value;
    std::vector<CVector> best_vectors;
    for (int start = 0; start < starts && !violated; ++start) {
      std::vector<CVector> vs;
      std::vector<std::vector<Complex>> quad;
      for (std::size_t k = 0; k < nf; ++k) {
        vs.push_back(all_scalar ? CVector{Complex(Real(1))} : random_unit(irreps.irreps[t[k]].dim));
        quad.push_back(quadratic(k, vs.back()));
      }
      Complex value = value_of(quad);
      bool converged = all_scalar;
      for (int sweep = 0; sweep < budget.sweeps && !converged; ++sweep) {
        const Real before = value.re;
        for (std::size_t k = 0; k < nf; ++k) {
          const std::size_t dim = irreps.irreps[t[k]].dim;
          if (dim == 1) {
            continue;
          }
          CMatrix g(dim, dim);
          for (Index i = 0; i < r; ++i) {
            Complex c(w[i]);
            for (std::size_t l = 0; l < nf; ++l) {
              if (l != k) {
                c *= quad[l][i];
              }
            }
            g += irreps.irreps[t[k]].matrices[i] * c;
          }
          CMatrix h = g + g.adjoint();
          h *= Complex(Real(1) / 2);
          HermitianEigen eig = hermitian_eigen(h);
          vs[k] = eig.vectors.column(0);
          quad[k] = quadratic(k, vs[k]);
        }
        value = value_of(quad);
        if (value.re < -tol) {
          break;
        }
        if (abs(before - value.re) <= stall * std::max(Real(1), Real(abs(value.re)))) {
          converged = true;
        }
      }
      any_converged = any_converged || converged;
      if (best_vectors.empty() || value.re < best_value.re) {
        best_value = value;
        best_vectors = vs;
      }
      violated = value.re < -tol;
    }

    if (smallest_at.empty() || best_value.re < smallest) {
      smallest = best_value.re;
      smallest_at = t;
    }
    if (violated) {
      std::ostringstream detail;
      detail << "product vector with negative value:";
      for (std::size_t k = 0; k < nf; ++k) {
        detail << " v" << k + 1 << "=[";
        for (std::size_t a = 0; a < best_vectors[k].size(); ++a) {
          detail << (a ? ", " : "") << to_decimal(best_vectors[k][a], 20);
        }
        detail << "]";
      }
      report.witnesses.push_back({to_long(t), to_decimal(best_value, digits),
                                  to_decimal(best_value.re, digits), detail.str()});
    } else if (!any_converged) {
      report.unresolved.push_back({to_long(t), to_decimal(best_value, digits),
                                   to_decimal(best_value.re, digits),
                                   "search budget exhausted before any start converged"});
    }
  });
  report.parameters.emplace_back("multisets", std::to_string(tuple_counter));
  if (!smallest_at.empty()) {
    report.notes.push_back("smallest value found " + to_decimal(smallest, digits) + " at irreps " +
                           tuple_text(smallest_at));
  }
  report.settle();
  return report;
}

ResidualReport In_recursion_check(const FusionRing& ring, const Spectrum& spectrum, int n,
                                  const Settings& settings) {
  require_commutative(ring, "In_recursion_check");
  if (n < 3) {
    throw std::invalid_argument("the I_n recursion needs n >= 3");
  }
  PrecisionScope scope(settings.precision_bits);
  const std::size_t k = spectrum.size();
  const auto un = static_cast<std::size_t>(n);

  auto encode = [&](const std::vector<Index>& t) {
    std::size_t code = 0;
    for (Index x : t) {
      code = code * k + x;
    }
    return code;
  };
  auto table = [&](std::size_t len) {
    std::vector<Complex> values;
    const auto w = weights(spectrum.dims, static_cast<int>(len));
    for_each_tuple(k, len, [&](const std::vector<Index>& t) { values.push_back(evaluate_In(spectrum, w, t)); });
    return values;
  };
  const std::vector<Complex> lower = table(un - 1);
  const std::vector<Complex> i3 = un - 1 == 3 ? lower : table(3);
  const auto wn = weights(spectrum.dims, n);

  ResidualReport out;
  out.check = "recursion(n=" + std::to_string(n) + ")";
  out.max_residual = Real(0);
  std::vector<Index> head(un - 1);
  for_each_tuple(k, un, [&](const std::vector<Index>& t) {
    ++out.evaluated;
    const Complex lhs = evaluate_In(spectrum, wn, t);
    std::copy(t.begin(), t.begin() + (n - 2), head.begin());
    Complex rhs;
    for (Index rho = 0; rho < k; ++rho) {
      head[un - 2] = rho;
      const Complex& a = lower[encode(head)];
      const Complex& b = i3[encode({spectrum.conj[rho], t[un - 2], t[un - 1]})];
      rhs += a * b / spectrum.codegrees[rho];
    }
    Real res = abs(lhs - rhs);
    if (out.worst.empty() || res > out.max_residual) {
      out.max_residual = res;
      out.worst = to_long(t);
    }
  });
  return out;
}

DualRing dual_ring(const FusionRing& ring, const Spectrum& spectrum, const Settings& settings) {
  require_commutative(ring, "dual_ring");
  PrecisionScope scope(settings.precision_bits);
  const std::size_t k = spectrum.size();
  const auto w = weights(spectrum.dims, 3);
  DualRing dr;
  dr.size = k;
  dr.constants.resize(k * k * k);
  for (Index s = 0; s < k; ++s) {
    for (Index t = 0; t < k; ++t) {
      for (Index u = 0; u < k; ++u) {
        dr.constants[(s * k + t) * k + u] =
            evaluate_In(spectrum, w, {s, t, spectrum.conj[u]}) / spectrum.codegrees[u];
      }
    }
  }

  dr.commutativity_residual = Real(0);
  dr.associativity_residual = Real(0);
  dr.unit_residual = Real(0);
  for (Index s = 0; s < k; ++s) {
    for (Index t = 0; t < k; ++t) {
      for (Index u = 0; u < k; ++u) {
        dr.commutativity_residual =
            std::max(dr.commutativity_residual, Real(abs(dr(s, t, u) - dr(t, s, u))));
        const Complex delta(Real(t == u ? 1 : 0));
        dr.unit_residual = std::max(dr.unit_residual, Real(abs(dr(spectrum.fp_index, t, u) - delta)));
        dr.unit_residual = std::max(dr.unit_residual, Real(abs(dr(t, spectrum.fp_index, u) - delta)));
      }
    }
  }
  // (s * t) * v versus s * (t * v), coefficient of w.
  for (Index s = 0; s < k; ++s) {
    for (Index t = 0; t < k; ++t) {
      for (Index v = 0; v < k; ++v) {
        for (Index x = 0; x < k; ++x) {
          Complex left;
          Complex right;
          for (Index u = 0; u < k; ++u) {
            left += dr(s, t, u) * dr(u, v, x);
            right += dr(t, v, u) * dr(s, u, x);
          }
          dr.associativity_residual = std::max(dr.associativity_residual, Real(abs(left - right)));
        }
      }
    }
  }
  return dr;
}

ResidualReport orthogonality_check(const FusionRing& ring, const Spectrum& spectrum) {
  require_commutative(ring, "orthogonality_check");
  ResidualReport out;
  out.check = "orthogonality";
  out.max_residual = Real(0);
  for (Index s = 0; s < spectrum.size(); ++s) {
    for (Index t = 0; t < spectrum.size(); ++t) {
      ++out.evaluated;
      const Complex value = invariant_In(ring, spectrum, {s, t});
      const Complex expected(spectrum.conj[s] == t ? spectrum.codegrees[s] : Real(0));
      Real res = abs(value - expected);
      if (out.worst.empty() || res > out.max_residual) {
        out.max_residual = res;
        out.worst = {static_cast<long>(s), static_cast<long>(t)};
      }
    }
  }
  return out;
}

ResidualReport trace_expansion_check(const Spectrum& spectrum) {
  ResidualReport out;
  out.check = "trace-expansion";
  out.max_residual = Real(0);
  for (Index i = 0; i < spectrum.dims.size(); ++i) {
    ++out.evaluated;
    Complex sum;
    for (Index s = 0; s < spectrum.size(); ++s) {
      sum += spectrum.chars[s][i] / spectrum.codegrees[s];
    }
    Real res = abs(sum - Complex(Real(i == 0 ? 1 : 0)));
    if (out.worst.empty() || res > out.max_residual) {
      out.max_residual = res;
      out.worst = {static_cast<long>(i)};
    }
  }
  return out;
}

}  // namespace fusionring
