#include "fusionring/linalg.hpp"

#include "fusionring/errors.hpp"

#include <algorithm>
#include <numeric>

namespace fusionring {

using boost::multiprecision::sqrt;

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = Complex(Real(1));
  }
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t(j, i) = conj((*this)(i, j));
    }
  }
  return t;
}

CVector CMatrix::column(std::size_t j) const {
  CVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    v[i] = (*this)(i, j);
  }
  return v;
}

void CMatrix::set_column(std::size_t j, const CVector& v) {
  for (std::size_t i = 0; i < rows_; ++i) {
    (*this)(i, j) = v[i];
  }
}

Complex CMatrix::trace() const {
  Complex t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
    t += (*this)(i, i);
  }
  return t;
}

Real CMatrix::frobenius_norm() const {
  Real s(0);
  for (const auto& z : data_) {
    s += norm2(z);
  }
  return sqrt(s);
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  for (std::size_t k = 0; k < data_.size(); ++k) {
    data_[k] += o.data_[k];
  }
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  for (std::size_t k = 0; k < data_.size(); ++k) {
    data_[k] -= o.data_[k];
  }
  return *this;
}

CMatrix& CMatrix::operator*=(const Complex& s) {
  for (auto& z : data_) {
    z *= s;
  }
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex& aik = a(i, k);
      if (aik.re == 0 && aik.im == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

CVector operator*(const CMatrix& a, const CVector& v) {
  CVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
      }
    }
  }
  return k;
}

Complex dot(const CVector& u, const CVector& v) {
  Complex s;
  for (std::size_t k = 0; k < u.size(); ++k) {
    s += conj(u[k]) * v[k];
  }
  return s;
}

Real norm(const CVector& v) {
  Real s(0);
  for (const auto& z : v) {
    s += norm2(z);
  }
  return sqrt(s);
}

void normalize(CVector& v) {
  Real n = norm(v);
  for (auto& z : v) {
    z /= n;
  }
}

void orthonormalize_columns(CMatrix& q) {
  for (std::size_t j = 0; j < q.cols(); ++j) {
    CVector v = q.column(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        CVector u = q.column(k);
        Complex c = dot(u, v);
        for (std::size_t i = 0; i < v.size(); ++i) {
          v[i] -= c * u[i];
        }
      }
    }
    normalize(v);
    q.set_column(j, v);
  }
}

Real hermitian_defect(const CMatrix& a) {
  Real worst(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      worst = std::max(worst, Real(abs(a(i, j) - conj(a(j, i)))));
    }
  }
  return worst;
}

HermitianEigen hermitian_eigen(const CMatrix& input, int max_sweeps) {
  const std::size_t n = input.rows();
  CMatrix h = input;
  CMatrix v = CMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i).im = 0;
  }

  const unsigned bits = current_precision_bits();
  const Real scale = std::max(h.frobenius_norm(), Real(1));
  const Real stop = pow2(-static_cast<long>(bits) + 8) * scale;
  const Real stop2 = stop * stop;

  auto off_mass = [&] {
    Real s(0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        s += norm2(h(i, j));
      }
    }
    return s;
  };

  int sweep = 0;
  for (; sweep < max_sweeps && off_mass() > stop2; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        Real mag = abs(h(p, q));
        if (mag * mag <= stop2 / Real(n * n)) {
          continue;
        }
        // Phase-rotate so the pivot is real, then apply the classical
        // symmetric rotation.
        Complex phase = h(p, q) / mag;  // e^{i phi}
        Complex phase_conj = conj(phase);
        Real theta = (h(q, q).re - h(p, p).re) / (2 * mag);
        Real t = 1 / (abs(theta) + sqrt(theta * theta + 1));
        if (theta < 0) {
          t = -t;
        }
        Real c = 1 / sqrt(t * t + 1);
        Real s = t * c;

        // U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on coordinates (p, q).
        Complex u_qp = -(phase_conj * s);
        Complex u_qq = phase_conj * c;
        for (std::size_t k = 0; k < n; ++k) {
          Complex hkp = h(k, p);
          Complex hkq = h(k, q);
          h(k, p) = hkp * c + hkq * u_qp;
          h(k, q) = hkp * s + hkq * u_qq;
          Complex vkp = v(k, p);
          Complex vkq = v(k, q);
          v(k, p) = vkp * c + vkq * u_qp;
          v(k, q) = vkp * s + vkq * u_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          Complex hpk = h(p, k);
          Complex hqk = h(q, k);
          h(p, k) = hpk * c + hqk * conj(u_qp);
          h(q, k) = hpk * s + hqk * conj(u_qq);
        }
        h(p, q) = Complex();
        h(q, p) = Complex();
        h(p, p).im = 0;
        h(q, q).im = 0;
      }
    }
  }
  if (off_mass() > stop2) {
    throw NumericalError("Jacobi eigensolver did not converge within the sweep cap");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return h(a, a).re < h(b, b).re; });

  HermitianEigen result;
  result.values.reserve(n);
  result.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    result.values.push_back(h(order[k], order[k]).re);
    result.vectors.set_column(k, v.column(order[k]));
  }
  return result;
}

}  // namespace fusionring
