#include "fusionring/ring.hpp"

#include "fusionring/errors.hpp"

#include <sstream>

namespace fusionring {

namespace {

std::string tuple_str(std::initializer_list<Index> idx) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (Index k : idx) {
    os << (first ? "" : ",") << k;
    first = false;
  }
  os << ')';
  return os.str();
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw StructuralError("integer overflow while checking associativity");
  }
  return out;
}

Coeff checked_add(Coeff a, Coeff b) {
  Coeff out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw StructuralError("integer overflow while checking associativity");
  }
  return out;
}

}  // namespace

FusionRing::FusionRing(std::size_t rank, std::vector<Index> dual, std::vector<Coeff> tensor,
                       std::string name)
    : rank_(rank), dual_(std::move(dual)), tensor_(std::move(tensor)), name_(std::move(name)) {
  if (rank_ == 0) {
    throw StructuralError("rank must be positive");
  }
  if (dual_.size() != rank_) {
    throw StructuralError("dual list has " + std::to_string(dual_.size()) +
                          " entries, expected rank " + std::to_string(rank_));
  }
  if (tensor_.size() != rank_ * rank_ * rank_) {
    throw StructuralError("tensor has " + std::to_string(tensor_.size()) +
                          " entries, expected rank^3 = " + std::to_string(rank_ * rank_ * rank_));
  }
  for (Index i = 0; i < rank_; ++i) {
    if (dual_[i] >= rank_) {
      throw StructuralError("dual(" + std::to_string(i) + ") = " + std::to_string(dual_[i]) +
                            " is out of range");
    }
  }
}

bool FusionRing::is_commutative() const {
  for (Index i = 0; i < rank_; ++i) {
    for (Index j = i + 1; j < rank_; ++j) {
      for (Index m = 0; m < rank_; ++m) {
        if (N(i, j, m) != N(j, i, m)) {
          return false;
        }
      }
    }
  }
  return true;
}

FusionRing FusionRing::with_entry(Index i, Index j, Index m, Coeff value) const {
  FusionRing copy = *this;
  copy.tensor_.at((i * rank_ + j) * rank_ + m) = value;
  return copy;
}

FusionRing FusionRing::renamed(std::string name) const {
  FusionRing copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::string to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::Nonnegativity:
      return "nonnegativity";
    case AxiomKind::DualInvolution:
      return "dual-involution";
    case AxiomKind::DualUnit:
      return "dual-unit";
    case AxiomKind::LeftUnit:
      return "left-unit";
    case AxiomKind::RightUnit:
      return "right-unit";
    case AxiomKind::Duality:
      return "duality";
    case AxiomKind::Associativity:
      return "associativity";
    case AxiomKind::FrobeniusSymmetry:
      return "frobenius-symmetry";
  }
  return "unknown";
}

std::vector<AxiomViolation> validate(const FusionRing& ring) {
  std::vector<AxiomViolation> out;
  const std::size_t r = ring.rank();
  auto N = [&](Index i, Index j, Index m) { return ring.N(i, j, m); };
  auto d = [&](Index i) { return ring.dual(i); };

  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) {
      for (Index m = 0; m < r; ++m) {
        if (N(i, j, m) < 0) {
          out.push_back({AxiomKind::Nonnegativity, {i, j, m},
                         "N" + tuple_str({i, j, m}) + " = " + std::to_string(N(i, j, m)) + " < 0"});
        }
      }
    }
  }

  if (d(0) != 0) {
    out.push_back({AxiomKind::DualUnit, {0}, "dual(0) = " + std::to_string(d(0)) + ", expected 0"});
  }
  for (Index i = 0; i < r; ++i) {
    if (d(d(i)) != i) {
      out.push_back({AxiomKind::DualInvolution, {i},
                     "dual(dual(" + std::to_string(i) + ")) = " + std::to_string(d(d(i)))});
    }
  }

  for (Index j = 0; j < r; ++j) {
    for (Index m = 0; m < r; ++m) {
      Coeff expected = j == m ? 1 : 0;
      if (N(0, j, m) != expected) {
        out.push_back({AxiomKind::LeftUnit, {0, j, m},
                       "N" + tuple_str({0, j, m}) + " = " + std::to_string(N(0, j, m)) +
                           ", expected " + std::to_string(expected)});
      }
      if (N(j, 0, m) != expected) {
        out.push_back({AxiomKind::RightUnit, {j, 0, m},
                       "N" + tuple_str({j, 0, m}) + " = " + std::to_string(N(j, 0, m)) +
                           ", expected " + std::to_string(expected)});
      }
    }
  }

  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) {
      Coeff expected = j == d(i) ? 1 : 0;
      if (N(i, j, 0) != expected) {
        out.push_back({AxiomKind::Duality, {i, j, 0},
                       "N" + tuple_str({i, j, 0}) + " = " + std::to_string(N(i, j, 0)) +
                           ", expected " + std::to_string(expected)});
      }
    }
  }

  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) {
      for (Index k = 0; k < r; ++k) {
        for (Index l = 0; l < r; ++l) {
          Coeff lhs = 0;
          Coeff rhs = 0;
          for (Index m = 0; m < r; ++m) {
            lhs = checked_add(lhs, checked_mul(N(i, j, m), N(m, k, l)));
            rhs = checked_add(rhs, checked_mul(N(j, k, m), N(i, m, l)));
          }
          if (lhs != rhs) {
            out.push_back({AxiomKind::Associativity, {i, j, k, l},
                           "coefficient of b_" + std::to_string(l) + " in (b_" +
                               std::to_string(i) + " b_" + std::to_string(j) + ") b_" +
                               std::to_string(k) + " is " + std::to_string(lhs) +
                               ", in b_" + std::to_string(i) + " (b_" + std::to_string(j) +
                               " b_" + std::to_string(k) + ") it is " + std::to_string(rhs)});
          }
        }
      }
    }
  }

  // The symmetry images only make sense once the dual map is an involution.
  bool dual_ok = d(0) == 0;
  for (Index i = 0; i < r && dual_ok; ++i) {
    dual_ok = d(d(i)) == i;
  }
  if (dual_ok) {
    for (Index i = 0; i < r; ++i) {
      for (Index j = 0; j < r; ++j) {
        for (Index m = 0; m < r; ++m) {
          const Coeff v = N(i, j, m);
          const Coeff images[3] = {N(j, d(m), d(i)), N(d(m), i, d(j)), N(d(j), d(i), d(m))};
          for (Coeff w : images) {
            if (w != v) {
              out.push_back({AxiomKind::FrobeniusSymmetry, {i, j, m},
                             "N" + tuple_str({i, j, m}) + " = " + std::to_string(v) +
                                 " but its symmetry images are " + std::to_string(images[0]) +
                                 ", " + std::to_string(images[1]) + ", " +
                                 std::to_string(images[2])});
              break;
            }
          }
        }
      }
    }
  }
  return out;
}

AxiomError::AxiomError(std::vector<AxiomViolation> violations)
    : std::runtime_error("fusion ring axioms violated (" + std::to_string(violations.size()) +
                         " witness" + (violations.size() == 1 ? "" : "es") + "); first: " +
                         (violations.empty() ? std::string("none") : violations.front().detail)),
      violations_(std::move(violations)) {}

void require_valid(const FusionRing& ring) {
  auto violations = validate(ring);
  if (!violations.empty()) {
    throw AxiomError(std::move(violations));
  }
}

RingElement RingElement::basis(std::size_t rank, Index i) {
  std::vector<Coeff> c(rank, 0);
  c.at(i) = 1;
  return RingElement(std::move(c));
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  if (a.size() != b.size()) {
    throw StructuralError("ring elements of different length");
  }
  std::vector<Coeff> c(a.size());
  for (Index i = 0; i < a.size(); ++i) {
    c[i] = a[i] + b[i];
  }
  return RingElement(std::move(c));
}

RingElement multiply(const FusionRing& ring, const RingElement& a, const RingElement& b) {
  const std::size_t r = ring.rank();
  if (a.size() != r || b.size() != r) {
    throw StructuralError("ring element length does not match ring rank");
  }
  std::vector<Coeff> c(r, 0);
  for (Index i = 0; i < r; ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (Index j = 0; j < r; ++j) {
      if (b[j] == 0) {
        continue;
      }
      for (Index m = 0; m < r; ++m) {
        c[m] += a[i] * b[j] * ring.N(i, j, m);
      }
    }
  }
  return RingElement(std::move(c));
}

RingElement star(const FusionRing& ring, const RingElement& a) {
  std::vector<Coeff> c(a.size(), 0);
  for (Index i = 0; i < a.size(); ++i) {
    c[ring.dual(i)] += a[i];
  }
  return RingElement(std::move(c));
}

Coeff trace(const RingElement& a) { return a[0]; }

Coeff inner(const FusionRing& ring, const RingElement& a, const RingElement& b) {
  return trace(multiply(ring, a, star(ring, b)));
}

IntMatrix left_matrix(const FusionRing& ring, Index i) {
  const std::size_t r = ring.rank();
  IntMatrix L(r, std::vector<Coeff>(r, 0));
  for (Index m = 0; m < r; ++m) {
    for (Index j = 0; j < r; ++j) {
      L[m][j] = ring.N(i, j, m);
    }
  }
  return L;
}

IntMatrix right_matrix(const FusionRing& ring, Index i) {
  const std::size_t r = ring.rank();
  IntMatrix R(r, std::vector<Coeff>(r, 0));
  for (Index m = 0; m < r; ++m) {
    for (Index j = 0; j < r; ++j) {
      R[m][j] = ring.N(j, i, m);
    }
  }
  return R;
}

FusionRing tensor_product(const FusionRing& a, const FusionRing& b, std::string name) {
  const std::size_t ra = a.rank();
  const std::size_t rb = b.rank();
  const std::size_t r = ra * rb;
  std::vector<Index> dual(r);
  std::vector<Coeff> tensor(r * r * r, 0);
  for (Index i1 = 0; i1 < ra; ++i1) {
    for (Index i2 = 0; i2 < rb; ++i2) {
      const Index i = i1 * rb + i2;
      dual[i] = a.dual(i1) * rb + b.dual(i2);
      for (Index j1 = 0; j1 < ra; ++j1) {
        for (Index j2 = 0; j2 < rb; ++j2) {
          const Index j = j1 * rb + j2;
          for (Index m1 = 0; m1 < ra; ++m1) {
            const Coeff x = a.N(i1, j1, m1);
            if (x == 0) {
              continue;
            }
            for (Index m2 = 0; m2 < rb; ++m2) {
              tensor[(i * r + j) * r + m1 * rb + m2] = x * b.N(i2, j2, m2);
            }
          }
        }
      }
    }
  }
  if (name.empty()) {
    name = a.name() + "_x_" + b.name();
  }
  return FusionRing(r, std::move(dual), std::move(tensor), std::move(name));
}

}  // namespace fusionring
