#pragma once

// Fusion ring data model: a Z_{>=0}-based ring with basis b_0 = 1, ..., b_{r-1},
// a duality involution i -> i*, and structure constants b_i b_j = sum_m N[i][j][m] b_m.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionring {

using Index = std::size_t;
using Coeff = std::int64_t;

class FusionRing {
 public:
  FusionRing() = default;

  /// Builds a ring from a dense r*r*r tensor laid out as N[(i*r + j)*r + m].
  /// Throws StructuralError on shape mismatch or out-of-range duals; the ring
  /// axioms are not checked here (see validate()).
  FusionRing(std::size_t rank, std::vector<Index> dual, std::vector<Coeff> tensor,
             std::string name = {});

  std::size_t rank() const { return rank_; }
  Index unit() const { return 0; }
  Index dual(Index i) const { return dual_[i]; }
  const std::vector<Index>& duals() const { return dual_; }
  const std::string& name() const { return name_; }

  Coeff N(Index i, Index j, Index m) const { return tensor_[(i * rank_ + j) * rank_ + m]; }
  const std::vector<Coeff>& tensor() const { return tensor_; }

  bool is_commutative() const;

  /// Copy with one tensor entry replaced; used to build corrupted inputs.
  FusionRing with_entry(Index i, Index j, Index m, Coeff value) const;
  FusionRing renamed(std::string name) const;

  friend bool operator==(const FusionRing& a, const FusionRing& b) {
    return a.rank_ == b.rank_ && a.dual_ == b.dual_ && a.tensor_ == b.tensor_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Index> dual_;
  std::vector<Coeff> tensor_;
  std::string name_;
};

enum class AxiomKind {
  Nonnegativity,
  DualInvolution,
  DualUnit,
  LeftUnit,
  RightUnit,
  Duality,
  Associativity,
  FrobeniusSymmetry,
};

std::string to_string(AxiomKind kind);

/// One violated identity together with the index tuple that witnesses it.
struct AxiomViolation {
  AxiomKind kind;
  std::vector<Index> indices;
  std::string detail;
};

/// Checks every fusion ring axiom exhaustively and returns all violations.
/// Throws StructuralError if an associativity sum overflows 64-bit integers.
std::vector<AxiomViolation> validate(const FusionRing& ring);

/// Throws AxiomError (carrying the full violation list) unless the ring is valid.
void require_valid(const FusionRing& ring);

class AxiomError : public std::runtime_error {
 public:
  explicit AxiomError(std::vector<AxiomViolation> violations);
  const std::vector<AxiomViolation>& violations() const { return violations_; }

 private:
  std::vector<AxiomViolation> violations_;
};

/// Element of the ring in the basis b_i.
class RingElement {
 public:
  explicit RingElement(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {}
  static RingElement basis(std::size_t rank, Index i);
  static RingElement zero(std::size_t rank) { return RingElement(std::vector<Coeff>(rank, 0)); }

  std::size_t size() const { return coeffs_.size(); }
  Coeff operator[](Index i) const { return coeffs_[i]; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  std::vector<Coeff> coeffs_;
};

RingElement operator+(const RingElement& a, const RingElement& b);

RingElement multiply(const FusionRing& ring, const RingElement& a, const RingElement& b);

/// a* = sum_i a_i b_{i*}.
RingElement star(const FusionRing& ring, const RingElement& a);

/// tau(a): the coefficient of b_0.
Coeff trace(const RingElement& a);

/// (a, b) = tau(a b*).
Coeff inner(const FusionRing& ring, const RingElement& a, const RingElement& b);

using IntMatrix = std::vector<std::vector<Coeff>>;

/// Matrix of left multiplication by b_i: L[m][j] = N[i][j][m].
IntMatrix left_matrix(const FusionRing& ring, Index i);

/// Matrix of right multiplication by b_i: R[m][j] = N[j][i][m].
IntMatrix right_matrix(const FusionRing& ring, Index i);

/// Deligne-style tensor product of two rings; basis index i*r2 + j.
FusionRing tensor_product(const FusionRing& a, const FusionRing& b, std::string name = {});

}  // namespace fusionring
