#pragma once

// Small permutation groups enumerated by brute force, used as an independent
// oracle for the J invariants of Rep(G) rings.

#include "fusionring/report.hpp"
#include "fusionring/ring.hpp"
#include "fusionring/spectra.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fusionring {

/// Permutation of {0..degree-1}; p[x] is the image of x.
using Perm = std::vector<std::uint8_t>;

inline constexpr std::size_t kMaxGroupOrder = 10000;
inline constexpr std::size_t kMaxPermDegree = 16;

/// Parses cycle notation on the points 1..degree, e.g. "(12)(34)" or
/// "(1 2 3)". Without separators each digit is one point. "()" is the
/// identity. Throws std::invalid_argument on malformed input.
Perm parse_cycles(const std::string& text, std::size_t degree);

/// Cycle notation with 1-based points; the identity prints as "()".
std::string cycle_string(const Perm& p);

/// (a * b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
std::size_t element_order(const Perm& p);

struct PermGroup {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;                   // identity first, then breadth-first order
  std::vector<std::vector<std::size_t>> classes;  // element indices; identity class first
  std::vector<std::size_t> centralizer_orders;  // per class
  std::vector<std::size_t> class_of;            // per element

  std::size_t order() const { return elements.size(); }
  std::size_t index_of(const Perm& p) const;
  std::size_t product(std::size_t a, std::size_t b) const;
  std::size_t inverse_of(std::size_t a) const;

 private:
  friend PermGroup enumerate(std::vector<Perm> generators);
  std::map<Perm, std::size_t> lookup_;
};

/// Breadth-first closure of the generators with conjugacy classes as
/// conjugation orbits. Throws DomainError beyond kMaxGroupOrder elements.
PermGroup enumerate(std::vector<Perm> generators);

/// Groups with ready-made generators.
PermGroup symmetric_group_3();
PermGroup cyclic_group(std::size_t n);
PermGroup dihedral_group_4();

/// |{(g_1..g_n) : g_i in C_i, g_1 ... g_n = 1}| for class indices C_1..C_n.
std::uint64_t count_tuples(const PermGroup& group, const std::vector<std::size_t>& classes);

/// Orbits of the solution set under simultaneous conjugation.
struct OrbitDivisibility {
  std::vector<std::size_t> orbit_sizes;
  bool divisible = true;  // every orbit size is divisible by every |C_i|
};

OrbitDivisibility orbit_divisibility(const PermGroup& group, const std::vector<std::size_t>& classes);

/// A group together with its representation ring and the bijection between
/// characters of that ring and conjugacy classes.
struct RepGOracle {
  std::string name;
  PermGroup group;
  FusionRing ring;
  /// Expected character values: class_characters[c][i] = chi_{b_i}(g) for g in class c.
  std::vector<std::vector<Complex>> class_characters;
};

/// Rep(S3) with classes e, transpositions, 3-cycles; must be evaluated inside
/// a PrecisionScope.
RepGOracle s3_oracle();
/// Rep(Z/n) = cyclic_<n>, generated by the n-cycle.
RepGOracle cyclic_oracle(std::size_t n);

/// Maps each character row of the spectrum to its conjugacy class. Throws
/// StructuralError when no bijection matches the class character values.
std::vector<std::size_t> match_classes(const RepGOracle& oracle, const Spectrum& spectrum,
                                       const Settings& settings = {});

/// Residual reports: |dimZ - |class|| over all characters, then
/// |J_{n,0}/dimC - count_tuples| over all class tuples for each n, then the
/// orbit divisibility check (residual = number of failing tuples).
std::vector<ResidualReport> crosscheck_repG(const RepGOracle& oracle, const Spectrum& spectrum,
                                            const std::vector<int>& ns,
                                            const Settings& settings = {});

}  // namespace fusionring
