#include "fusionring/catalog.hpp"

#include "fusionring/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace fusionring {

namespace {

using Products = std::map<std::pair<Index, Index>, std::map<Index, Coeff>>;

// Fills the unit rows automatically; every other product must be listed.
FusionRing from_products(std::size_t r, std::vector<Index> dual, const Products& products,
                         std::string name) {
  std::vector<Coeff> tensor(r * r * r, 0);
  for (Index j = 0; j < r; ++j) {
    tensor[(0 * r + j) * r + j] = 1;
    tensor[(j * r + 0) * r + j] = 1;
  }
  for (const auto& [ij, terms] : products) {
    for (const auto& [m, c] : terms) {
      tensor[(ij.first * r + ij.second) * r + m] = c;
    }
  }
  FusionRing ring(r, std::move(dual), std::move(tensor), std::move(name));
  require_valid(ring);
  return ring;
}

FusionRing fibonacci() {
  return from_products(2, {0, 1}, {{{1, 1}, {{0, 1}, {1, 1}}}}, "fibonacci");
}

FusionRing ising() {
  // basis 1, psi, sigma
  return from_products(3, {0, 1, 2},
                       {{{1, 1}, {{0, 1}}},
                        {{1, 2}, {{2, 1}}},
                        {{2, 1}, {{2, 1}}},
                        {{2, 2}, {{0, 1}, {1, 1}}}},
                       "ising");
}

FusionRing rep_s3() {
  // basis 1, sign, standard
  return from_products(3, {0, 1, 2},
                       {{{1, 1}, {{0, 1}}},
                        {{1, 2}, {{2, 1}}},
                        {{2, 1}, {{2, 1}}},
                        {{2, 2}, {{0, 1}, {1, 1}, {2, 1}}}},
                       "rep_s3");
}

FusionRing cyclic(std::size_t n) {
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      table[i][j] = (i + j) % n;
    }
  }
  return group_ring(table, "cyclic_" + std::to_string(n));
}

FusionRing group_s3() {
  // Permutations of {0,1,2} in lexicographic order of their image vectors;
  // the identity comes first. Product is composition (g h)(x) = g(h(x)).
  std::vector<std::vector<Index>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const std::size_t n = perms.size();
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      std::vector<Index> c(3);
      for (Index x = 0; x < 3; ++x) {
        c[x] = perms[a][perms[b][x]];
      }
      table[a][b] = static_cast<Index>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return group_ring(table, "group_s3");
}

}  // namespace

FusionRing group_ring(const std::vector<std::vector<Index>>& table, std::string name) {
  const std::size_t n = table.size();
  std::vector<Index> dual(n, 0);
  std::vector<Coeff> tensor(n * n * n, 0);
  for (Index a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw StructuralError("group multiplication table is not square");
    }
    for (Index b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw StructuralError("group multiplication table entry out of range");
      }
      tensor[(a * n + b) * n + table[a][b]] = 1;
      if (table[a][b] == 0) {
        dual[a] = b;
      }
    }
  }
  FusionRing ring(n, std::move(dual), std::move(tensor), std::move(name));
  require_valid(ring);
  return ring;
}

FusionRing catalog(const std::string& name) {
  if (name == "fibonacci") {
    return fibonacci();
  }
  if (name == "ising") {
    return ising();
  }
  if (name == "rep_s3") {
    return rep_s3();
  }
  if (name == "group_s3") {
    return group_s3();
  }
  if (name == "fib_x_fib") {
    return tensor_product(fibonacci(), fibonacci(), "fib_x_fib");
  }
  if (name == "fib_x_cyclic_5") {
    return tensor_product(fibonacci(), cyclic(5), "fib_x_cyclic_5");
  }
  const std::string prefix = "cyclic_";
  if (name.rfind(prefix, 0) == 0) {
    const std::string digits = name.substr(prefix.size());
    if (!digits.empty() && digits.size() <= 2 &&
        digits.find_first_not_of("0123456789") == std::string::npos) {
      const auto n = std::stoul(digits);
      if (n >= 1 && n <= 32) {
        return cyclic(n);
      }
    }
  }
  throw std::out_of_range("unknown catalog ring '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"fibonacci", "ising", "rep_s3", "cyclic_3", "fib_x_fib", "fib_x_cyclic_5", "group_s3"};
}

}  // namespace fusionring
