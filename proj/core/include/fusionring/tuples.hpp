#pragma once

#include "fusionring/ring.hpp"

#include <vector>

namespace fusionring {

/// Calls fn for every nondecreasing n-tuple over {0..k-1} (multisets), in
/// lexicographic order.
template <typename Fn>
void for_each_multiset(std::size_t k, std::size_t n, Fn&& fn) {
  if (k == 0) {
    return;
  }
  std::vector<Index> t(n, 0);
  while (true) {
    fn(static_cast<const std::vector<Index>&>(t));
    std::size_t pos = n;
    while (pos > 0 && t[pos - 1] == k - 1) {
      --pos;
    }
    if (pos == 0) {
      return;
    }
    const Index next = t[pos - 1] + 1;
    for (std::size_t q = pos - 1; q < n; ++q) {
      t[q] = next;
    }
  }
}

/// Calls fn for every n-tuple over {0..k-1}, in lexicographic order.
template <typename Fn>
void for_each_tuple(std::size_t k, std::size_t n, Fn&& fn) {
  if (k == 0) {
    return;
  }
  std::vector<Index> t(n, 0);
  while (true) {
    fn(static_cast<const std::vector<Index>&>(t));
    std::size_t pos = n;
    while (pos > 0 && t[pos - 1] == k - 1) {
      t[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) {
      return;
    }
    ++t[pos - 1];
  }
}

inline std::vector<long> to_long(const std::vector<Index>& v) {
  return std::vector<long>(v.begin(), v.end());
}

}  // namespace fusionring
