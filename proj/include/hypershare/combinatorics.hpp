#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hypershare {

using Vertex = std::uint32_t;

constexpr std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Position of a sorted 1-based k-subset in colexicographic order:
/// sum over j of C(c_j - 1, j).
inline std::size_t colex_rank(const std::vector<Vertex>& sorted_subset) {
  std::size_t r = 0;
  for (std::size_t j = 0; j < sorted_subset.size(); ++j)
    r += binomial(static_cast<std::int64_t>(sorted_subset[j]) - 1, static_cast<std::int64_t>(j) + 1);
  return r;
}

/// All k-subsets of {1..n} in colexicographic order, each sorted ascending.
inline std::vector<std::vector<Vertex>> colex_subsets(Vertex n, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  if (k > n) return out;
  std::vector<Vertex> c(k);
  for (std::size_t j = 0; j < k; ++j) c[j] = static_cast<Vertex>(j + 1);
  while (true) {
    out.push_back(c);
    // Advance the lowest position that has room below its right neighbour.
    std::size_t j = 0;
    while (j < k) {
      const Vertex limit = (j + 1 < k) ? c[j + 1] : n + 1;
      if (c[j] + 1 < limit) break;
      ++j;
    }
    if (j == k) break;
    ++c[j];
    for (std::size_t i = 0; i < j; ++i) c[i] = static_cast<Vertex>(i + 1);
  }
  return out;
}

}  // namespace hypershare
