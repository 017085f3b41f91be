#include "sic/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace sic {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Multiplicative form; each partial product is itself a binomial so the
  // division is exact.  128-bit intermediates avoid spurious saturation.
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t subset_rank(const std::vector<std::uint32_t>& subset, std::uint32_t n) {
  const auto k = static_cast<std::uint32_t>(subset.size());
  std::uint64_t rank = 0;
  std::uint32_t prev = 0;  // next candidate value
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t v = prev; v < subset[i]; ++v) rank = sat_add(rank, binomial(n - 1 - v, k - 1 - i));
    prev = subset[i] + 1;
  }
  return rank;
}

std::vector<std::uint32_t> subset_unrank(std::uint64_t rank, std::uint32_t k, std::uint32_t n) {
  std::vector<std::uint32_t> out;
  out.reserve(k);
  std::uint32_t v = 0;
  for (std::uint32_t i = 0; i < k; ++i) {
    for (;; ++v) {
      const std::uint64_t block = binomial(n - 1 - v, k - 1 - i);
      if (rank < block) break;
      rank -= block;
    }
    out.push_back(v++);
  }
  return out;
}

bool next_subset(std::vector<std::uint32_t>& subset, std::uint32_t n) {
  const auto k = static_cast<std::uint32_t>(subset.size());
  std::uint32_t i = k;
  while (i > 0 && subset[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return false;
  ++subset[i - 1];
  for (std::uint32_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

std::vector<std::vector<std::uint32_t>> subsets_by_size(std::uint32_t n, std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t k = lo; k <= hi && k <= n; ++k) {
    std::vector<std::uint32_t> s(k);
    std::iota(s.begin(), s.end(), 0u);
    do {
      out.push_back(s);
    } while (next_subset(s, n));
  }
  return out;
}

std::vector<std::uint32_t> complement_of(const std::vector<std::uint32_t>& exclude, std::uint32_t n) {
  std::vector<std::uint32_t> out;
  out.reserve(n - exclude.size());
  std::size_t e = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (e < exclude.size() && exclude[e] == v) {
      ++e;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace sic
