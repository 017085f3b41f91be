#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace sic {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// Saturating arithmetic: any overflow yields kSaturated.
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b);

/// C(n, k), saturating at kSaturated.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Number of k-subsets of {0..n-1} that precede `subset` (sorted ascending) in
/// lexicographic order.
std::uint64_t subset_rank(const std::vector<std::uint32_t>& subset, std::uint32_t n);

/// Inverse of subset_rank.
std::vector<std::uint32_t> subset_unrank(std::uint64_t rank, std::uint32_t k, std::uint32_t n);

/// Advances a sorted k-subset of {0..n-1} to its lexicographic successor.
/// Returns false (leaving the subset unspecified) after the last one.
bool next_subset(std::vector<std::uint32_t>& subset, std::uint32_t n);

/// Every subset of {0..n-1} with size in [lo, hi], ordered by size and then
/// lexicographically.
std::vector<std::vector<std::uint32_t>> subsets_by_size(std::uint32_t n, std::uint32_t lo, std::uint32_t hi);

/// Elements of {0..n-1} not in the sorted `exclude`.
std::vector<std::uint32_t> complement_of(const std::vector<std::uint32_t>& exclude, std::uint32_t n);

}  // namespace sic
