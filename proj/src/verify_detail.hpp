#pragma once

// Parameter checks, domain sizes and tuple ranks shared by the reference and
// the parallel checkers.  Both must agree on these exactly.

#include "sic/codes.hpp"
#include "sic/outcome.hpp"
#include "sic/verify.hpp"

#include <cstdint>
#include <vector>

namespace sic::detail {

using Subset = std::vector<std::uint32_t>;

void require_cover_free_params(const BinaryCode& code, std::uint32_t z, std::uint32_t u);
void require_d_code_params(const BinaryCode& code, std::uint32_t s, std::uint32_t l);
/// 1 <= u < s and 2s < t; shared by the m-code and both threshold checkers.
void require_threshold_params(const BinaryCode& code, std::uint32_t u, std::uint32_t s, const char* what);
void require_design_params(const BinaryCode& code, const OutcomeFunction& outcome, std::uint32_t s);

void enforce_budget(std::uint64_t domain, const CheckOptions& options);

std::uint64_t cover_free_domain(std::uint32_t t, std::uint32_t z, std::uint32_t u);
std::uint64_t d_code_domain(std::uint32_t t, std::uint32_t s);
/// Tuples of the m-code enumeration with |U| < a.
std::uint64_t m_code_offset(std::uint32_t t, std::uint32_t u, std::uint32_t a);
std::uint64_t m_code_domain(std::uint32_t t, std::uint32_t s, std::uint32_t u);

/// Smallest candidate size of check_design.
std::uint32_t design_min_size(const OutcomeFunction& outcome, std::uint32_t s, DesignMode mode);
/// Candidate sets of check_design in enumeration order.
std::vector<Subset> design_sets(std::uint32_t t, const OutcomeFunction& outcome, std::uint32_t s, DesignMode mode);
/// Saturating; the candidate count itself is checked against the budget first.
std::uint64_t design_domain(std::uint64_t num_sets);
std::uint64_t design_pair_rank(std::uint64_t num_sets, std::uint64_t a, std::uint64_t b);

/// Candidate sets of the threshold checkers: sizes u..s.
std::uint64_t threshold_set_count(std::uint32_t t, std::uint32_t u, std::uint32_t s);
std::vector<Subset> threshold_sets(std::uint32_t t, std::uint32_t u, std::uint32_t s);
/// Pair-domain sizes computed from binomials, before any list is built.
std::uint64_t threshold_domain(std::uint32_t t, std::uint32_t u, std::uint32_t s);
std::uint64_t bar_domain(std::uint32_t t, std::uint32_t u, std::uint32_t s);

/// Rank bookkeeping for ordered pairs (a, b) of a size-sorted set list.
class ThresholdPairs {
 public:
  ThresholdPairs(const std::vector<Subset>& sets, std::uint32_t t, std::uint32_t s);

  /// Sets with size <= |sets[a]| occupy indices [0, smaller_or_equal(a)).
  std::uint64_t smaller_or_equal(std::uint64_t a) const;
  std::uint64_t domain() const { return domain_; }
  std::uint64_t rank(std::uint64_t a, std::uint64_t b) const;

 private:
  std::vector<std::uint64_t> end_of_size_;  // indexed by size
  std::vector<std::uint64_t> prefix_;       // valid pairs with first index < a
  std::vector<std::uint32_t> size_of_;
  std::uint64_t domain_ = 0;
};

class BarPairs {
 public:
  BarPairs(const std::vector<Subset>& sets, std::uint32_t t, std::uint32_t s);

  std::uint64_t domain() const { return domain_; }
  /// Rank of (a, b); scans the list for supersets of sets[a] before b.
  std::uint64_t rank(std::uint64_t a, std::uint64_t b) const;

 private:
  const std::vector<Subset>& sets_;
  std::vector<std::uint64_t> prefix_;
  std::uint64_t domain_ = 0;
};

bool is_subset(const Subset& a, const Subset& b);

}  // namespace sic::detail
