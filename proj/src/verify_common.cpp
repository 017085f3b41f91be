#include "verify_detail.hpp"

#include "sic/combinatorics.hpp"
#include "sic/error.hpp"

#include <algorithm>
#include <string>

namespace sic::detail {

namespace {

[[noreturn]] void out_of_range(const std::string& msg) { throw Error(ErrorKind::ParameterOutOfRange, msg); }

std::string num(std::uint64_t v) { return std::to_string(v); }

// Sets of the list containing a given set of size `size`, itself included.
std::uint64_t superset_count(std::uint32_t t, std::uint32_t size, std::uint32_t s) {
  std::uint64_t n = 0;
  for (std::uint32_t big = size; big <= s; ++big) n = sat_add(n, binomial(t - size, big - size));
  return n;
}

}  // namespace

void require_cover_free_params(const BinaryCode& code, std::uint32_t z, std::uint32_t u) {
  if (z < 1 || u < 1) out_of_range("cover-free check needs z >= 1 and u >= 1");
  if (static_cast<std::uint64_t>(z) + u > code.cols())
    out_of_range("z+u=" + num(static_cast<std::uint64_t>(z) + u) + " exceeds t=" + num(code.cols()));
}

void require_d_code_params(const BinaryCode& code, std::uint32_t s, std::uint32_t l) {
  if (!(1 <= l && l < s && s < code.cols()))
    out_of_range("d-code check needs 1 <= l < s < t, got l=" + num(l) + " s=" + num(s) + " t=" + num(code.cols()));
}

void require_threshold_params(const BinaryCode& code, std::uint32_t u, std::uint32_t s, const char* what) {
  if (!(1 <= u && u < s && 2 * static_cast<std::uint64_t>(s) < code.cols()))
    out_of_range(std::string(what) + " check needs 1 <= u < s < t/2, got u=" + num(u) + " s=" + num(s) +
                 " t=" + num(code.cols()));
}

void require_design_params(const BinaryCode& code, const OutcomeFunction& outcome, std::uint32_t s) {
  const std::uint32_t l = outcome.level();
  if (!(1 <= l && l <= s && s < code.cols()))
    out_of_range("design check needs 1 <= l <= s < t, got l=" + num(l) + " s=" + num(s) + " t=" + num(code.cols()));
}

void enforce_budget(std::uint64_t domain, const CheckOptions& options) {
  if (domain > options.budget)
    throw Error(ErrorKind::BudgetExceeded,
                (domain == kSaturated ? std::string("more than 2^64") : num(domain)) + " tuples exceed the budget of " +
                    num(options.budget));
}

std::uint64_t cover_free_domain(std::uint32_t t, std::uint32_t z, std::uint32_t u) {
  return sat_mul(binomial(t, u), binomial(t - u, z));
}

std::uint64_t d_code_domain(std::uint32_t t, std::uint32_t s) { return sat_mul(binomial(t, s), t - s); }

std::uint64_t m_code_offset(std::uint32_t t, std::uint32_t u, std::uint32_t a) {
  std::uint64_t total = 0;
  for (std::uint32_t size = u; size < a; ++size)
    total = sat_add(total, sat_mul(sat_mul(binomial(t, size), size), binomial(t - size, size)));
  return total;
}

std::uint64_t m_code_domain(std::uint32_t t, std::uint32_t s, std::uint32_t u) { return m_code_offset(t, u, s + 1); }

std::uint32_t design_min_size(const OutcomeFunction& outcome, std::uint32_t s, DesignMode mode) {
  if (mode == DesignMode::Exactly) return s;
  return outcome.is_threshold() ? outcome.level() : 0;
}

std::vector<Subset> design_sets(std::uint32_t t, const OutcomeFunction& outcome, std::uint32_t s, DesignMode mode) {
  return subsets_by_size(t, design_min_size(outcome, s, mode), s);
}

std::uint64_t design_domain(std::uint64_t num_sets) {
  if (num_sets < 2) return 0;
  return num_sets % 2 == 0 ? sat_mul(num_sets / 2, num_sets - 1) : sat_mul(num_sets, (num_sets - 1) / 2);
}

std::uint64_t design_pair_rank(std::uint64_t num_sets, std::uint64_t a, std::uint64_t b) {
  // Pairs with first index a' < a: sum of (num_sets - 1 - a').
  return a * (num_sets - 1) - a * (a - 1) / 2 + (b - a - 1);
}

std::uint64_t threshold_set_count(std::uint32_t t, std::uint32_t u, std::uint32_t s) {
  std::uint64_t n = 0;
  for (std::uint32_t k = u; k <= s; ++k) n = sat_add(n, binomial(t, k));
  return n;
}

std::vector<Subset> threshold_sets(std::uint32_t t, std::uint32_t u, std::uint32_t s) {
  return subsets_by_size(t, u, s);
}

std::uint64_t threshold_domain(std::uint32_t t, std::uint32_t u, std::uint32_t s) {
  std::uint64_t total = 0, upto = 0;
  for (std::uint32_t k = u; k <= s; ++k) {
    upto = sat_add(upto, binomial(t, k));
    total = sat_add(total, sat_mul(binomial(t, k), upto - 1));
  }
  return total;
}

std::uint64_t bar_domain(std::uint32_t t, std::uint32_t u, std::uint32_t s) {
  const std::uint64_t n = threshold_set_count(t, u, s);
  if (n == kSaturated) return kSaturated;
  std::uint64_t total = 0;
  for (std::uint32_t k = u; k <= s; ++k) total = sat_add(total, sat_mul(binomial(t, k), n - superset_count(t, k, s)));
  return total;
}

ThresholdPairs::ThresholdPairs(const std::vector<Subset>& sets, std::uint32_t t, std::uint32_t s)
    : end_of_size_(s + 1, 0), prefix_(sets.size() + 1, 0), size_of_(sets.size()) {
  (void)t;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    size_of_[i] = static_cast<std::uint32_t>(sets[i].size());
    end_of_size_[size_of_[i]] = i + 1;
  }
  for (std::uint32_t k = 1; k <= s; ++k) end_of_size_[k] = std::max(end_of_size_[k], end_of_size_[k - 1]);
  for (std::size_t i = 0; i < sets.size(); ++i) prefix_[i + 1] = sat_add(prefix_[i], smaller_or_equal(i) - 1);
  domain_ = prefix_.back();
}

std::uint64_t ThresholdPairs::smaller_or_equal(std::uint64_t a) const { return end_of_size_[size_of_[a]]; }

std::uint64_t ThresholdPairs::rank(std::uint64_t a, std::uint64_t b) const {
  return prefix_[a] + (b < a ? b : b - 1);
}

BarPairs::BarPairs(const std::vector<Subset>& sets, std::uint32_t t, std::uint32_t s)
    : sets_(sets), prefix_(sets.size() + 1, 0) {
  std::vector<std::uint64_t> valid_by_size(s + 1, 0);
  for (std::uint32_t k = 0; k <= s; ++k) valid_by_size[k] = sets.size() - std::min<std::uint64_t>(sets.size(), superset_count(t, k, s));
  for (std::size_t i = 0; i < sets.size(); ++i) prefix_[i + 1] = prefix_[i] + valid_by_size[sets[i].size()];
  domain_ = prefix_.back();
}

std::uint64_t BarPairs::rank(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t supersets_before = 0;
  for (std::uint64_t i = 0; i < b; ++i)
    if (is_subset(sets_[a], sets_[i])) ++supersets_before;
  return prefix_[a] + (b - supersets_before);
}

bool is_subset(const Subset& a, const Subset& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace sic::detail
