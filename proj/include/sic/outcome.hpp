#pragma once

#include <cstdint>
#include <vector>

namespace sic {

/// Saturating outcome map for a symmetric group-testing model.  A test whose
/// pool meets the candidate set in n items reports labels[min(n, l)], where
/// l = labels.size() - 1.  The saturated label must differ from every other
/// label; labels below the threshold may repeat.
class OutcomeFunction {
 public:
  /// Throws ParameterOutOfRange if fewer than two labels are given or the last
  /// label repeats an earlier one.
  explicit OutcomeFunction(std::vector<int> labels);

  /// Binary threshold test: 0 below u, 1 from u on.
  static OutcomeFunction threshold(std::uint32_t u);
  /// Additive model saturating at l: labels 0, 1, ..., l.
  static OutcomeFunction adder(std::uint32_t l);
  /// Adder followed by a quantizer with range ends 0 = r_0 < r_1 < ... < r_k.
  /// Count n in (r_{i-1}, r_i] reports i and count 0 reports 0.  The
  /// saturation point is r_{k-1} + 1, the smallest count that reports k.
  static OutcomeFunction quantizer(const std::vector<std::uint32_t>& range_ends);

  std::uint32_t level() const noexcept { return static_cast<std::uint32_t>(labels_.size() - 1); }
  const std::vector<int>& labels() const noexcept { return labels_; }

  int operator()(std::uint32_t n) const { return labels_[n < level() ? n : level()]; }

  /// True when all labels below saturation coincide, i.e. the map is a binary
  /// threshold test up to relabeling.
  bool is_threshold() const;

 private:
  std::vector<int> labels_;
};

}  // namespace sic
