#include "sic/outcome.hpp"

#include "sic/error.hpp"

#include <algorithm>
#include <string>

namespace sic {

OutcomeFunction::OutcomeFunction(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) throw Error(ErrorKind::ParameterOutOfRange, "outcome function needs at least two labels");
  const int top = labels_.back();
  if (std::find(labels_.begin(), labels_.end() - 1, top) != labels_.end() - 1)
    throw Error(ErrorKind::ParameterOutOfRange, "saturated label " + std::to_string(top) + " repeats a lower label");
}

OutcomeFunction OutcomeFunction::threshold(std::uint32_t u) {
  if (u < 1) throw Error(ErrorKind::ParameterOutOfRange, "threshold must be at least 1");
  std::vector<int> labels(u + 1, 0);
  labels.back() = 1;
  return OutcomeFunction(std::move(labels));
}

OutcomeFunction OutcomeFunction::adder(std::uint32_t l) {
  if (l < 1) throw Error(ErrorKind::ParameterOutOfRange, "adder level must be at least 1");
  std::vector<int> labels(l + 1);
  for (std::uint32_t i = 0; i <= l; ++i) labels[i] = static_cast<int>(i);
  return OutcomeFunction(std::move(labels));
}

OutcomeFunction OutcomeFunction::quantizer(const std::vector<std::uint32_t>& range_ends) {
  if (range_ends.size() < 2 || range_ends.front() != 0)
    throw Error(ErrorKind::ParameterOutOfRange, "quantizer ranges must start at 0 and have at least one range");
  for (std::size_t i = 1; i < range_ends.size(); ++i)
    if (range_ends[i] <= range_ends[i - 1])
      throw Error(ErrorKind::ParameterOutOfRange, "quantizer range ends must be strictly increasing");
  const std::size_t k = range_ends.size() - 1;
  const std::uint32_t level = range_ends[k - 1] + 1;
  std::vector<int> labels(level + 1, 0);
  std::size_t range = 1;
  for (std::uint32_t n = 1; n <= level; ++n) {
    while (n > range_ends[range]) ++range;
    labels[n] = static_cast<int>(range);
  }
  return OutcomeFunction(std::move(labels));
}

bool OutcomeFunction::is_threshold() const {
  return std::all_of(labels_.begin(), labels_.end() - 1, [&](int v) { return v == labels_.front(); });
}

}  // namespace sic
