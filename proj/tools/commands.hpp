#pragma once

// Command implementations behind the `sic` executable.  Each returns the
// process exit code and writes data to `out`, diagnostics to `err`.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sic::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

enum class Format { Table, Csv, Json };

/// Parses "table", "csv" or "json".
std::optional<Format> parse_format(const std::string& text);

/// Inclusive parameter range; "a..b" or a single value "a".
struct Range {
  std::uint32_t lo = 0, hi = 0;
};
std::optional<Range> parse_range(const std::string& text);

struct BoundsRequest {
  std::string kind;
  std::string asymptotic;  // formula name for kind "asymptotic"
  std::optional<Range> z, u, s, l;
  Format format = Format::Table;
};

int cmd_bounds(const BoundsRequest& request, std::ostream& out, std::ostream& err);

int cmd_construct(std::uint32_t q, std::uint32_t k, std::uint32_t r, const std::string& out_path, std::ostream& out,
                  std::ostream& err);

/// `property` is the property name followed by its arguments, e.g.
/// {"d-code", "3", "2"} or {"design", "2", "4", "at-most", "0,1,2"}.
int cmd_verify(const std::string& in_path, const std::vector<std::string>& property, std::uint64_t budget,
               bool serial, std::ostream& out, std::ostream& err);

int cmd_search(std::uint32_t s, std::uint32_t m, std::uint32_t q_max, std::ostream& out, std::ostream& err);

int cmd_examples(std::uint64_t budget, std::ostream& out, std::ostream& err);

/// Budget from the SIC_BUDGET environment variable, else the library default.
std::uint64_t default_budget();

}  // namespace sic::cli
