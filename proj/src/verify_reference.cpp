// Literal checkers: every tuple is tested row by row through BinaryCode::get.

#include "verify_detail.hpp"

#include "sic/combinatorics.hpp"
#include "sic/error.hpp"
#include "sic/verify.hpp"

#include <algorithm>

namespace sic::reference {

namespace {

using detail::Subset;

std::uint32_t ones_on(const BinaryCode& code, std::size_t row, const Subset& cols) {
  std::uint32_t n = 0;
  for (auto c : cols) n += code.get(row, c);
  return n;
}

Subset pick(const Subset& pool, const Subset& positions) {
  Subset out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(pool[p]);
  return out;
}

Subset first_subset(std::uint32_t k) {
  Subset s(k);
  for (std::uint32_t i = 0; i < k; ++i) s[i] = i;
  return s;
}

VerificationReport failed(std::uint64_t checked, Counterexample witness) {
  return {false, std::move(witness), checked};
}

VerificationReport passed(std::uint64_t checked) { return {true, std::nullopt, checked}; }

}  // namespace

VerificationReport check_cover_free(const BinaryCode& code, std::uint32_t z, std::uint32_t u,
                                    const CheckOptions& options) {
  detail::require_cover_free_params(code, z, u);
  const auto t = static_cast<std::uint32_t>(code.cols());
  detail::enforce_budget(detail::cover_free_domain(t, z, u), options);

  std::uint64_t checked = 0;
  Subset U = first_subset(u);
  do {
    const Subset rest = complement_of(U, t);
    Subset pos = first_subset(z);
    do {
      ++checked;
      const Subset Z = pick(rest, pos);
      bool ok = false;
      for (std::size_t i = 0; i < code.rows() && !ok; ++i)
        ok = ones_on(code, i, U) == u && ones_on(code, i, Z) == 0;
      if (!ok) return failed(checked, {U, Z, std::nullopt});
    } while (next_subset(pos, t - u));
  } while (next_subset(U, t));
  return passed(checked);
}

VerificationReport check_d_code(const BinaryCode& code, std::uint32_t s, std::uint32_t l,
                                const CheckOptions& options) {
  detail::require_d_code_params(code, s, l);
  const auto t = static_cast<std::uint32_t>(code.cols());
  detail::enforce_budget(detail::d_code_domain(t, s), options);

  std::uint64_t checked = 0;
  Subset S = first_subset(s);
  do {
    for (auto j : complement_of(S, t)) {
      ++checked;
      bool ok = false;
      for (std::size_t i = 0; i < code.rows() && !ok; ++i) ok = code.get(i, j) && ones_on(code, i, S) <= l - 1;
      if (!ok) return failed(checked, {S, {}, j});
    }
  } while (next_subset(S, t));
  return passed(checked);
}

VerificationReport check_m_code(const BinaryCode& code, std::uint32_t s, std::uint32_t u,
                                const CheckOptions& options) {
  detail::require_threshold_params(code, u, s, "m-code");
  const auto t = static_cast<std::uint32_t>(code.cols());
  detail::enforce_budget(detail::m_code_domain(t, s, u), options);

  std::uint64_t checked = 0;
  for (std::uint32_t a = u; a <= s; ++a) {
    Subset U = first_subset(a);
    do {
      const Subset rest = complement_of(U, t);
      for (auto j : U) {
        Subset pos = first_subset(a);
        do {
          ++checked;
          const Subset Z = pick(rest, pos);
          bool ok = false;
          for (std::size_t i = 0; i < code.rows() && !ok; ++i)
            ok = code.get(i, j) && ones_on(code, i, U) == u && ones_on(code, i, Z) == 0;
          if (!ok) return failed(checked, {U, Z, j});
        } while (next_subset(pos, t - a));
      }
    } while (next_subset(U, t));
  }
  return passed(checked);
}

VerificationReport check_design(const BinaryCode& code, const OutcomeFunction& outcome, std::uint32_t s,
                                DesignMode mode, const CheckOptions& options) {
  detail::require_design_params(code, outcome, s);
  const auto t = static_cast<std::uint32_t>(code.cols());
  const std::uint64_t n = detail::threshold_set_count(t, detail::design_min_size(outcome, s, mode), s);
  detail::enforce_budget(detail::design_domain(n), options);

  const auto sets = detail::design_sets(t, outcome, s, mode);
  auto result = [&](const Subset& P, std::size_t row) { return outcome(ones_on(code, row, P)); };

  std::uint64_t checked = 0;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      ++checked;
      bool differ = false;
      for (std::size_t i = 0; i < code.rows() && !differ; ++i) differ = result(sets[a], i) != result(sets[b], i);
      if (!differ) return failed(checked, {sets[a], sets[b], std::nullopt});
    }
  }
  return passed(checked);
}

VerificationReport check_threshold_design(const BinaryCode& code, std::uint32_t u, std::uint32_t s,
                                          const CheckOptions& options) {
  detail::require_threshold_params(code, u, s, "threshold design");
  const auto t = static_cast<std::uint32_t>(code.cols());
  detail::enforce_budget(detail::threshold_domain(t, u, s), options);

  const auto sets = detail::threshold_sets(t, u, s);
  std::uint64_t checked = 0;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = 0; b < sets.size(); ++b) {
      if (b == a || sets[b].size() > sets[a].size()) continue;
      ++checked;
      bool ok = false;
      for (std::size_t i = 0; i < code.rows() && !ok; ++i)
        ok = ones_on(code, i, sets[a]) >= u && ones_on(code, i, sets[b]) < u;
      if (!ok) return failed(checked, {sets[a], sets[b], std::nullopt});
    }
  }
  return passed(checked);
}

VerificationReport check_threshold_bar_design(const BinaryCode& code, std::uint32_t u, std::uint32_t s,
                                              const CheckOptions& options) {
  detail::require_threshold_params(code, u, s, "threshold-bar design");
  const auto t = static_cast<std::uint32_t>(code.cols());
  detail::enforce_budget(detail::bar_domain(t, u, s), options);

  const auto sets = detail::threshold_sets(t, u, s);
  std::uint64_t checked = 0;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = 0; b < sets.size(); ++b) {
      if (detail::is_subset(sets[a], sets[b])) continue;
      ++checked;
      bool ok = false;
      for (std::size_t i = 0; i < code.rows() && !ok; ++i)
        ok = ones_on(code, i, sets[a]) >= u && ones_on(code, i, sets[b]) < u;
      if (!ok) return failed(checked, {sets[a], sets[b], std::nullopt});
    }
  }
  return passed(checked);
}

std::size_t coincidence(const BinaryCode& code) {
  if (code.cols() < 2) throw Error(ErrorKind::TooFewColumns, "coincidence needs at least two columns");
  std::size_t best = 0;
  for (std::size_t a = 0; a < code.cols(); ++a)
    for (std::size_t b = a + 1; b < code.cols(); ++b) {
      std::size_t common = 0;
      for (std::size_t i = 0; i < code.rows(); ++i) common += code.get(i, a) && code.get(i, b);
      best = std::max(best, common);
    }
  return best;
}

}  // namespace sic::reference
