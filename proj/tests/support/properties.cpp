#include "properties.hpp"

#include "random_codes.hpp"

#include "sic/verify.hpp"

#include <utility>

namespace sic::test {

namespace {

bool cover_free(const BinaryCode& c, std::uint32_t z, std::uint32_t u) {
  return check_cover_free(c, z, u).satisfied;
}
bool d_code(const BinaryCode& c, std::uint32_t s, std::uint32_t l) { return check_d_code(c, s, l).satisfied; }
bool m_code(const BinaryCode& c, std::uint32_t s, std::uint32_t u) { return check_m_code(c, s, u).satisfied; }
bool threshold(const BinaryCode& c, std::uint32_t u, std::uint32_t s) {
  return check_threshold_design(c, u, s).satisfied;
}
bool threshold_bar(const BinaryCode& c, std::uint32_t u, std::uint32_t s) {
  return check_threshold_bar_design(c, u, s).satisfied;
}
bool adder_design(const BinaryCode& c, std::uint32_t l, std::uint32_t s) {
  return check_design(c, OutcomeFunction::adder(l), s, DesignMode::AtMost).satisfied;
}
bool threshold_outcome_design(const BinaryCode& c, std::uint32_t u, std::uint32_t s) {
  return check_design(c, OutcomeFunction::threshold(u), s, DesignMode::AtMost).satisfied;
}

std::string us(std::uint32_t u, std::uint32_t s) { return "(u=" + std::to_string(u) + ",s=" + std::to_string(s) + ")"; }

}  // namespace

std::vector<PropertyCase> property_cases() {
  std::vector<PropertyCase> cases;
  auto add = [&](std::string name, std::size_t min_cols, Predicate p, Predicate q, bool both) {
    cases.push_back({std::move(name), 1000 + cases.size(), min_cols, std::move(p), std::move(q), both});
  };
  const std::pair<std::uint32_t, std::uint32_t> us_pairs[] = {{1, 2}, {1, 3}, {2, 3}, {2, 4}};

  for (std::uint32_t s : {2u, 3u})
    add("disjunct level 1 <=> cover-free (s,1), s=" + std::to_string(s), s + 2,
        [s](const BinaryCode& c) { return d_code(c, s, 1); }, [s](const BinaryCode& c) { return cover_free(c, s, 1); },
        true);
  add("D_3^1 => D_3^2", 6, [](const BinaryCode& c) { return d_code(c, 3, 1); },
      [](const BinaryCode& c) { return d_code(c, 3, 2); }, false);
  add("D_4^2 => D_4^3", 6, [](const BinaryCode& c) { return d_code(c, 4, 2); },
      [](const BinaryCode& c) { return d_code(c, 4, 3); }, false);
  add("adder design (l=1, <=3) => D_2^1", 6, [](const BinaryCode& c) { return adder_design(c, 1, 3); },
      [](const BinaryCode& c) { return d_code(c, 2, 1); }, false);
  add("adder design (l=2, <=4) => D_3^2", 6, [](const BinaryCode& c) { return adder_design(c, 2, 4); },
      [](const BinaryCode& c) { return d_code(c, 3, 2); }, false);
  for (auto [u, s] : us_pairs)
    add("cover-free (s-u+1,u) => threshold outcome design " + us(u, s), s + 2,
        [u, s](const BinaryCode& c) { return cover_free(c, s - u + 1, u); },
        [u, s](const BinaryCode& c) { return threshold_outcome_design(c, u, s); }, false);
  add("M_2^1 <=> cover-free (3,1)", 5, [](const BinaryCode& c) { return m_code(c, 2, 1); },
      [](const BinaryCode& c) { return cover_free(c, 3, 1); }, true);
  add("M_3^1 <=> cover-free (5,1)", 7, [](const BinaryCode& c) { return m_code(c, 3, 1); },
      [](const BinaryCode& c) { return cover_free(c, 5, 1); }, true);
  add("M_3^2 => cover-free (4,1)", 7, [](const BinaryCode& c) { return m_code(c, 3, 2); },
      [](const BinaryCode& c) { return cover_free(c, 4, 1); }, false);
  for (auto [u, s] : us_pairs)
    add("M_s^u => threshold design " + us(u, s), 2 * s + 1, [u, s](const BinaryCode& c) { return m_code(c, s, u); },
        [u, s](const BinaryCode& c) { return threshold(c, u, s); }, false);
  for (auto [u, s] : us_pairs)
    add("cover-free (s-u+1,u) <=> strong threshold design " + us(u, s), 2 * s + 1,
        [u, s](const BinaryCode& c) { return cover_free(c, s - u + 1, u); },
        [u, s](const BinaryCode& c) { return threshold_bar(c, u, s); }, true);
  for (auto [u, s] : us_pairs)
    add("strong threshold => threshold " + us(u, s), 2 * s + 1,
        [u, s](const BinaryCode& c) { return threshold_bar(c, u, s); },
        [u, s](const BinaryCode& c) { return threshold(c, u, s); }, false);
  add("cover-free (2,1) <=> complement cover-free (1,2)", 5, [](const BinaryCode& c) { return cover_free(c, 2, 1); },
      [](const BinaryCode& c) { return cover_free(c.complement(), 1, 2); }, true);
  add("cover-free (3,2) <=> complement cover-free (2,3)", 6, [](const BinaryCode& c) { return cover_free(c, 3, 2); },
      [](const BinaryCode& c) { return cover_free(c.complement(), 2, 3); }, true);
  return cases;
}

std::vector<BinaryCode> structured_codes(std::size_t t) {
  BinaryCode id(t, t), pairs(t * (t - 1) / 2, t), pruned(pairs.rows() - 1, t);
  std::size_t row = 0;
  for (std::size_t a = 0; a < t; ++a) {
    id.set(a, a, true);
    for (std::size_t b = a + 1; b < t; ++b, ++row) {
      pairs.set(row, a, true);
      pairs.set(row, b, true);
      if (row > 0) {
        pruned.set(row - 1, a, true);
        pruned.set(row - 1, b, true);
      }
    }
  }
  return {id, pairs, pruned};
}

PropertyResult run_property(const PropertyCase& c) {
  PropertyResult r;
  auto check = [&](const BinaryCode& code, const std::string& label) {
    const bool p = c.premise(code);
    const bool q = c.conclusion(code);
    if ((p && !q) || (c.both_ways && q && !p)) {
      ++r.violations;
      r.violating.push_back(label);
    }
    return p;
  };
  for (int i = 0; i < kPropertyTrials; ++i) {
    const std::uint64_t seed = c.salt * 1'000'003 + static_cast<std::uint64_t>(i);
    const std::size_t cols = c.min_cols + static_cast<std::size_t>(i) % (11 - c.min_cols);
    const std::size_t rows = 4 + static_cast<std::size_t>(i / 7) % 9;
    ++r.trials;
    (check(family_code(seed, rows, cols), "seed " + std::to_string(seed)) ? r.premise_held : r.premise_failed)++;
  }
  for (std::size_t t = c.min_cols; t <= 10; ++t) {
    int k = 0;
    for (const auto& code : structured_codes(t)) {
      ++r.structured_trials;
      if (check(code, "structured " + std::to_string(k++) + " t=" + std::to_string(t))) ++r.structured_premise_held;
    }
  }
  return r;
}

}  // namespace sic::test
