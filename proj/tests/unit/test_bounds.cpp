#include "error_kind.hpp"
#include "oracles.hpp"

#include "sic/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace sic {
namespace {

using test::error_kind;

double witness(const RateBound& b, const std::string& name) {
  for (const auto& [key, v] : b.witness)
    if (key == name) return v;
  ADD_FAILURE() << "no witness " << name;
  return NAN;
}

TEST(Entropy, MatchesHighPrecision) {
  for (double a = 0.001; a < 1; a += 0.0137) EXPECT_NEAR(entropy(a), test::mp_entropy(a), 1e-14) << a;
  EXPECT_DOUBLE_EQ(entropy(0.5), 1.0);
  for (std::uint32_t z = 1; z <= 12; ++z)
    for (double a = 0.01; a < 1; a += 0.07) EXPECT_NEAR(f_z(z, a), test::mp_f_z(z, a), 1e-14);
  EXPECT_EQ(error_kind([] { entropy(0); }), ErrorKind::DomainError);
  EXPECT_EQ(error_kind([] { entropy(1); }), ErrorKind::DomainError);
  EXPECT_EQ(error_kind([] { f_z(0, 0.5); }), ErrorKind::DomainError);
  EXPECT_EQ(error_kind([] { f_z(2, 1.5); }), ErrorKind::DomainError);
}

TEST(RecurrentUpper, TwoIsMaximumOfF2) {
  const RateBound b = recurrent_upper_bound(2);
  EXPECT_NEAR(b.value, 0.3219281, 1e-7);
  EXPECT_NEAR(f_z(2, witness(b, "alpha")), b.value, 1e-12);
  for (double a = 0.001; a < 1; a += 0.001) EXPECT_LE(f_z(2, a), b.value + 1e-12);
}

TEST(RecurrentUpper, RootsSolveTheRecurrenceUniquely) {
  const auto r = recurrent_upper(17);
  ASSERT_EQ(r.size(), 17u);
  EXPECT_EQ(r[0], 1.0);
  for (std::uint32_t z = 3; z <= 17; ++z) {
    const double prev = r[z - 2], root = r[z - 1];
    auto g = [&](double R) { return R - f_z(z, 1 - R / prev); };
    EXPECT_NEAR(g(root), 0, 1e-10);
    EXPECT_LT(root, prev);
    int sign_changes = 0;
    double last = g(prev * 1e-6);
    for (int i = 1; i < 20'000; ++i) {
      const double v = g(prev * (1e-6 + (1 - 1e-6) * i / 20'000.0));
      if ((v < 0) != (last < 0)) ++sign_changes;
      last = v;
    }
    EXPECT_EQ(sign_changes, 1) << "z=" << z;
    EXPECT_LE(root, nonrecurrent_upper(z));
  }
}

TEST(NonrecurrentUpper, DirectFormula) {
  EXPECT_NEAR(nonrecurrent_upper(2), 1.0138288, 1e-7);
  EXPECT_EQ(error_kind([] { nonrecurrent_upper(1); }), ErrorKind::ParameterOutOfRange);
}

TEST(UpperZu, SymmetricSeededAndReproducible) {
  const RateBound seed = upper_zu(2, 2);
  EXPECT_DOUBLE_EQ(seed.value, kSeedUpper22);
  EXPECT_TRUE(seed.uses_seed);
  EXPECT_FALSE(upper_zu(3, 2).uses_seed);
  for (std::uint32_t z = 1; z <= 8; ++z)
    for (std::uint32_t u = 1; u <= 8; ++u) {
      EXPECT_DOUBLE_EQ(upper_zu(z, u).value, upper_zu(u, z).value);
      if (z > 1) EXPECT_LE(upper_zu(z, u).value, upper_zu(z - 1, u).value);
    }
  // Re-evaluate the recurrence at the reported (i, j).
  const RateBound b = upper_zu(6, 3);
  const auto i = static_cast<std::uint32_t>(witness(b, "i"));
  const auto j = static_cast<std::uint32_t>(witness(b, "j"));
  const double prev = upper_zu(6 - i, 3 - j).value;
  const double c = std::pow(i + j, i + j) / (std::pow(i, i) * std::pow(j, j));
  EXPECT_NEAR(b.value, prev / (prev + c), 1e-15);
  EXPECT_EQ(error_kind([] { upper_zu(0, 2); }), ErrorKind::ParameterOutOfRange);
}

TEST(LowerZu, MatchesHighPrecision) {
  EXPECT_EQ(lower_zu(1, 1), 1.0);
  for (std::uint32_t z = 1; z <= 12; ++z)
    for (std::uint32_t u = 1; u <= 12; ++u)
      if (z + u > 2) EXPECT_NEAR(lower_zu(z, u), test::mp_lower_zu(z, u), 1e-15) << z << ',' << u;
}

TEST(LowerZ1, WitnessIsTheMaximum) {
  EXPECT_EQ(lower_z1(1).value, 1.0);
  for (std::uint32_t z = 2; z <= 8; ++z) {
    const RateBound b = lower_z1(z);
    const double alpha = witness(b, "alpha"), q = witness(b, "Q");
    EXPECT_NEAR(lower_z1_objective(z, alpha, q) / z, b.value, 1e-14);
    double grid_max = -1;
    for (int a = 1; a < 400; ++a)
      for (int k = 1; k < 400; ++k) grid_max = std::max(grid_max, lower_z1_objective(z, a / 400.0, k / 400.0));
    EXPECT_LE(grid_max / z, b.value + 1e-12);
    EXPECT_GT(grid_max / z, b.value - 1e-4);
    EXPECT_LE(b.value, recurrent_upper_bound(z).value);
  }
}

TEST(DesignLower, MatchesHighPrecisionAndLowerZu) {
  for (std::uint32_t s = 2; s <= 10; ++s)
    for (std::uint32_t u = 1; u < s; ++u) {
      const double v = design_lower(u, s).value;
      EXPECT_NEAR(v, test::mp_design_lower(u, s), 1e-15);
      EXPECT_DOUBLE_EQ(v, lower_zu(s - u + 1, u));
    }
  EXPECT_NEAR(design_lower(1, 2).value, 0.1156628, 1e-7);
  EXPECT_EQ(error_kind([] { design_lower(2, 2); }), ErrorKind::ParameterOutOfRange);
}

TEST(UniversalUpper, InlineValues) {
  EXPECT_NEAR(universal_upper(3, 10).value, 0.1993, 5e-4);
  EXPECT_NEAR(universal_upper(3, 13).value, 0.1405, 5e-4);
  EXPECT_DOUBLE_EQ(universal_upper(1, 4).value, std::min(0.25, recurrent_upper_bound(3).value));
  EXPECT_EQ(error_kind([] { universal_upper(3, 3); }), ErrorKind::ParameterOutOfRange);
}

TEST(ThresholdLower, OptimumAndDoubleMin) {
  for (std::uint32_t s = 2; s <= 7; ++s)
    for (std::uint32_t u = 1; u < s; ++u) {
      const RateBound b = threshold_lower(u, s);
      const double beta = witness(b, "beta");
      EXPECT_GT(b.value, 0);
      EXPECT_TRUE(std::isfinite(b.value));
      EXPECT_NEAR(threshold_inner(u, s, beta), b.value, 1e-15);
      EXPECT_NEAR(threshold_double_min(u, s, beta), b.value, 1e-9);
      const auto up = static_cast<std::uint32_t>(witness(b, "u_prime"));
      EXPECT_NEAR(threshold_term(u, beta, up), b.value, 1e-15);
      for (double x = 0.001; x < 1; x += 0.001) EXPECT_LE(threshold_inner(u, s, x), b.value + 1e-12);
    }
  EXPECT_EQ(error_kind([] { threshold_lower(3, 3); }), ErrorKind::ParameterOutOfRange);
}

TEST(Asymptotic, LeadingTerms) {
  EXPECT_DOUBLE_EQ(asymptotic_rate(AsymptoticKind::Z1Upper, {.z = 4}), 0.25);
  EXPECT_DOUBLE_EQ(asymptotic_rate(AsymptoticKind::ExactDesignUpper, {.s = 4}), 0.5);
  EXPECT_DOUBLE_EQ(asymptotic_rate(AsymptoticKind::UniversalUpper, {.s = 4, .l = 1}), 0.25);
  EXPECT_NEAR(asymptotic_rate(AsymptoticKind::Z1Lower, {.z = 1}), std::numbers::ln2, 1e-15);
  EXPECT_NEAR(asymptotic_rate(AsymptoticKind::ExactDesignLower, {.s = 2}), std::numbers::ln2 / 2, 1e-15);
  EXPECT_NEAR(asymptotic_rate(AsymptoticKind::ZuUpper, {.z = 2, .u = 1}), 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(asymptotic_rate(AsymptoticKind::ZuLower, {.z = 3, .u = 2}),
                   asymptotic_rate(AsymptoticKind::DesignLower, {.u = 2, .s = 3}));
  // The random coding bound approaches its leading term.
  for (std::uint32_t u : {1u, 2u, 3u}) {
    const double ratio = lower_zu(4000, u) / asymptotic_rate(AsymptoticKind::ZuLower, {.z = 4000, .u = u});
    EXPECT_NEAR(ratio, 1, 2e-3) << u;
  }
  EXPECT_EQ(parse_asymptotic_kind("zu-lower"), AsymptoticKind::ZuLower);
  EXPECT_EQ(to_string(AsymptoticKind::ExactDesignUpper), "exact-design-upper");
  EXPECT_EQ(error_kind([] { parse_asymptotic_kind("nope"); }), ErrorKind::UnknownKind);
  EXPECT_EQ(error_kind([] { asymptotic_rate(AsymptoticKind::ZuUpper, {.z = 3}); }), ErrorKind::ParameterOutOfRange);
}

}  // namespace
}  // namespace sic
