#pragma once

// Upper and lower bounds on code and design rates, in bits per test.
//
// Notation: R(z, u) is the rate of superimposed (z, u)-codes, Rbar an upper
// bound on it and Rlow a lower bound.  R(z, u) = R(u, z).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sic {

enum class BoundKind {
  RecurrentUpper,
  NonrecurrentUpper,
  UpperZu,
  LowerZu,
  LowerZ1,
  UniversalUpper,
  DesignLower,
  ThresholdLower,
  Asymptotic,
};

std::string to_string(BoundKind kind);

/// A computed bound.  `witness` lists the optimizer's arguments by name
/// (alpha, Q, i, j, beta, u_prime), in the order they are reported.
struct RateBound {
  BoundKind kind = BoundKind::RecurrentUpper;
  std::optional<std::uint32_t> z, u, s, l;
  double value = 0;
  std::vector<std::pair<std::string, double>> witness;
  /// Set when the value depends on the tabulated constant Rbar(2,2).
  bool uses_seed = false;
};

/// Tabulated value of Rbar(2,2), taken from the literature; the (z,u)
/// recurrence alone only gives 0.2 there.
inline constexpr double kSeedUpper22 = 0.1610;

/// Binary entropy.  Throws DomainError unless 0 < alpha < 1.
double entropy(double alpha);

/// f_z(alpha) = h(alpha / z) - alpha * h(1 / z).  Needs z >= 1, 0 < alpha < 1.
double f_z(std::uint32_t z, double alpha);

/// Rbar(z,1) for z = 1..z_max (element z-1).  Rbar(1,1) = 1, Rbar(2,1) is the
/// maximum of f_2, and for z >= 3 Rbar(z,1) is the root R of
/// R = f_z(1 - R / Rbar(z-1,1)), found by bisection to 1e-12.
std::vector<double> recurrent_upper(std::uint32_t z_max);

/// Rbar(z,1) as a RateBound; for z = 2 the witness is the maximizing alpha.
RateBound recurrent_upper_bound(std::uint32_t z);

/// 2 log2(e(z+1)/2) / z^2.  Needs z >= 2.
double nonrecurrent_upper(std::uint32_t z);

/// Rbar(z,u) from the recurrence
///   R(z,u) <= R(z-i,u-j) / (R(z-i,u-j) + (i+j)^(i+j) / (i^i j^j)),
/// minimized over 1 <= i < z, 1 <= j < u, on top of Rbar(z,1) and the seed
/// Rbar(2,2).  Witness: the minimizing i and j.  Needs z, u >= 1.
RateBound upper_zu(std::uint32_t z, std::uint32_t u);

/// Random coding bound -log2(1 - z^z u^u / (z+u)^(z+u)) / (z+u-1), with
/// Rlow(1,1) = 1.  Needs z, u >= 1.
double lower_zu(std::uint32_t z, std::uint32_t u);

/// Objective of the (z,1) random coding bound:
///   -(1-Q) log2(1 - alpha^z) + z (Q log2(alpha/Q) + (1-Q) log2((1-alpha)/(1-Q))).
double lower_z1_objective(std::uint32_t z, double alpha, double q);

/// Rlow(z,1) = A(z) / z where A(z) maximizes lower_z1_objective over the open
/// unit square.  Witness: alpha, Q.  Rlow(1,1) = 1 (the supremum sits on the
/// boundary alpha = 1).
RateBound lower_z1(std::uint32_t z);

/// min{ log2(l+1) / s, Rbar(floor((s-1)/l), 1) } for designs with l-level
/// outcomes.  Needs 1 <= l < s.
RateBound universal_upper(std::uint32_t l, std::uint32_t s);

/// -(1/s) log2(1 - (s-u+1)^(s-u+1) u^u / (s+1)^(s+1)), a lower bound for
/// threshold (u, <= s)-designs.  Needs 1 <= u < s.
RateBound design_lower(std::uint32_t u, std::uint32_t s);

/// L_u(beta, u') = -log2(1 - C(u'-1, u-1) beta^u (1-beta)^(2u'-u)) / (2u'-1).
double threshold_term(std::uint32_t u, double beta, std::uint32_t u_prime);

/// min over u <= u' <= s of threshold_term.
double threshold_inner(std::uint32_t u, std::uint32_t s, double beta);

/// min over u <= u' <= s and 0 <= z <= u' of
///   -log2(1 - C(u'-1, u-1) beta^u (1-beta)^(u'+z-u)) / (u'+z-1),
/// skipping the empty term u' + z = 1.
double threshold_double_min(std::uint32_t u, std::uint32_t s, double beta);

/// max over 0 < beta < 1 of threshold_inner.  Witness: beta, u_prime.
/// Needs 1 <= u < s.
RateBound threshold_lower(std::uint32_t u, std::uint32_t s);

enum class AsymptoticKind {
  Z1Upper,           // 2 log2 z / z^2
  ZuUpper,           // (u+1)^(u+1) / (2 e^(u-1)) * log2 z / z^(u+1)
  ZuLower,           // e^-u u^u log2 e / z^(u+1)
  Z1Lower,           // 1 / (z^2 log2 e)
  DesignLower,       // e^-u u^u log2 e / s^(u+1)
  ExactDesignLower,  // 2 / (s^2 log2 e)
  ExactDesignUpper,  // 4 log2 s / s^2
  UniversalUpper,    // 2 l^2 log2 s / s^2
};

/// Parses the CLI spelling ("z1-upper", "zu-upper", ...).  Throws UnknownKind.
AsymptoticKind parse_asymptotic_kind(const std::string& name);
std::string to_string(AsymptoticKind kind);

struct AsymptoticParams {
  std::uint32_t z = 0, u = 0, s = 0, l = 0;
};

/// Leading term of the selected asymptotic bound, without the (1 + o(1))
/// factor.  Throws ParameterOutOfRange when a needed parameter is missing.
double asymptotic_rate(AsymptoticKind kind, const AsymptoticParams& params);

}  // namespace sic
