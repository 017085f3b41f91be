#include "sic/bounds.hpp"

#include "sic/combinatorics.hpp"
#include "sic/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace sic {

namespace {

constexpr double kGridStep = 1e-3;
constexpr double kRefineTol = 1e-8;
constexpr double kRootTol = 1e-12;

[[noreturn]] void out_of_range(const std::string& msg) { throw Error(ErrorKind::ParameterOutOfRange, msg); }

double log2_one_minus(double x) { return std::log1p(-x) / std::numbers::ln2; }

struct Argmax {
  double x = 0;
  double value = -std::numeric_limits<double>::infinity();
};

// Maximizes f on a uniform grid over (0,1), then by golden-section search in
// the two cells around the best grid point.
template <class F>
Argmax maximize_unit(F f) {
  Argmax best;
  const int steps = static_cast<int>(std::lround(1 / kGridStep));
  for (int k = 1; k < steps; ++k) {
    const double x = k * kGridStep;
    const double v = f(x);
    if (v > best.value) best = {x, v};
  }
  double a = std::max(best.x - kGridStep, kGridStep * 1e-3);
  double b = std::min(best.x + kGridStep, 1 - kGridStep * 1e-3);
  const double ratio = (std::sqrt(5.0) - 1) / 2;
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > kRefineTol) {
    if (fc > fd) {
      b = d, d = c, fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    }
  }
  const double x = (a + b) / 2;
  const double v = f(x);
  if (!std::isfinite(v)) throw Error(ErrorKind::ConvergenceFailure, "maximization produced a non-finite value");
  if (v >= best.value) return {x, v};
  return best;
}

// x^x, with 0^0 = 1, in log form.
double xlogx(double x) { return x == 0 ? 0 : x * std::log(x); }

double rbar_z1(std::uint32_t z) { return recurrent_upper(z).back(); }

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::RecurrentUpper: return "recurrent-upper";
    case BoundKind::NonrecurrentUpper: return "nonrecurrent-upper";
    case BoundKind::UpperZu: return "upper-zu";
    case BoundKind::LowerZu: return "lower-zu";
    case BoundKind::LowerZ1: return "lower-z1";
    case BoundKind::UniversalUpper: return "universal-upper";
    case BoundKind::DesignLower: return "design-lower";
    case BoundKind::ThresholdLower: return "threshold-lower";
    case BoundKind::Asymptotic: return "asymptotic";
  }
  return "?";
}

double entropy(double alpha) {
  if (!(alpha > 0 && alpha < 1)) throw Error(ErrorKind::DomainError, "entropy needs 0 < alpha < 1");
  return -alpha * std::log2(alpha) - (1 - alpha) * std::log2(1 - alpha);
}

double f_z(std::uint32_t z, double alpha) {
  if (z < 1) throw Error(ErrorKind::DomainError, "f_z needs z >= 1");
  if (!(alpha > 0 && alpha < 1)) throw Error(ErrorKind::DomainError, "f_z needs 0 < alpha < 1");
  const double hz = z == 1 ? 0 : entropy(1.0 / z);
  return entropy(alpha / z) - alpha * hz;
}

std::vector<double> recurrent_upper(std::uint32_t z_max) {
  if (z_max < 1) out_of_range("recurrent bound needs z >= 1");
  std::vector<double> r{1.0};
  if (z_max >= 2) r.push_back(maximize_unit([](double a) { return f_z(2, a); }).value);
  for (std::uint32_t z = 3; z <= z_max; ++z) {
    const double prev = r.back();
    auto g = [&](double R) { return R - f_z(z, 1 - R / prev); };
    // R = 0 is a trivial root; g is negative just above it and equals prev at
    // the right end.
    double lo = prev * 1e-9, hi = prev;
    if (!(g(lo) < 0)) throw Error(ErrorKind::ConvergenceFailure, "no sign change for z=" + std::to_string(z));
    while (hi - lo > kRootTol) {
      const double mid = (lo + hi) / 2;
      (g(mid) < 0 ? lo : hi) = mid;
    }
    r.push_back((lo + hi) / 2);
  }
  return r;
}

RateBound recurrent_upper_bound(std::uint32_t z) {
  RateBound b{BoundKind::RecurrentUpper, z, 1u, std::nullopt, std::nullopt, rbar_z1(z), {}, false};
  if (z == 2) b.witness = {{"alpha", maximize_unit([](double a) { return f_z(2, a); }).x}};
  return b;
}

double nonrecurrent_upper(std::uint32_t z) {
  if (z < 2) out_of_range("non-recurrent bound needs z >= 2");
  const double zz = z;
  return 2 * std::log2(std::numbers::e * (zz + 1) / 2) / (zz * zz);
}

RateBound upper_zu(std::uint32_t z, std::uint32_t u) {
  if (z < 1 || u < 1) out_of_range("upper bound needs z, u >= 1");
  if (u > z) {
    RateBound b = upper_zu(u, z);
    b.z = z, b.u = u;
    return b;
  }
  struct Cell {
    double value = 0;
    std::uint32_t i = 0, j = 0;
    bool seeded = false;
  };
  const std::vector<double> base = recurrent_upper(z);
  // table[a][b] for a >= b.
  std::vector<std::vector<Cell>> table(z + 1, std::vector<Cell>(u + 1));
  for (std::uint32_t a = 1; a <= z; ++a) table[a][1].value = base[a - 1];
  for (std::uint32_t b = 2; b <= u; ++b) {
    for (std::uint32_t a = b; a <= z; ++a) {
      Cell& cell = table[a][b];
      if (a == 2 && b == 2) {
        cell = {kSeedUpper22, 0, 0, true};
        continue;
      }
      cell.value = std::numeric_limits<double>::infinity();
      for (std::uint32_t i = 1; i < a; ++i) {
        for (std::uint32_t j = 1; j < b; ++j) {
          const std::uint32_t x = a - i, y = b - j;
          const Cell& prev = x >= y ? table[x][y] : table[y][x];
          const double c = std::exp(xlogx(i + j) - xlogx(i) - xlogx(j));
          const double v = prev.value / (prev.value + c);
          if (v < cell.value) cell = {v, i, j, prev.seeded};
        }
      }
    }
  }
  const Cell& cell = table[z][u];
  RateBound b{BoundKind::UpperZu, z, u, std::nullopt, std::nullopt, cell.value, {}, cell.seeded};
  if (cell.i) b.witness = {{"i", cell.i}, {"j", cell.j}};
  return b;
}

double lower_zu(std::uint32_t z, std::uint32_t u) {
  if (z < 1 || u < 1) out_of_range("lower bound needs z, u >= 1");
  if (z == 1 && u == 1) return 1.0;
  const double p = std::exp(xlogx(z) + xlogx(u) - xlogx(z + u));
  return -log2_one_minus(p) / (z + u - 1.0);
}

double lower_z1_objective(std::uint32_t z, double alpha, double q) {
  return -(1 - q) * log2_one_minus(std::pow(alpha, z)) +
         z * (q * std::log2(alpha / q) + (1 - q) * std::log2((1 - alpha) / (1 - q)));
}

RateBound lower_z1(std::uint32_t z) {
  if (z < 1) out_of_range("lower bound needs z >= 1");
  RateBound b{BoundKind::LowerZ1, z, 1u, std::nullopt, std::nullopt, 1.0, {}, false};
  if (z == 1) return b;
  // For fixed alpha the objective is concave in Q with stationary point
  // Q / (1-Q) = alpha / (1-alpha) * (1 - alpha^z)^(1/z).
  auto best_q = [z](double alpha) {
    const double ratio = alpha / (1 - alpha) * std::pow(-std::expm1(z * std::log(alpha)), 1.0 / z);
    return ratio / (1 + ratio);
  };
  const Argmax m = maximize_unit([&](double alpha) { return lower_z1_objective(z, alpha, best_q(alpha)); });
  b.value = m.value / z;
  b.witness = {{"alpha", m.x}, {"Q", best_q(m.x)}};
  return b;
}

RateBound universal_upper(std::uint32_t l, std::uint32_t s) {
  if (!(1 <= l && l < s)) out_of_range("universal bound needs 1 <= l < s");
  const double a = std::log2(l + 1.0) / s;
  const double c = rbar_z1((s - 1) / l);
  return {BoundKind::UniversalUpper, std::nullopt, std::nullopt, s, l, std::min(a, c), {}, false};
}

RateBound design_lower(std::uint32_t u, std::uint32_t s) {
  if (!(1 <= u && u < s)) out_of_range("design lower bound needs 1 <= u < s");
  const double p = std::exp(xlogx(s - u + 1.0) + xlogx(u) - xlogx(s + 1.0));
  return {BoundKind::DesignLower, std::nullopt, u, s, std::nullopt, -log2_one_minus(p) / s, {}, false};
}

double threshold_term(std::uint32_t u, double beta, std::uint32_t u_prime) {
  const double c = static_cast<double>(binomial(u_prime - 1, u - 1));
  const double p = c * std::pow(beta, u) * std::pow(1 - beta, 2.0 * u_prime - u);
  return -log2_one_minus(p) / (2.0 * u_prime - 1);
}

double threshold_inner(std::uint32_t u, std::uint32_t s, double beta) {
  double m = std::numeric_limits<double>::infinity();
  for (std::uint32_t up = u; up <= s; ++up) m = std::min(m, threshold_term(u, beta, up));
  return m;
}

double threshold_double_min(std::uint32_t u, std::uint32_t s, double beta) {
  double m = std::numeric_limits<double>::infinity();
  for (std::uint32_t up = u; up <= s; ++up) {
    const double c = static_cast<double>(binomial(up - 1, u - 1));
    for (std::uint32_t z = 0; z <= up; ++z) {
      if (up + z == 1) continue;
      const double p = c * std::pow(beta, u) * std::pow(1 - beta, static_cast<double>(up + z - u));
      m = std::min(m, -log2_one_minus(p) / (up + z - 1.0));
    }
  }
  return m;
}

RateBound threshold_lower(std::uint32_t u, std::uint32_t s) {
  if (!(1 <= u && u < s)) out_of_range("threshold lower bound needs 1 <= u < s");
  const Argmax m = maximize_unit([&](double beta) { return threshold_inner(u, s, beta); });
  std::uint32_t arg = u;
  for (std::uint32_t up = u; up <= s; ++up)
    if (threshold_term(u, m.x, up) < threshold_term(u, m.x, arg)) arg = up;
  return {BoundKind::ThresholdLower, std::nullopt, u, s, std::nullopt, m.value, {{"beta", m.x}, {"u_prime", arg}}, false};
}

namespace {

constexpr std::array<std::pair<AsymptoticKind, const char*>, 8> kAsymptoticNames{{
    {AsymptoticKind::Z1Upper, "z1-upper"},
    {AsymptoticKind::ZuUpper, "zu-upper"},
    {AsymptoticKind::ZuLower, "zu-lower"},
    {AsymptoticKind::Z1Lower, "z1-lower"},
    {AsymptoticKind::DesignLower, "design-lower"},
    {AsymptoticKind::ExactDesignLower, "exact-design-lower"},
    {AsymptoticKind::ExactDesignUpper, "exact-design-upper"},
    {AsymptoticKind::UniversalUpper, "universal-upper"},
}};

double need(std::uint32_t v, const char* name) {
  if (v == 0) out_of_range(std::string("asymptotic bound needs ") + name + " >= 1");
  return v;
}

}  // namespace

AsymptoticKind parse_asymptotic_kind(const std::string& name) {
  for (const auto& [kind, text] : kAsymptoticNames)
    if (name == text) return kind;
  throw Error(ErrorKind::UnknownKind, "unknown asymptotic bound '" + name + "'");
}

std::string to_string(AsymptoticKind kind) {
  for (const auto& [k, text] : kAsymptoticNames)
    if (k == kind) return text;
  return "?";
}

double asymptotic_rate(AsymptoticKind kind, const AsymptoticParams& p) {
  using std::numbers::e;
  using std::numbers::log2e;
  switch (kind) {
    case AsymptoticKind::Z1Upper: {
      const double z = need(p.z, "z");
      return 2 * std::log2(z) / (z * z);
    }
    case AsymptoticKind::ZuUpper: {
      const double z = need(p.z, "z"), u = need(p.u, "u");
      return std::pow(u + 1, u + 1) / (2 * std::pow(e, u - 1)) * std::log2(z) / std::pow(z, u + 1);
    }
    case AsymptoticKind::ZuLower: {
      const double z = need(p.z, "z"), u = need(p.u, "u");
      return std::exp(-u) * std::pow(u, u) * log2e / std::pow(z, u + 1);
    }
    case AsymptoticKind::Z1Lower: {
      const double z = need(p.z, "z");
      return 1 / (z * z * log2e);
    }
    case AsymptoticKind::DesignLower: {
      const double s = need(p.s, "s"), u = need(p.u, "u");
      return std::exp(-u) * std::pow(u, u) * log2e / std::pow(s, u + 1);
    }
    case AsymptoticKind::ExactDesignLower: {
      const double s = need(p.s, "s");
      return 2 / (s * s * log2e);
    }
    case AsymptoticKind::ExactDesignUpper: {
      const double s = need(p.s, "s");
      return 4 * std::log2(s) / (s * s);
    }
    case AsymptoticKind::UniversalUpper: {
      const double s = need(p.s, "s"), l = need(p.l, "l");
      return 2 * l * l * std::log2(s) / (s * s);
    }
  }
  throw Error(ErrorKind::UnknownKind, "unknown asymptotic bound");
}

}  // namespace sic
