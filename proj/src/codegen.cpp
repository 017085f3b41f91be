#include "sic/codegen.hpp"

#include "sic/error.hpp"

#include <random>
#include <string>
#include <tuple>

namespace sic {

namespace {

void require_rs_params(std::uint32_t q, std::uint32_t k, std::uint32_t r) {
  if (!is_prime_power(q)) throw Error(ErrorKind::ParameterOutOfRange, "q=" + std::to_string(q) + " is not a prime power");
  if (k < 2 || k > q + 1)
    throw Error(ErrorKind::ParameterOutOfRange, "k=" + std::to_string(k) + " outside [2, q+1]");
  if (r > k - 1) throw Error(ErrorKind::ParameterOutOfRange, "r=" + std::to_string(r) + " exceeds k-1");
}

void encode(const FiniteField& field, const std::vector<FieldElement>& points, const std::vector<FieldElement>& message,
            std::uint16_t* out) {
  const auto q = static_cast<std::uint32_t>(points.size());
  for (std::uint32_t pos = 0; pos < q; ++pos) {
    FieldElement acc = field.zero();
    for (std::size_t i = message.size(); i-- > 0;) acc = field.add(field.mul(acc, points[pos]), message[i]);
    out[pos] = static_cast<std::uint16_t>(acc.value);
  }
  out[q] = static_cast<std::uint16_t>(message.back().value);
}

}  // namespace

std::vector<std::uint16_t> rs_codeword(const FiniteField& field, const std::vector<FieldElement>& message) {
  const std::uint32_t q = field.q();
  if (message.size() < 2 || message.size() > q + 1)
    throw Error(ErrorKind::InvalidDimension, "message length " + std::to_string(message.size()) + " outside [2, " +
                                                 std::to_string(q + 1) + "]");
  for (auto m : message)
    if (m.value >= q) throw Error(ErrorKind::ParameterOutOfRange, "message symbol outside the field");
  std::vector<std::uint16_t> out(q + 1);
  encode(field, field.elements(), message, out.data());
  return out;
}

QaryCode rs_extended(const FiniteField& field, std::uint32_t k) {
  const std::uint32_t q = field.q();
  if (k < 2 || k > q + 1)
    throw Error(ErrorKind::InvalidDimension,
                "k=" + std::to_string(k) + " outside [2, " + std::to_string(q + 1) + "] for q=" + std::to_string(q));
  const std::uint32_t n = q + 1;
  std::uint64_t t = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    t *= q;
    if (t * n > kMaxMaterializedSymbols)
      throw Error(ErrorKind::ParameterOutOfRange, "code q^k is too large to materialize");
  }

  const auto points = field.elements();
  std::vector<std::uint16_t> symbols(static_cast<std::size_t>(t) * n);
  std::vector<FieldElement> message(k);
  for (std::uint64_t idx = 0; idx < t; ++idx) {
    std::uint64_t rest = idx;
    for (std::uint32_t i = 0; i < k; ++i) {
      message[i] = {static_cast<std::uint32_t>(rest % q)};
      rest /= q;
    }
    encode(field, points, message, symbols.data() + idx * n);
  }
  return QaryCode(q, n, static_cast<std::size_t>(t), std::move(symbols), RsMeta{k, 0, q - k + 2});
}

QaryCode shorten(const QaryCode& code, std::uint32_t r) {
  if (!code.meta()) throw Error(ErrorKind::InvalidShortening, "shortening requires a Reed-Solomon code");
  const RsMeta meta = *code.meta();
  if (meta.r != 0) throw Error(ErrorKind::InvalidShortening, "code is already shortened");
  if (r > meta.k - 1)
    throw Error(ErrorKind::InvalidShortening, "r=" + std::to_string(r) + " exceeds k-1=" + std::to_string(meta.k - 1));
  if (r == 0) return code;

  const std::uint32_t n = code.n() - r;
  std::vector<std::uint16_t> symbols;
  std::size_t kept = 0;
  for (std::size_t j = 0; j < code.t(); ++j) {
    const auto col = code.column(j);
    bool vanishes = true;
    for (std::uint32_t i = 0; i < r && vanishes; ++i) vanishes = col[i] == 0;
    if (!vanishes) continue;
    symbols.insert(symbols.end(), col.begin() + r, col.end());
    ++kept;
  }
  return QaryCode(code.q(), n, kept, std::move(symbols), RsMeta{meta.k, r, meta.d});
}

BinaryCode binary_expand(const QaryCode& code) {
  const std::uint32_t q = code.q();
  BinaryCode out(static_cast<std::size_t>(code.n()) * q, code.t());
  for (std::size_t j = 0; j < code.t(); ++j) {
    const auto col = code.column(j);
    for (std::uint32_t i = 0; i < code.n(); ++i) out.set(static_cast<std::size_t>(i) * q + col[i], j, true);
  }
  out.set_declared_weight(code.n());
  return out;
}

bool condition8_check(std::uint32_t q, std::uint32_t k, std::uint32_t r, std::uint32_t s, std::uint32_t l) {
  require_rs_params(q, k, r);
  if (l < 1 || l >= s)
    throw Error(ErrorKind::ParameterOutOfRange, "need 1 <= l < s, got l=" + std::to_string(l) + " s=" + std::to_string(s));
  const std::uint64_t lhs = static_cast<std::uint64_t>(s) * ((k - 1) - r);
  const std::uint64_t rhs = static_cast<std::uint64_t>(l) * (q + 1 - r);
  return lhs + 1 <= rhs;
}

CodeParams code_params(std::uint32_t q, std::uint32_t k, std::uint32_t r, std::uint32_t s, std::uint32_t l) {
  require_rs_params(q, k, r);
  CodeParams p;
  p.q = q;
  p.k = k;
  p.r = r;
  p.lambda = k - r - 1;
  p.n = q + 1 - r;
  p.N = static_cast<std::uint64_t>(p.n) * q;
  p.w = p.n;
  p.t = 1;
  for (std::uint32_t i = 0; i < k - r; ++i) p.t *= q;
  p.s = s;
  p.l = l;
  return p;
}

std::optional<CodeParams> ks_search(std::uint32_t s, std::uint32_t m, std::uint32_t q_max) {
  if (s < 2 || m < 1 || m > 62 || q_max < 2)
    throw Error(ErrorKind::ParameterOutOfRange, "ks_search needs s >= 2, 1 <= m <= 62, q_max >= 2");
  const std::uint64_t lo = std::uint64_t{1} << m;
  const std::uint64_t hi = std::uint64_t{1} << (m + 1);

  std::optional<CodeParams> best;
  auto key = [](const CodeParams& p) { return std::tuple(p.N, p.q, p.lambda); };
  for (std::uint32_t q = 2; q <= q_max; ++q) {
    if (!is_prime_power(q)) continue;
    std::uint64_t t = static_cast<std::uint64_t>(q) * q;  // q^(lambda+1) at lambda = 1
    for (std::uint32_t lambda = 1; t < hi; ++lambda) {
      const std::uint64_t w = static_cast<std::uint64_t>(s) * lambda + 1;
      if (t >= lo && w <= q + 1) {
        const auto r = static_cast<std::uint32_t>(q + 1 - w);
        const CodeParams cand = code_params(q, lambda + r + 1, r, s, 1);
        if (!best || key(cand) < key(*best)) best = cand;
      }
      if (t > hi / q) break;
      t *= q;
    }
  }
  return best;
}

BinaryCode random_code(std::size_t rows, std::size_t cols, double beta, std::uint64_t seed) {
  if (!(beta > 0.0 && beta < 1.0) || rows == 0 || cols == 0)
    throw Error(ErrorKind::ParameterOutOfRange, "random_code needs 0 < beta < 1 and positive dimensions");
  std::mt19937_64 gen(seed);
  constexpr double kScale = 1.0 / static_cast<double>(std::uint64_t{1} << 53);
  BinaryCode out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, static_cast<double>(gen() >> 11) * kScale < beta);
  return out;
}

}  // namespace sic
