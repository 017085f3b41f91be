#pragma once

#include "sic/codes.hpp"
#include "sic/finite_field.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sic {

/// Largest number of symbols (q^k codewords times q+1 positions) that
/// rs_extended will materialize.
inline constexpr std::uint64_t kMaxMaterializedSymbols = std::uint64_t{1} << 26;

/// Extended Reed-Solomon code of length q+1 and size q^k.
///
/// Message (m_0, ..., m_{k-1}) defines p(x) = sum m_i x^i; its codeword is
/// p evaluated at every field element in value order, followed by m_{k-1}.
/// Column j is the message whose base-q digits, least significant first, are
/// (m_0, ..., m_{k-1}).  Minimum distance is q - k + 2.
///
/// Throws InvalidDimension unless 2 <= k <= q+1, and ParameterOutOfRange if
/// the code would exceed kMaxMaterializedSymbols.
QaryCode rs_extended(const FiniteField& field, std::uint32_t k);

/// The codeword of one message (m_0, ..., m_{k-1}) of the extended RS code,
/// without materializing the code.  Throws InvalidDimension unless
/// 2 <= k <= q+1.
std::vector<std::uint16_t> rs_codeword(const FiniteField& field, const std::vector<FieldElement>& message);

/// Keeps the codewords that vanish on the first r positions and deletes those
/// positions.  Column order is inherited from the parent code.  Requires RS
/// metadata; throws InvalidShortening if r > k-1.
QaryCode shorten(const QaryCode& code, std::uint32_t r);

/// Replaces each symbol v in row i by a weight-one block of q rows with its 1
/// at row i*q + v.  The result has N = n*q rows and constant weight n.
BinaryCode binary_expand(const QaryCode& code);

/// s((k-1) - r) <= l(q+1-r) - 1.
/// Throws ParameterOutOfRange unless q is a prime power, 2 <= k <= q+1,
/// 0 <= r <= k-1 and 1 <= l < s.
bool condition8_check(std::uint32_t q, std::uint32_t k, std::uint32_t r, std::uint32_t s, std::uint32_t l);

struct CodeParams {
  std::uint32_t q = 0;
  std::uint32_t k = 0;
  std::uint32_t r = 0;
  std::uint32_t lambda = 0;  // coincidence k - r - 1
  std::uint32_t n = 0;       // q-ary length q + 1 - r
  std::uint64_t N = 0;       // binary length n * q
  std::uint32_t w = 0;       // column weight, equal to n
  std::uint64_t t = 0;       // size q^(lambda+1)
  std::uint32_t s = 0;
  std::uint32_t l = 1;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Derives the full parameter set of the shortened and expanded RS code.
/// Same preconditions as condition8_check except that (s, l) are only
/// recorded.
CodeParams code_params(std::uint32_t q, std::uint32_t k, std::uint32_t r, std::uint32_t s = 0, std::uint32_t l = 1);

/// Cheapest (s,1) superimposed code from a shortened RS code with size t in
/// [2^m, 2^(m+1)).  For each prime power q <= q_max and lambda >= 1 the
/// weight is the smallest admissible one, w = s*lambda + 1, which fixes
/// r = q + 1 - w.  Minimizes N = w*q, then q, then lambda.  Returns nothing
/// when no parameters fit.  m is limited to 62.
std::optional<CodeParams> ks_search(std::uint32_t s, std::uint32_t m, std::uint32_t q_max = 64);

/// N x t matrix with independent Bernoulli(beta) entries.  The bit stream is
/// mt19937_64 compared against beta at 53-bit resolution, row by row, so the
/// output is identical across platforms for a given seed.
BinaryCode random_code(std::size_t rows, std::size_t cols, double beta, std::uint64_t seed);

}  // namespace sic
