#pragma once

#include "sic/codes.hpp"

#include <cstdint>

namespace sic::test {

/// Seeded matrix drawn from a mix of families so that property checks see
/// both passing and failing codes: plain Bernoulli matrices, identity
/// blocks padded with random rows, lightly perturbed identities and their
/// complements.
BinaryCode family_code(std::uint64_t seed, std::size_t rows, std::size_t cols);

}  // namespace sic::test
