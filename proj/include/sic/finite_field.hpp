#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sic {

/// An element of GF(q) stored as a dense index in [0, q).  The base-p digits
/// of the index are the coefficients of the representing polynomial, lowest
/// degree first.
struct FieldElement {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Returns (p, m) with q = p^m and p prime, or nothing when q is not a prime
/// power (or q < 2).
std::optional<std::pair<std::uint32_t, std::uint32_t>> is_prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// Arithmetic context for GF(p^m).
///
/// Extension fields use the lexicographically smallest monic irreducible
/// modulus, comparing coefficient sequences from the constant term upwards,
/// so every construction of the same order yields the same representation.
/// Instances are immutable and may be shared between threads.
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Throws Error(NotPrimePower) unless q is a prime power no larger than
  /// kMaxOrder.
  explicit FiniteField(std::uint32_t q);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }

  /// m+1 coefficients, constant term first, leading coefficient 1.  Empty for
  /// prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElement element(std::uint32_t value) const;
  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws Error(DivisionByZero) for the zero element.
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// All q elements in ascending value order.
  std::vector<FieldElement> elements() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.q_ == b.q_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldElement add_digits(FieldElement a, FieldElement b, bool subtract) const;
  FieldElement mul_poly(FieldElement a, FieldElement b) const;

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;

  // Full tables are cached for small extension fields.
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> inv_table_;
};

/// Monic irreducibility over GF(p) by trial division with every monic
/// polynomial of degree 1..deg/2.  Coefficients are constant term first.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace sic
