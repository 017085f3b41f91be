#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace sic {

/// Reed-Solomon provenance of a q-ary code: dimension k, shortening depth r
/// and design distance d = q - k + 2.
struct RsMeta {
  std::uint32_t k = 0;
  std::uint32_t r = 0;
  std::uint32_t d = 0;

  friend bool operator==(const RsMeta&, const RsMeta&) = default;
};

/// q-ary code as an n x t matrix; column j is codeword j.  Symbols are stored
/// column-major.
class QaryCode {
 public:
  QaryCode() = default;
  QaryCode(std::uint32_t q, std::uint32_t n, std::size_t t, std::vector<std::uint16_t> symbols,
           std::optional<RsMeta> meta = std::nullopt);

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t n() const noexcept { return n_; }
  std::size_t t() const noexcept { return t_; }
  const std::optional<RsMeta>& meta() const noexcept { return meta_; }

  std::uint16_t symbol(std::uint32_t row, std::size_t col) const { return symbols_[col * n_ + row]; }
  std::span<const std::uint16_t> column(std::size_t col) const {
    return {symbols_.data() + col * n_, n_};
  }

  friend bool operator==(const QaryCode&, const QaryCode&) = default;

 private:
  std::uint32_t q_ = 0;
  std::uint32_t n_ = 0;
  std::size_t t_ = 0;
  std::vector<std::uint16_t> symbols_;
  std::optional<RsMeta> meta_;
};

/// Binary N x t incidence matrix.  Each column is a packed bitset over the N
/// rows, so column operations (union, intersection, dot product) run a word at
/// a time.
class BinaryCode {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BinaryCode() = default;
  BinaryCode(std::size_t rows, std::size_t cols);

  /// Builds from row strings of '0'/'1'; all rows must have the same length.
  static BinaryCode from_rows(const std::vector<std::string_view>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_column() const noexcept { return words_; }

  bool get(std::size_t row, std::size_t col) const {
    return (bits_[col * words_ + row / kWordBits] >> (row % kWordBits)) & 1u;
  }
  void set(std::size_t row, std::size_t col, bool value);

  std::span<const Word> column(std::size_t col) const { return {bits_.data() + col * words_, words_}; }

  std::size_t column_weight(std::size_t col) const;
  /// Common weight of all columns, or nothing if the weights differ.
  std::optional<std::size_t> constant_weight() const;
  /// Number of rows where both columns hold a 1.
  std::size_t dot(std::size_t a, std::size_t b) const;
  bool has_distinct_columns() const;

  /// Weight recorded by the constructor that produced the code (binary
  /// expansion or a file header), if any.
  const std::optional<std::size_t>& declared_weight() const noexcept { return declared_weight_; }
  void set_declared_weight(std::optional<std::size_t> w) { declared_weight_ = w; }

  BinaryCode complement() const;

  friend bool operator==(const BinaryCode& a, const BinaryCode& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
  std::optional<std::size_t> declared_weight_;
};

/// Mask with the low `rows % 64` bits set for the last word of a column
/// (all ones when rows is a multiple of 64).
BinaryCode::Word tail_mask(std::size_t rows);

}  // namespace sic
