#include "sic/codes.hpp"

#include "sic/error.hpp"

#include <bit>
#include <set>
#include <string>

namespace sic {

QaryCode::QaryCode(std::uint32_t q, std::uint32_t n, std::size_t t, std::vector<std::uint16_t> symbols,
                   std::optional<RsMeta> meta)
    : q_(q), n_(n), t_(t), symbols_(std::move(symbols)), meta_(meta) {
  if (symbols_.size() != static_cast<std::size_t>(n_) * t_)
    throw Error(ErrorKind::ParameterOutOfRange, "symbol count does not match n*t");
  for (auto s : symbols_)
    if (s >= q_) throw Error(ErrorKind::ParameterOutOfRange, "symbol outside the alphabet");
}

BinaryCode::BinaryCode(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((rows + kWordBits - 1) / kWordBits), bits_(words_ * cols, 0) {}

BinaryCode BinaryCode::from_rows(const std::vector<std::string_view>& rows) {
  const std::size_t t = rows.empty() ? 0 : rows.front().size();
  BinaryCode code(rows.size(), t);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != t) throw Error(ErrorKind::ParameterOutOfRange, "ragged row " + std::to_string(i));
    for (std::size_t j = 0; j < t; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') throw Error(ErrorKind::ParameterOutOfRange, "non-binary symbol in row " + std::to_string(i));
      code.set(i, j, c == '1');
    }
  }
  return code;
}

void BinaryCode::set(std::size_t row, std::size_t col, bool value) {
  Word& w = bits_[col * words_ + row / kWordBits];
  const Word bit = Word{1} << (row % kWordBits);
  w = value ? (w | bit) : (w & ~bit);
}

std::size_t BinaryCode::column_weight(std::size_t col) const {
  std::size_t w = 0;
  for (Word x : column(col)) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

std::optional<std::size_t> BinaryCode::constant_weight() const {
  if (cols_ == 0) return std::nullopt;
  const std::size_t w = column_weight(0);
  for (std::size_t j = 1; j < cols_; ++j)
    if (column_weight(j) != w) return std::nullopt;
  return w;
}

std::size_t BinaryCode::dot(std::size_t a, std::size_t b) const {
  const auto ca = column(a), cb = column(b);
  std::size_t d = 0;
  for (std::size_t k = 0; k < words_; ++k) d += static_cast<std::size_t>(std::popcount(ca[k] & cb[k]));
  return d;
}

bool BinaryCode::has_distinct_columns() const {
  std::set<std::vector<Word>> seen;
  for (std::size_t j = 0; j < cols_; ++j) {
    auto c = column(j);
    if (!seen.emplace(c.begin(), c.end()).second) return false;
  }
  return true;
}

BinaryCode BinaryCode::complement() const {
  BinaryCode out(rows_, cols_);
  const Word tail = tail_mask(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t k = 0; k < words_; ++k) {
      Word w = ~bits_[j * words_ + k];
      if (k + 1 == words_) w &= tail;
      out.bits_[j * words_ + k] = w;
    }
  }
  return out;
}

BinaryCode::Word tail_mask(std::size_t rows) {
  const std::size_t rem = rows % BinaryCode::kWordBits;
  return rem == 0 ? ~BinaryCode::Word{0} : ((BinaryCode::Word{1} << rem) - 1);
}

}  // namespace sic
