#include "sic/matrix_io.hpp"

#include "sic/error.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sic {

namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::MalformedFile, "line " + std::to_string(line) + ": " + msg);
}

bool parse_count(const std::string& token, std::size_t& out) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9) return false;
  out = std::stoul(token);
  return true;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace

BinaryCode read_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) malformed(1, "missing header");
  std::istringstream header(strip_cr(line));
  std::string magic, version, n_text, t_text, w_text, extra;
  header >> magic >> version >> n_text >> t_text >> w_text >> extra;
  std::size_t rows = 0, cols = 0, weight = 0;
  if (magic != "SIC" || version != "v1") malformed(1, "expected header 'SIC v1 N t [w]'");
  if (!parse_count(n_text, rows) || !parse_count(t_text, cols)) malformed(1, "bad N or t in header");
  const bool has_weight = !w_text.empty();
  if (has_weight && !parse_count(w_text, weight)) malformed(1, "bad w in header");
  if (!extra.empty()) malformed(1, "trailing fields in header");

  BinaryCode code(rows, cols);
  std::size_t lineno = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    ++lineno;
    if (!std::getline(in, line)) malformed(lineno, "expected " + std::to_string(rows) + " rows, found " + std::to_string(i));
    line = strip_cr(line);
    if (!line.empty() && line[0] == '#')
      malformed(lineno, "expected " + std::to_string(rows) + " rows, found " + std::to_string(i));
    if (line.size() != cols)
      malformed(lineno, "row has " + std::to_string(line.size()) + " symbols, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      if (line[j] != '0' && line[j] != '1') malformed(lineno, "symbol '" + std::string(1, line[j]) + "' is not 0 or 1");
      if (line[j] == '1') code.set(i, j, true);
    }
  }
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    malformed(lineno, "unexpected content after " + std::to_string(rows) + " rows");
  }
  if (has_weight) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t cw = code.column_weight(j);
      if (cw != weight)
        throw Error(ErrorKind::MalformedFile, "column " + std::to_string(j + 1) + " has weight " + std::to_string(cw) +
                                                  ", header declares " + std::to_string(weight));
    }
    code.set_declared_weight(weight);
  }
  return code;
}

BinaryCode read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedFile, "cannot open " + path);
  return read_matrix(in);
}

void write_matrix(const BinaryCode& code, std::ostream& out) {
  out << "SIC v1 " << code.rows() << ' ' << code.cols();
  if (code.declared_weight()) out << ' ' << *code.declared_weight();
  out << '\n';
  std::string row(code.cols(), '0');
  for (std::size_t i = 0; i < code.rows(); ++i) {
    for (std::size_t j = 0; j < code.cols(); ++j) row[j] = code.get(i, j) ? '1' : '0';
    out << row << '\n';
  }
}

void write_matrix(const BinaryCode& code, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::MalformedFile, "cannot write " + path);
  write_matrix(code, out);
  if (!out) throw Error(ErrorKind::MalformedFile, "write failed for " + path);
}

}  // namespace sic
