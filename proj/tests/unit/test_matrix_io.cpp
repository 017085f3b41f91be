#include "error_kind.hpp"

#include "sic/codegen.hpp"
#include "sic/matrix_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace sic {
namespace {

BinaryCode parse(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

std::string message_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedFile);
    return e.what();
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return {};
}

TEST(MatrixIo, RoundTrip) {
  const BinaryCode c = binary_expand(shorten(rs_extended(FiniteField(5), 5), 2));
  std::ostringstream out;
  write_matrix(c, out);
  EXPECT_EQ(out.str().substr(0, 16), "SIC v1 20 125 4\n");
  const BinaryCode back = parse(out.str());
  EXPECT_EQ(back, c);
  EXPECT_EQ(back.declared_weight(), std::optional<std::size_t>(4));

  const BinaryCode ex2 = binary_expand(shorten(rs_extended(FiniteField(7), 6), 3));
  std::ostringstream out2;
  write_matrix(ex2, out2);
  EXPECT_EQ(parse(out2.str()), ex2);

  const BinaryCode r = random_code(70, 9, 0.4, 3);
  std::ostringstream plain;
  write_matrix(r, plain);
  EXPECT_EQ(parse(plain.str()), r);
  EXPECT_FALSE(parse(plain.str()).declared_weight());
}

TEST(MatrixIo, CommentsAndLineEndings) {
  const BinaryCode c = parse("SIC v1 2 3\r\n101\r\n010\r\n\n# note\n");
  EXPECT_TRUE(c.get(0, 0));
  EXPECT_FALSE(c.get(0, 1));
  EXPECT_TRUE(c.get(1, 1));
}

TEST(MatrixIo, MalformedInputs) {
  EXPECT_NE(message_of("").find("line 1"), std::string::npos);
  EXPECT_NE(message_of("SIC v2 1 1\n1\n").find("line 1"), std::string::npos);
  EXPECT_NE(message_of("SIC v1 x 1\n1\n").find("line 1"), std::string::npos);
  EXPECT_NE(message_of("SIC v1 1 1 1 9\n1\n").find("line 1"), std::string::npos);
  EXPECT_NE(message_of("SIC v1 2 2\n10\n").find("line 3"), std::string::npos);
  EXPECT_NE(message_of("SIC v1 3 2\n10\n01\n").find("line 4"), std::string::npos);
  EXPECT_NE(message_of("SIC v1 2 2\n10\n1\n").find("line 3"), std::string::npos);
  EXPECT_NE(message_of("SIC v1 2 2\n10\n12\n").find("line 3"), std::string::npos);
  EXPECT_NE(message_of("SIC v1 1 2\n10\n11\n").find("line 3"), std::string::npos);
  EXPECT_NE(message_of("SIC v1 2 2\n# too early\n10\n").find("line 2"), std::string::npos);
  EXPECT_NE(message_of("SIC v1 2 2 1\n10\n11\n").find("column 1"), std::string::npos);
  EXPECT_EQ(test::error_kind([] { read_matrix(std::string("/nonexistent/m.sic")); }), ErrorKind::MalformedFile);
}

}  // namespace
}  // namespace sic
