#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "impulse/pgm.hpp"
#include "oracle.hpp"

namespace impulse {
namespace {

using Fault = FormatError::Fault;
using namespace std::string_literals;

Fault fault_of(const std::string& bytes) {
  try {
    read_pgm(bytes);
  } catch (const FormatError& e) {
    return e.fault();
  }
  ADD_FAILURE() << "no FormatError for: " << bytes;
  return Fault::bad_magic;
}

TEST(ReadPgm, PlainExample) {
  const auto img = read_pgm("P2\n2 2\n255\n0 128\n255 7\n");
  EXPECT_EQ(img.width(), 2u);
  EXPECT_EQ(img.height(), 2u);
  EXPECT_EQ(std::vector<Pixel>(img.pixels().begin(), img.pixels().end()),
            (std::vector<Pixel>{0, 128, 255, 7}));
}

TEST(ReadPgm, RawExample) {
  const auto img = read_pgm("P5\n1 1\n255\n\x2a"s);
  EXPECT_EQ(img, GrayImage(1, 1, Pixel{42}));
}

TEST(ReadPgm, RawSampleMayBeWhitespaceByte) {
  const auto img = read_pgm("P5\n2 1\n255\n\n\x20"s);
  EXPECT_EQ(img.at(0, 0), 10);
  EXPECT_EQ(img.at(0, 1), 32);
}

TEST(ReadPgm, CommentsBetweenHeaderTokens) {
  const auto img = read_pgm("P2\n# made by hand\n2 # width\n1\n#maxval next\n255\n3 4\n");
  EXPECT_EQ(img, GrayImage(2, 1, std::vector<Pixel>{3, 4}));
}

TEST(ReadPgm, Faults) {
  EXPECT_EQ(fault_of("P3\n1 1\n255\n0\n"), Fault::bad_magic);
  EXPECT_EQ(fault_of(""), Fault::bad_magic);
  EXPECT_EQ(fault_of("P2\nx 1\n255\n0\n"), Fault::bad_width);
  EXPECT_EQ(fault_of("P2\n1\n"), Fault::bad_height);
  EXPECT_EQ(fault_of("P2\n0 2\n255\n"), Fault::zero_dimension);
  EXPECT_EQ(fault_of("P2\n2 2\n256\n0 0 0 0\n"), Fault::unsupported_maxval);
  EXPECT_EQ(fault_of("P2\n2 2\n\n"), Fault::bad_maxval);
  EXPECT_EQ(fault_of("P5\n2 2\n255\n\x01\x02"s), Fault::truncated);
  EXPECT_EQ(fault_of("P2\n2 2\n255\n1 2 3\n"), Fault::truncated);
  EXPECT_EQ(fault_of("P2\n2 1\n255\n1 x\n"), Fault::bad_sample);
  EXPECT_EQ(fault_of("P2\n2 1\n255\n1 300\n"), Fault::sample_out_of_range);
}

TEST(ReadPgm, ErrorNamesOffset) {
  try {
    read_pgm("P2\n2 1\n255\n1 300\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.offset(), 13u);
    EXPECT_NE(std::string(e.what()).find("byte 13"), std::string::npos);
  }
}

TEST(ReadPgm, HugeDimensionsDoNotAllocate) {
  EXPECT_EQ(fault_of("P5\n4000000000 4000000000\n255\n\x01"s), Fault::truncated);
}

TEST(WritePgm, ExactBytes) {
  EXPECT_EQ(write_pgm(GrayImage(1, 1, Pixel{42}), PgmMode::binary), "P5\n1 1\n255\n\x2a"s);
  EXPECT_EQ(write_pgm(GrayImage(2, 2, std::vector<Pixel>{0, 128, 255, 7}), PgmMode::ascii),
            "P2\n2 2\n255\n0 128\n255 7\n");
}

TEST(WritePgm, RoundTripRandomImagesBothModes) {
  std::mt19937_64 gen(2024);
  for (int i = 0; i < 50; ++i) {
    const auto img = oracle::random_image(gen, 1 + gen() % 20, 1 + gen() % 20);
    EXPECT_EQ(read_pgm(write_pgm(img, PgmMode::binary)), img);
    EXPECT_EQ(read_pgm(write_pgm(img, PgmMode::ascii)), img);
  }
  const auto img16 = oracle::random_image(gen, 16, 16);
  EXPECT_EQ(read_pgm(write_pgm(img16, PgmMode::binary)), img16);
}

}  // namespace
}  // namespace impulse
