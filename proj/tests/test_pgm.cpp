#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "radmom/gray_image.hpp"
#include "radmom/pgm.hpp"
#include "test_support.hpp"

using namespace radmom;
using testsupport::TempDir;

namespace {

GrayImage load_from_string(const std::string& text) {
  std::istringstream in(text);
  return load_pgm(in);
}

}  // namespace

TEST(PgmLoad, PlainFormat) {
  GrayImage img = load_from_string("P2 2 2 255 1 2 3 4");
  EXPECT_EQ(img, GrayImage(2, 2, {1, 2, 3, 4}));
}

TEST(PgmLoad, BinaryMatchesPlain) {
  std::string p5 = "P5\n2 2\n255\n";
  p5 += {1, 2, 3, 4};
  EXPECT_EQ(load_from_string(p5), load_from_string("P2 2 2 255 1 2 3 4"));
}

TEST(PgmLoad, HeaderComments) {
  GrayImage img = load_from_string(
      "P2 # created by hand\n2 2 # dims\n# maxval next\n255\n1 2 3 4\n");
  EXPECT_EQ(img, GrayImage(2, 2, {1, 2, 3, 4}));
}

TEST(PgmLoad, RejectsDeepImages) {
  EXPECT_THROW(load_from_string("P2 2 2 65535 1 2 3 4"), PgmError);
  EXPECT_THROW(load_from_string("P2 2 2 0 0 0 0 0"), PgmError);
}

TEST(PgmLoad, RejectsBadMagic) {
  EXPECT_THROW(load_from_string("P3 2 2 255 1 2 3 4"), PgmError);
  EXPECT_THROW(load_from_string(""), PgmError);
}

TEST(PgmLoad, RejectsZeroDimension) {
  EXPECT_THROW(load_from_string("P2 0 2 255"), PgmError);
  EXPECT_THROW(load_from_string("P2 2 0 255"), PgmError);
}

TEST(PgmLoad, RejectsTruncatedData) {
  EXPECT_THROW(load_from_string("P2 2 2 255 1 2 3"), PgmError);
  std::string p5 = "P5\n2 2\n255\n";
  p5 += {1, 2, 3};
  EXPECT_THROW(load_from_string(p5), PgmError);
}

TEST(PgmLoad, RejectsMalformedHeader) {
  EXPECT_THROW(load_from_string("P2 two 2 255 1 2 3 4"), PgmError);
  EXPECT_THROW(load_from_string("P2 2"), PgmError);
}

TEST(PgmLoad, RejectsSamplesAboveMaxval) {
  EXPECT_THROW(load_from_string("P2 2 1 10 5 11"), PgmError);
  std::string p5 = "P5\n2 1\n10\n";
  p5 += {5, 11};
  EXPECT_THROW(load_from_string(p5), PgmError);
}

TEST(PgmLoad, MissingFile) {
  EXPECT_THROW(load_pgm("/nonexistent/path/img.pgm"), PgmError);
}

TEST(PgmRoundTrip, BothEncodings) {
  TempDir dir;
  GrayImage img(2, 2, {1, 2, 3, 4});
  save_pgm(img, dir.file("b.pgm"), /*binary=*/true);
  save_pgm(img, dir.file("a.pgm"), /*binary=*/false);
  EXPECT_EQ(load_pgm(dir.file("b.pgm")), img);
  EXPECT_EQ(load_pgm(dir.file("a.pgm")), img);
}

TEST(PgmRoundTrip, MinimalImage) {
  TempDir dir;
  GrayImage img(1, 1, {0});
  save_pgm(img, dir.file("min.pgm"), /*binary=*/true);
  EXPECT_EQ(load_pgm(dir.file("min.pgm")), img);
}

TEST(PgmRoundTrip, LargeRandomImage) {
  TempDir dir;
  GrayImage img = random_image(200, 200, 42);
  save_pgm(img, dir.file("r5.pgm"), /*binary=*/true);
  save_pgm(img, dir.file("r2.pgm"), /*binary=*/false);
  EXPECT_EQ(load_pgm(dir.file("r5.pgm")), img);
  EXPECT_EQ(load_pgm(dir.file("r2.pgm")), img);
}

// save -> load is the identity for arbitrary images in either encoding.
TEST(PgmRoundTrip, RandomShapesProperty) {
  TempDir dir;
  std::mt19937_64 rng(99);
  for (int t = 0; t < 20; ++t) {
    const int w = 1 + int(rng() % 70);
    const int h = 1 + int(rng() % 70);
    GrayImage img = random_image(w, h, rng());
    const bool binary = (t % 2) == 0;
    save_pgm(img, dir.file("t.pgm"), binary);
    EXPECT_EQ(load_pgm(dir.file("t.pgm")), img) << w << "x" << h;
  }
}

TEST(PgmSave, PlainLinesStayShort) {
  TempDir dir;
  GrayImage img = constant_image(100, 3, 255);
  save_pgm(img, dir.file("wide.pgm"), /*binary=*/false);
  std::istringstream in(testsupport::read_file(dir.file("wide.pgm")));
  std::string line;
  while (std::getline(in, line)) EXPECT_LE(line.size(), 70u);
}
