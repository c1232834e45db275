#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "radmom/gray_image.hpp"

namespace radmom {

// Netpbm grayscale files, P5 (binary) and P2 (ASCII), maxval 1..255.
// Header comments (# to end of line) are allowed between tokens; the P5
// payload starts after the single whitespace byte that follows maxval.

struct PgmError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Reads the next whitespace-delimited header token, skipping comments.
inline std::string next_pgm_token(std::istream& in) {
  std::string token;
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  while (c != EOF && !std::isspace(c) && c != '#') {
    token.push_back(char(c));
    c = in.get();
  }
  if (c != EOF) in.unget();
  return token;
}

inline long parse_pgm_number(std::istream& in, const char* what) {
  const std::string token = next_pgm_token(in);
  if (token.empty()) throw PgmError(std::string("pgm: missing ") + what);
  long value = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9')
      throw PgmError(std::string("pgm: malformed ") + what + " '" + token + "'");
    value = value * 10 + (ch - '0');
    if (value > 1'000'000'000) throw PgmError(std::string("pgm: ") + what + " out of range");
  }
  return value;
}

}  // namespace detail

inline GrayImage load_pgm(std::istream& in) {
  const std::string magic = detail::next_pgm_token(in);
  if (magic != "P2" && magic != "P5")
    throw PgmError("pgm: bad magic '" + magic + "' (expected P2 or P5)");
  const bool binary = magic == "P5";

  const long width = detail::parse_pgm_number(in, "width");
  const long height = detail::parse_pgm_number(in, "height");
  const long maxval = detail::parse_pgm_number(in, "maxval");
  if (width < 1 || height < 1)
    throw PgmError("pgm: zero or negative image dimension");
  if (maxval < 1 || maxval > 255)
    throw PgmError("pgm: unsupported maxval " + std::to_string(maxval) +
                   " (only 8-bit images, 1..255)");

  const std::size_t count = std::size_t(width) * std::size_t(height);
  std::vector<std::uint8_t> pixels(count);

  if (binary) {
    const int sep = in.get();
    if (sep == EOF || !std::isspace(sep))
      throw PgmError("pgm: expected single whitespace after maxval");
    in.read(reinterpret_cast<char*>(pixels.data()),
            std::streamsize(count));
    if (std::size_t(in.gcount()) != count)
      throw PgmError("pgm: truncated pixel data");
    for (std::uint8_t p : pixels)
      if (p > maxval)
        throw PgmError("pgm: sample value " + std::to_string(p) +
                       " exceeds maxval " + std::to_string(maxval));
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      long v;
      try {
        v = detail::parse_pgm_number(in, "sample");
      } catch (const PgmError&) {
        throw PgmError("pgm: truncated or malformed pixel data");
      }
      if (v > maxval)
        throw PgmError("pgm: sample value " + std::to_string(v) +
                       " exceeds maxval " + std::to_string(maxval));
      pixels[i] = std::uint8_t(v);
    }
  }
  return GrayImage(int(width), int(height), std::move(pixels));
}

inline GrayImage load_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PgmError("pgm: cannot open '" + path + "' for reading");
  return load_pgm(in);
}

inline void save_pgm(const GrayImage& image, std::ostream& out,
                     bool binary = true) {
  out << (binary ? "P5" : "P2") << "\n"
      << image.width() << " " << image.height() << "\n255\n";
  if (binary) {
    out.write(reinterpret_cast<const char*>(image.pixels().data()),
              std::streamsize(image.pixel_count()));
  } else {
    // Netpbm asks for plain-format lines no longer than 70 characters.
    std::size_t on_line = 0;
    for (std::size_t i = 0; i < image.pixel_count(); ++i) {
      out << int(image.pixels()[i]);
      if (++on_line == 16 || i + 1 == image.pixel_count()) {
        out << "\n";
        on_line = 0;
      } else {
        out << " ";
      }
    }
  }
  if (!out) throw PgmError("pgm: write failed");
}

inline void save_pgm(const GrayImage& image, const std::string& path,
                     bool binary = true) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PgmError("pgm: cannot open '" + path + "' for writing");
  save_pgm(image, out, binary);
}

}  // namespace radmom
