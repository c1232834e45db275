#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace radmom {

// 8-bit grayscale image, row-major. Pixel (x, y) lives at pixels[y*width + x]
// with x the column in [0, width) and y the row in [0, height).
// Immutable after construction, safe to share across threads.
class GrayImage {
 public:
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
      : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width_ < 1 || height_ < 1)
      throw std::invalid_argument("GrayImage: dimensions must be at least 1x1");
    if (pixels_.size() != std::size_t(width_) * std::size_t(height_))
      throw std::invalid_argument(
          "GrayImage: pixel count does not match width*height");
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t pixel_count() const { return pixels_.size(); }

  std::uint8_t at(int x, int y) const {
    return pixels_[std::size_t(y) * width_ + x];
  }

  std::span<const std::uint8_t> pixels() const { return pixels_; }

  std::span<const std::uint8_t> row(int y) const {
    return {pixels_.data() + std::size_t(y) * width_, std::size_t(width_)};
  }

  bool operator==(const GrayImage&) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

inline GrayImage constant_image(int width, int height, std::uint8_t value) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("constant_image: dimensions must be positive");
  return GrayImage(width, height,
                   std::vector<std::uint8_t>(std::size_t(width) * height, value));
}

// Single nonzero pixel at column x, row y.
inline GrayImage delta_image(int width, int height, int x, int y,
                             std::uint8_t value) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("delta_image: dimensions must be positive");
  if (x < 0 || x >= width || y < 0 || y >= height)
    throw std::out_of_range("delta_image: pixel coordinate out of range");
  std::vector<std::uint8_t> pixels(std::size_t(width) * height, 0);
  pixels[std::size_t(y) * width + x] = value;
  return GrayImage(width, height, std::move(pixels));
}

// Diagonal ramp: intensity (x+y)*255 / ((width-1)+(height-1)), 0 for a 1x1.
inline GrayImage gradient_image(int width, int height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("gradient_image: dimensions must be positive");
  const int span = (width - 1) + (height - 1);
  std::vector<std::uint8_t> pixels(std::size_t(width) * height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      pixels[std::size_t(y) * width + x] =
          span == 0 ? 0 : std::uint8_t(((x + y) * 255) / span);
  return GrayImage(width, height, std::move(pixels));
}

// Uniform random pixels. Each pixel is the low byte of one std::mt19937_64
// draw, taken row-major; mt19937_64 output is fixed by the standard, so the
// same (width, height, seed) reproduces bit-identical images everywhere.
inline GrayImage random_image(int width, int height, std::uint64_t seed) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("random_image: dimensions must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> pixels(std::size_t(width) * height);
  for (auto& p : pixels) p = std::uint8_t(rng() & 0xff);
  return GrayImage(width, height, std::move(pixels));
}

inline GrayImage transposed(const GrayImage& image) {
  std::vector<std::uint8_t> pixels(image.pixel_count());
  for (int y = 0; y < image.height(); ++y)
    for (int x = 0; x < image.width(); ++x)
      pixels[std::size_t(x) * image.height() + y] = image.at(x, y);
  return GrayImage(image.height(), image.width(), std::move(pixels));
}

}  // namespace radmom
