#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "radmom/gray_image.hpp"
#include "radmom/pgm.hpp"

namespace radmom {

// The four axis projections of an image: pixel sums along columns, rows,
// diagonals (x+y = k) and anti-diagonals (y-x+width-1 = k). The anti-diagonal
// index is shifted by width-1 so that it starts at zero.
//
// Every projection redistributes the same pixel mass, so the four arrays all
// sum to the zeroth moment of the image. Elements fit comfortably in 32 bits:
// a single line never crosses more than max(width, height) pixels.
struct ProjectionSet {
  std::vector<std::uint32_t> vertical;      // length width, column sums
  std::vector<std::uint32_t> horizontal;    // length height, row sums
  std::vector<std::uint32_t> diagonal;      // length width+height-1
  std::vector<std::uint32_t> antidiagonal;  // length width+height-1
  int source_width = 0;
  int source_height = 0;
};

// Single pass over the pixels, additions only; all four arrays are filled
// in one traversal.
inline ProjectionSet project(const GrayImage& image) {
  const int w = image.width();
  const int h = image.height();
  ProjectionSet proj;
  proj.source_width = w;
  proj.source_height = h;
  proj.vertical.assign(std::size_t(w), 0);
  proj.horizontal.assign(std::size_t(h), 0);
  proj.diagonal.assign(std::size_t(w) + h - 1, 0);
  proj.antidiagonal.assign(std::size_t(w) + h - 1, 0);

  std::uint32_t* const vert = proj.vertical.data();
  for (int y = 0; y < h; ++y) {
    const std::uint8_t* row = image.row(y).data();
    // For this row, diagonal indices are y+x (ascending in x) and
    // anti-diagonal indices are (y+w-1)-x (descending in x).
    std::uint32_t* const diag = proj.diagonal.data() + y;
    std::uint32_t* const anti = proj.antidiagonal.data() + y + (w - 1);
    std::uint32_t row_sum = 0;
    for (int x = 0; x < w; ++x) {
      const std::uint32_t p = row[x];
      row_sum += p;
      vert[x] += p;
      diag[x] += p;
      anti[-x] += p;
    }
    proj.horizontal[std::size_t(y)] = row_sum;
  }
  return proj;
}

enum class ProjectionFormat { kCsv, kPgmDensity };

inline void write_projection_csv(std::span<const std::uint32_t> arr,
                                 std::ostream& out) {
  out << "index,value\n";
  for (std::size_t k = 0; k < arr.size(); ++k)
    out << k << "," << arr[k] << "\n";
}

// Density plot of a projection: column k is filled white from the bottom up
// to a height proportional to arr[k]; the maximum element reaches the full
// plot height. An all-zero projection renders all black.
inline GrayImage density_plot(std::span<const std::uint32_t> arr,
                              int plot_height = 256) {
  if (arr.empty())
    throw std::invalid_argument("density_plot: empty projection");
  if (plot_height < 1)
    throw std::invalid_argument("density_plot: plot height must be positive");
  const std::uint64_t max_value = *std::max_element(arr.begin(), arr.end());
  const int w = int(arr.size());
  std::vector<std::uint8_t> pixels(std::size_t(w) * plot_height, 0);
  if (max_value > 0) {
    for (int x = 0; x < w; ++x) {
      const int fill = int(std::uint64_t(arr[std::size_t(x)]) * plot_height / max_value);
      for (int y = plot_height - fill; y < plot_height; ++y)
        pixels[std::size_t(y) * w + x] = 255;
    }
  }
  return GrayImage(w, plot_height, std::move(pixels));
}

inline void render_projection(std::span<const std::uint32_t> arr,
                              const std::string& path, ProjectionFormat format,
                              int plot_height = 256) {
  if (format == ProjectionFormat::kCsv) {
    std::ofstream out(path);
    if (!out)
      throw std::runtime_error("render_projection: cannot open '" + path + "'");
    write_projection_csv(arr, out);
    if (!out) throw std::runtime_error("render_projection: write failed");
  } else {
    save_pgm(density_plot(arr, plot_height), path, /*binary=*/true);
  }
}

}  // namespace radmom
