// Tour of the library: generate an image, save it as PGM, print its raw
// moments from all three backends with their multiplication tallies, and
// render the four projections as density plots.
//
// Usage: moments_tour [output-directory]   (default: current directory)

#include <cstdio>
#include <iostream>
#include <string>

#include "radmom/radmom.hpp"

using namespace radmom;

int main(int argc, char** argv) {
  const std::string outdir = argc > 1 ? argv[1] : ".";

  const GrayImage image = gradient_image(320, 240);
  const std::string image_path = outdir + "/gradient.pgm";
  save_pgm(image, image_path);
  std::cout << "wrote " << image_path << " (" << image.width() << "x"
            << image.height() << ")\n\n";

  const PowerTable table(drt_table_max_k(image.width(), image.height()));
  MultCounter counter;
  struct {
    const char* name;
    RawMoments (*compute)(const GrayImage&, MultCounter*);
  } backends[] = {{"naive", naive_raw_moments}, {"baseline", baseline_raw_moments}};

  for (const auto& b : backends) {
    const RawMoments m = b.compute(image, &counter);
    std::cout << b.name << ": " << m << "\n  " << counter.total()
              << " multiplications\n";
  }
  const RawMoments m = drt_raw_moments(image, table, &counter);
  std::cout << "drt: " << m << "\n  " << counter.count
            << " weight multiplications + " << counter.assembly_count
            << " in the assembly\n\n";

  const ProjectionSet proj = project(image);
  const std::pair<const char*, const std::vector<std::uint32_t>*> arrays[] = {
      {"vertical", &proj.vertical},
      {"horizontal", &proj.horizontal},
      {"diagonal", &proj.diagonal},
      {"antidiagonal", &proj.antidiagonal}};
  for (const auto& [name, arr] : arrays) {
    const std::string path = outdir + "/" + name + ".pgm";
    render_projection(*arr, path, ProjectionFormat::kPgmDensity, 120);
    std::cout << "wrote " << path << " (" << arr->size() << " bins)\n";
  }
  return 0;
}
