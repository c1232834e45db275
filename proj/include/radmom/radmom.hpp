#pragma once

// Umbrella header: exact raw image moments of 8-bit grayscale images through
// axis projections, plus the reference backends, PGM I/O and the benchmark
// harness.

#include "radmom/bench.hpp"
#include "radmom/drt.hpp"
#include "radmom/gray_image.hpp"
#include "radmom/moments.hpp"
#include "radmom/pgm.hpp"
#include "radmom/power_table.hpp"
#include "radmom/projections.hpp"
#include "radmom/reference.hpp"
#include "radmom/wide_int.hpp"
