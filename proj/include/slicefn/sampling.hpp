#pragma once

#include <random>
#include <vector>

#include "slicefn/domain.hpp"
#include "slicefn/quaternion.hpp"

namespace slicefn {

using Rng = std::mt19937_64;

// Window used in place of infinite bounds when a domain is sampled.
inline constexpr Box kDefaultWindow{-4.0, 4.0, 0.0, 4.0};

// Bounding box of D+ intersected with `window` where the box is unbounded.
Box sampling_box(const CircularDomain& domain, const Box& window = kDefaultWindow);

// Uniform points of D+ with beta > 0 by rejection sampling.
std::vector<Complex> sample_upper_points(const CircularDomain& domain, int n, Rng& rng,
                                         const Box& window = kDefaultWindow);

// Cell-centred n x n grid over each region's (clipped) box, keeping points of
// the region with beta > 0; regions are visited in order.
std::vector<Complex> grid_upper_points(const CircularDomain& domain, int n,
                                       const Box& window = kDefaultWindow);

double uniform(Rng& rng, double lo, double hi);
Quaternion random_quaternion(Rng& rng, double lo = -1.0, double hi = 1.0);
ImaginaryUnit random_unit(Rng& rng);

// n near-uniform directions on S from the golden-angle spiral.
std::vector<ImaginaryUnit> fibonacci_sphere(int n);

}  // namespace slicefn
