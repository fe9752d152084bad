#include "slicefn/sampling.hpp"

#include <cmath>
#include <numbers>

#include "slicefn/errors.hpp"

namespace slicefn {

namespace {

Box clip_box(Box box, const Box& window) {
  if (!std::isfinite(box.alpha_min)) box.alpha_min = window.alpha_min;
  if (!std::isfinite(box.alpha_max)) box.alpha_max = window.alpha_max;
  if (!std::isfinite(box.beta_max)) box.beta_max = std::max(window.beta_max, box.beta_min + 1.0);
  return box;
}

}  // namespace

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Quaternion random_quaternion(Rng& rng, double lo, double hi) {
  return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

ImaginaryUnit random_unit(Rng& rng) {
  std::normal_distribution<double> g;
  for (;;) {
    const Quaternion v(0, g(rng), g(rng), g(rng));
    if (v.abs() > 1e-6) return ImaginaryUnit::normalized(v);
  }
}

Box sampling_box(const CircularDomain& domain, const Box& window) {
  return clip_box(domain.bounding_box(), window);
}

std::vector<Complex> sample_upper_points(const CircularDomain& domain, int n, Rng& rng,
                                         const Box& window) {
  const Box box = sampling_box(domain, window);
  std::vector<Complex> out;
  out.reserve(std::size_t(std::max(n, 0)));
  long attempts = 0;
  while (int(out.size()) < n) {
    if (++attempts > 1000L * n + 10000)
      throw ArgumentError("domain has negligible area inside the sampling window");
    const Complex z(uniform(rng, box.alpha_min, box.alpha_max),
                    uniform(rng, box.beta_min, box.beta_max));
    if (z.imag() > 0.0 && domain.contains(z)) out.push_back(z);
  }
  return out;
}

std::vector<Complex> grid_upper_points(const CircularDomain& domain, int n, const Box& window) {
  std::vector<Complex> out;
  for (const auto& region : domain.regions()) {
    const Box box = clip_box(CircularDomain::region_box(region), window);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        const Complex z(box.alpha_min + (box.alpha_max - box.alpha_min) * (s + 0.5) / n,
                        box.beta_min + (box.beta_max - box.beta_min) * (t + 0.5) / n);
        if (z.imag() > 0.0 && region_contains_upper(region, z)) out.push_back(z);
      }
  }
  return out;
}

std::vector<ImaginaryUnit> fibonacci_sphere(int n) {
  std::vector<ImaginaryUnit> out;
  out.reserve(std::size_t(std::max(n, 0)));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int m = 0; m < n; ++m) {
    const double y = 1.0 - 2.0 * (m + 0.5) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - y * y));
    const double t = golden * m;
    out.push_back(ImaginaryUnit::normalized({0, r * std::cos(t), y, r * std::sin(t)}));
  }
  return out;
}

}  // namespace slicefn
