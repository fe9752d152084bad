#pragma once

#include <limits>
#include <variant>
#include <vector>

#include "slicefn/quaternion.hpp"

namespace slicefn {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Open rectangle (alpha_min, alpha_max) x (beta_min, beta_max), beta_min >= 0.
// Bounds may be infinite. beta_min == 0 means the rectangle touches the real
// axis; its mirror image then fills (alpha_min, alpha_max) x (-beta_max, beta_max).
struct Rect {
  double alpha_min = -kInfinity;
  double alpha_max = kInfinity;
  double beta_min = 0.0;
  double beta_max = kInfinity;
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Open disk; the centre must lie in the closed upper half-plane. A disk that
// crosses the axis contributes its upper part, mirrored.
struct Disk {
  Complex center;
  double radius = 1.0;
  friend bool operator==(const Disk&, const Disk&) = default;
};

// Open upper half of the annulus r_inner < |z - center| < r_outer, with the
// centre on the real axis.
struct Annulus {
  double center = 0.0;
  double r_inner = 0.5;
  double r_outer = 1.0;
  friend bool operator==(const Annulus&, const Annulus&) = default;
};

using Region = std::variant<Rect, Disk, Annulus>;

struct Box {
  double alpha_min, alpha_max, beta_min, beta_max;
  bool bounded() const;
};

// Circular domain D = conj(D) described by regions in the closed upper
// half-plane. The circular set is Omega_D = { alpha + beta J : alpha + sqrt(-1) beta in D }.
// With exclude_real the real axis is removed from D even where regions touch it.
class CircularDomain {
 public:
  // Throws ValidationError on regions reaching into beta < 0 or degenerate sizes.
  explicit CircularDomain(std::vector<Region> regions, bool exclude_real = false);

  // All of H, or H minus the real axis.
  static CircularDomain whole(bool exclude_real = false);
  static CircularDomain disk(Complex center, double radius, bool exclude_real = false);
  static CircularDomain rect(double a0, double a1, double b0, double b1, bool exclude_real = false);
  static CircularDomain annulus(double center, double r_inner, double r_outer,
                                bool exclude_real = false);

  const std::vector<Region>& regions() const { return regions_; }
  bool exclude_real() const { return exclude_real_; }
  // True iff Omega_D meets the real axis.
  bool contains_real() const { return contains_real_; }
  bool bounded() const;

  // Membership of z (either half-plane; the lower half is the mirror image).
  bool contains(Complex z) const;
  bool contains(const Quaternion& x) const;
  // Index of the first region containing the upper-half point, or -1.
  int region_of(Complex z) const;
  // Closed disk of radius r around z lies in D (checked on the centre and 256
  // boundary points, exact for convex regions).
  bool contains_disk(Complex z, double r) const;

  // Bounding box of D+ = D intersected with beta >= 0.
  Box bounding_box() const;
  static Box region_box(const Region& region);

  // Connected components of Omega_D as groups of region indices.
  std::vector<std::vector<int>> components() const;
  bool connected() const { return components().size() <= 1; }

  friend bool operator==(const CircularDomain&, const CircularDomain&) = default;

 private:
  std::vector<Region> regions_;
  bool exclude_real_ = false;
  bool contains_real_ = false;
};

// Strict interior test of one region at an upper-half point (beta > 0).
bool region_contains_upper(const Region& region, Complex z);
// True iff the region's mirrored closure contains the real point alpha in its interior.
bool region_contains_real(const Region& region, double alpha);
bool region_touches_real(const Region& region);

}  // namespace slicefn
