#include "slicefn/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "slicefn/errors.hpp"

namespace slicefn {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void validate(const Region& region) {
  std::visit(Overloaded{
                 [](const Rect& r) {
                   if (std::isnan(r.alpha_min) || std::isnan(r.alpha_max) ||
                       std::isnan(r.beta_min) || std::isnan(r.beta_max))
                     throw ValidationError("rectangle bound is NaN");
                   if (r.beta_min < 0.0)
                     throw ValidationError("rectangle reaches into the lower half-plane");
                   if (!(r.alpha_min < r.alpha_max) || !(r.beta_min < r.beta_max))
                     throw ValidationError("rectangle is empty");
                 },
                 [](const Disk& d) {
                   if (!std::isfinite(d.center.real()) || !std::isfinite(d.center.imag()))
                     throw ValidationError("disk centre must be finite");
                   if (d.center.imag() < 0.0)
                     throw ValidationError("disk centre lies in the lower half-plane");
                   if (!(d.radius > 0.0) || !std::isfinite(d.radius))
                     throw ValidationError("disk radius must be positive and finite");
                 },
                 [](const Annulus& a) {
                   if (!std::isfinite(a.center) || !std::isfinite(a.r_outer))
                     throw ValidationError("annulus must be bounded");
                   if (!(a.r_inner >= 0.0) || !(a.r_inner < a.r_outer))
                     throw ValidationError("annulus radii must satisfy 0 <= r_inner < r_outer");
                 },
             },
             region);
}

// Window used to clip unbounded boxes when sampling.
constexpr double kClip = 1e3;

double clip(double v) { return std::clamp(v, -kClip, kClip); }

}  // namespace

bool Box::bounded() const {
  return std::isfinite(alpha_min) && std::isfinite(alpha_max) && std::isfinite(beta_min) &&
         std::isfinite(beta_max);
}

bool region_contains_upper(const Region& region, Complex z) {
  const double a = z.real();
  const double b = z.imag();
  return std::visit(
      Overloaded{
          [&](const Rect& r) {
            return a > r.alpha_min && a < r.alpha_max && b > r.beta_min && b < r.beta_max;
          },
          [&](const Disk& d) { return std::abs(z - d.center) < d.radius; },
          [&](const Annulus& an) {
            const double rho = std::abs(z - Complex(an.center, 0.0));
            return rho > an.r_inner && rho < an.r_outer;
          },
      },
      region);
}

bool region_contains_real(const Region& region, double alpha) {
  return std::visit(Overloaded{
                        [&](const Rect& r) {
                          return r.beta_min == 0.0 && alpha > r.alpha_min && alpha < r.alpha_max;
                        },
                        [&](const Disk& d) {
                          const double h = d.center.imag();
                          if (h >= d.radius) return false;
                          const double half = std::sqrt(d.radius * d.radius - h * h);
                          return std::abs(alpha - d.center.real()) < half;
                        },
                        [&](const Annulus& an) {
                          const double rho = std::abs(alpha - an.center);
                          return rho > an.r_inner && rho < an.r_outer;
                        },
                    },
                    region);
}

bool region_touches_real(const Region& region) {
  return std::visit(Overloaded{
                        [](const Rect& r) { return r.beta_min == 0.0; },
                        [](const Disk& d) { return d.center.imag() < d.radius; },
                        [](const Annulus&) { return true; },
                    },
                    region);
}

CircularDomain::CircularDomain(std::vector<Region> regions, bool exclude_real)
    : regions_(std::move(regions)), exclude_real_(exclude_real) {
  if (regions_.empty()) throw ValidationError("domain needs at least one region");
  for (const auto& r : regions_) validate(r);
  contains_real_ =
      !exclude_real_ && std::any_of(regions_.begin(), regions_.end(), region_touches_real);
}

CircularDomain CircularDomain::whole(bool exclude_real) {
  return CircularDomain({Rect{}}, exclude_real);
}

CircularDomain CircularDomain::disk(Complex center, double radius, bool exclude_real) {
  return CircularDomain({Disk{center, radius}}, exclude_real);
}

CircularDomain CircularDomain::rect(double a0, double a1, double b0, double b1,
                                    bool exclude_real) {
  return CircularDomain({Rect{a0, a1, b0, b1}}, exclude_real);
}

CircularDomain CircularDomain::annulus(double center, double r_inner, double r_outer,
                                       bool exclude_real) {
  return CircularDomain({Annulus{center, r_inner, r_outer}}, exclude_real);
}

bool CircularDomain::bounded() const { return bounding_box().bounded(); }

int CircularDomain::region_of(Complex z) const {
  const double b = std::abs(z.imag());
  for (std::size_t n = 0; n < regions_.size(); ++n) {
    if (b == 0.0) {
      if (contains_real_ && region_contains_real(regions_[n], z.real())) return int(n);
    } else if (region_contains_upper(regions_[n], {z.real(), b})) {
      return int(n);
    }
  }
  return -1;
}

bool CircularDomain::contains(Complex z) const { return region_of(z) >= 0; }

bool CircularDomain::contains(const Quaternion& x) const { return contains(split(x).z()); }

bool CircularDomain::contains_disk(Complex z, double r) const {
  if (!contains(z)) return false;
  constexpr int kBoundary = 256;
  for (int n = 0; n < kBoundary; ++n) {
    const double t = 2.0 * std::numbers::pi * n / kBoundary;
    if (!contains(z + std::polar(r, t))) return false;
  }
  return true;
}

Box CircularDomain::region_box(const Region& region) {
  return std::visit(
      Overloaded{
          [](const Rect& r) { return Box{r.alpha_min, r.alpha_max, r.beta_min, r.beta_max}; },
          [](const Disk& d) {
            return Box{d.center.real() - d.radius, d.center.real() + d.radius,
                       std::max(0.0, d.center.imag() - d.radius), d.center.imag() + d.radius};
          },
          [](const Annulus& a) {
            return Box{a.center - a.r_outer, a.center + a.r_outer, 0.0, a.r_outer};
          },
      },
      region);
}

Box CircularDomain::bounding_box() const {
  Box box = region_box(regions_.front());
  for (const auto& r : regions_) {
    const Box b = region_box(r);
    box.alpha_min = std::min(box.alpha_min, b.alpha_min);
    box.alpha_max = std::max(box.alpha_max, b.alpha_max);
    box.beta_min = std::min(box.beta_min, b.beta_min);
    box.beta_max = std::max(box.beta_max, b.beta_max);
  }
  return box;
}

std::vector<std::vector<int>> CircularDomain::components() const {
  const int n = int(regions_.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  // Two open regions are joined iff their upper parts overlap; the overlap is
  // detected on a cell-centred grid over the intersection of their boxes.
  constexpr int kGrid = 128;
  auto overlap = [&](const Region& p, const Region& q) {
    const Box a = region_box(p);
    const Box b = region_box(q);
    const double a0 = clip(std::max(a.alpha_min, b.alpha_min));
    const double a1 = clip(std::min(a.alpha_max, b.alpha_max));
    const double b0 = clip(std::max(a.beta_min, b.beta_min));
    const double b1 = clip(std::min(a.beta_max, b.beta_max));
    if (!(a0 < a1) || !(b0 < b1)) return false;
    for (int s = 0; s < kGrid; ++s)
      for (int t = 0; t < kGrid; ++t) {
        const Complex z(a0 + (a1 - a0) * (s + 0.5) / kGrid, b0 + (b1 - b0) * (t + 0.5) / kGrid);
        if (region_contains_upper(p, z) && region_contains_upper(q, z)) return true;
      }
    return false;
  };

  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (find(s) != find(t) && overlap(regions_[s], regions_[t])) parent[find(s)] = find(t);

  std::vector<std::vector<int>> groups;
  std::vector<int> slot(n, -1);
  for (int s = 0; s < n; ++s) {
    const int root = find(s);
    if (slot[root] < 0) {
      slot[root] = int(groups.size());
      groups.emplace_back();
    }
    groups[slot[root]].push_back(s);
  }
  return groups;
}

}  // namespace slicefn
