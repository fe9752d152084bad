#pragma once

#include <gtest/gtest.h>

#include "slicefn/quaternion.hpp"
#include "slicefn/sampling.hpp"
#include "slicefn/slice.hpp"

#define EXPECT_QNEAR(a, b, tol) EXPECT_LE(slicefn::distance((a), (b)), (tol)) << (a) << " vs " << (b)

namespace testing_support {

using namespace slicefn;

// Quaternion product from the 4x4 left-multiplication table, written
// independently of the library operator.
inline Quaternion table_mul(const Quaternion& p, const Quaternion& q) {
  const double m[4][4] = {{p.w, -p.x, -p.y, -p.z},
                          {p.x, p.w, -p.z, p.y},
                          {p.y, p.z, p.w, -p.x},
                          {p.z, -p.y, p.x, p.w}};
  const double v[4] = {q.w, q.x, q.y, q.z};
  double r[4] = {0, 0, 0, 0};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) r[a] += m[a][b] * v[b];
  return {r[0], r[1], r[2], r[3]};
}

// sum_n x^n a_n by repeated quaternion multiplication.
inline Quaternion power_sum(const std::vector<Quaternion>& a, const Quaternion& x) {
  Quaternion acc, p(1.0);
  for (const auto& c : a) {
    acc += table_mul(p, c);
    p = table_mul(p, x);
  }
  return acc;
}

inline SliceFunction poly(const std::vector<Quaternion>& a,
                          const CircularDomain& D = CircularDomain::whole()) {
  return SliceFunction(StemFunction::polynomial(D, a));
}

inline std::vector<Quaternion> random_coeffs(Rng& rng, int degree) {
  std::vector<Quaternion> a;
  for (int n = 0; n <= degree; ++n) a.push_back(random_quaternion(rng));
  return a;
}

inline Quaternion random_point_off_axis(Rng& rng) {
  return on_slice(uniform(rng, -2.0, 2.0), uniform(rng, 0.05, 2.0), random_unit(rng));
}

using QFn = std::function<Quaternion(Complex)>;

inline const Quaternion I_ = Quaternion::i();
inline const Quaternion J_ = Quaternion::j();
inline const Quaternion K_ = Quaternion::k();

}  // namespace testing_support
