#include "slicefn/products.hpp"

#include <algorithm>
#include <cmath>

#include "slicefn/errors.hpp"

namespace slicefn {

SliceFunction slice_product(const SliceFunction& f, const SliceFunction& g) {
  return SliceFunction(stem_mul(f.stem(), g.stem()));
}

SliceFunction conjugate(const SliceFunction& f) { return SliceFunction(stem_conj(f.stem())); }

SliceFunction normal(const SliceFunction& f) { return SliceFunction(stem_cn(f.stem())); }

Quaternion ReciprocalFunction::operator()(const Quaternion& x) const {
  const SplitPoint p = split(x);
  for (const SphereId& s : excluded_)
    if (std::abs(s.alpha - p.alpha) <= 1e-9 && std::abs(s.beta - p.beta) <= 1e-9)
      throw DomainError("reciprocal evaluated on a zero sphere of N(f)");
  return base_(x);
}

ReciprocalFunction reciprocal(const SliceFunction& f) {
  const StemFunction& F = f.stem();
  const StemFunction Fc = stem_conj(F);
  const StemFunction cn = stem_cn(F);
  std::vector<SphereId> excluded;

  if (F.is_polynomial()) {
    // Throws DegenerateError when N(f) = 0; the zero spheres of N(f) are those of f.
    for (const SphereZero& z : find_zeros_polynomial(f)) excluded.push_back(z.sphere);
  } else {
    bool all_zero = true;
    for (const Complex z : grid_upper_points(f.domain(), 16)) {
      if (std::abs(cn.eval_unchecked(z).scalar_part()) > kNormalZeroThreshold) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) throw DegenerateError("N(f) vanishes identically; f has no regular reciprocal");
  }

  StemFunction stem = StemFunction::callable(F.domain(), [Fc, cn](Complex z) {
    const Complex n = cn.eval_unchecked(z).scalar_part();
    if (std::abs(n) < kNormalZeroThreshold)
      throw DomainError("reciprocal evaluated where N(f) vanishes");
    return (1.0 / n) * Fc.eval_unchecked(z);
  });
  return ReciprocalFunction(SliceFunction(std::move(stem)), std::move(excluded));
}

Quaternion t_map(const SliceFunction& f, const Quaternion& x) {
  const Quaternion fc = conjugate(f)(x);
  if (fc.norm() == 0.0) throw SingularError("T_f undefined: f^c vanishes at x");
  return fc.inverse() * x * fc;
}

}  // namespace slicefn
