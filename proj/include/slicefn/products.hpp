#pragma once

#include <vector>

#include "slicefn/slice.hpp"
#include "slicefn/zeros.hpp"

namespace slicefn {

// f . g = I(F G). Pointwise only when f is a real slice function.
SliceFunction slice_product(const SliceFunction& f, const SliceFunction& g);
// f^c = I(F^c).
SliceFunction conjugate(const SliceFunction& f);
// N(f) = f . f^c = I(CN(F)), a real slice function.
SliceFunction normal(const SliceFunction& f);

// Regular reciprocal f^{-.} = I(CN(F)^{-1} F^c), defined off the zero spheres
// of N(f).
class ReciprocalFunction {
 public:
  const SliceFunction& base() const { return base_; }
  const std::vector<SphereId>& excluded() const { return excluded_; }

  // Throws DomainError on an excluded sphere or where |N(f)| underflows.
  Quaternion operator()(const Quaternion& x) const;

 private:
  friend ReciprocalFunction reciprocal(const SliceFunction& f);
  ReciprocalFunction(SliceFunction base, std::vector<SphereId> excluded)
      : base_(std::move(base)), excluded_(std::move(excluded)) {}
  SliceFunction base_;
  std::vector<SphereId> excluded_;
};

// Throws DegenerateError when N(f) vanishes identically.
ReciprocalFunction reciprocal(const SliceFunction& f);

// |N(f)| below this marks a point of V(N(f)) during reciprocal evaluation.
inline constexpr double kNormalZeroThreshold = 1e-12;

// T_f(x) = f^c(x)^{-1} x f^c(x). Throws SingularError when f^c(x) = 0.
Quaternion t_map(const SliceFunction& f, const Quaternion& x);

}  // namespace slicefn
