#pragma once

#include "slicefn/stem.hpp"

namespace slicefn {

// Left slice function f = I(F): f(alpha + beta J) = F1(z) + J F2(z) with
// z = alpha + sqrt(-1) beta.
class SliceFunction {
 public:
  explicit SliceFunction(StemFunction stem) : stem_(std::move(stem)) {}

  const StemFunction& stem() const { return stem_; }
  const CircularDomain& domain() const { return stem_.domain(); }

  // Throws DomainError outside Omega_D (real points need contains_real()).
  Quaternion operator()(const Quaternion& x) const;
  // Value at alpha + beta J for any sign of beta.
  Quaternion eval(double alpha, double beta, const ImaginaryUnit& J) const;

 private:
  StemFunction stem_;
};

SliceFunction induce(StemFunction F);
Quaternion eval(const SliceFunction& f, const Quaternion& x);

// One-variable view z -> f(Re z + Im z J) on D_J+.
class SemisliceRestriction {
 public:
  SemisliceRestriction(SliceFunction parent, ImaginaryUnit J)
      : parent_(std::move(parent)), J_(J) {}
  // Throws DomainError for Im z < 0 or z outside D.
  Quaternion operator()(Complex z) const;
  const ImaginaryUnit& unit() const { return J_; }
  const SliceFunction& parent() const { return parent_; }

 private:
  SliceFunction parent_;
  ImaginaryUnit J_;
};

SemisliceRestriction restrict(const SliceFunction& f, const ImaginaryUnit& J);

// Reconstruction of f(alpha + beta I) from vJ = f(alpha + beta J) and
// vK = f(alpha + beta K). Dispatches to the opposite-unit form when K = -J.
// Throws ArgumentError when J = K.
Quaternion represent(const Quaternion& vJ, const Quaternion& vK, const ImaginaryUnit& J,
                     const ImaginaryUnit& K, const ImaginaryUnit& I, double alpha, double beta);
// (I - K)((J - K)^{-1} vJ) - (I - J)((J - K)^{-1} vK).
Quaternion represent_general(const Quaternion& vJ, const Quaternion& vK, const ImaginaryUnit& J,
                             const ImaginaryUnit& K, const ImaginaryUnit& I);
// K = -J: (vJ + vK)/2 - (I/2)(J (vJ - vK)).
Quaternion represent_opposite(const Quaternion& vJ, const Quaternion& vK, const ImaginaryUnit& J,
                              const ImaginaryUnit& I);

// (1/2) Im(x)^{-1} (f(x) - f(x^c)); throws DomainError at real x.
Quaternion spherical_derivative(const SliceFunction& f, const Quaternion& x);
// The slice function I(F2(z) / Im z) on Omega_D minus the real axis.
SliceFunction spherical_derivative(const SliceFunction& f);

// Polynomial stems: coefficient test; callable stems: sampled on D+.
bool is_real_slice(const SliceFunction& f, double tol = kDefaultTolerance);

// True iff df/dx vanishes: polynomial stems compare coefficients of z^n,
// n >= 1; callable stems sample a 32 x 32 grid per region plus 64 random
// points of D+ with finite differences.
bool is_slice_constant(const SliceFunction& f, double tol = 1e-8);

// f restricted to the sphere of x is b + I c; returns (b, c) = (F1(z), F2(z)).
struct SphereParts {
  Quaternion b;
  Quaternion c;
};
SphereParts sphere_parts(const SliceFunction& f, const Quaternion& x);

}  // namespace slicefn
