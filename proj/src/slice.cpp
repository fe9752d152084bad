#include "slicefn/slice.hpp"

#include <cmath>

#include "slicefn/errors.hpp"
#include "slicefn/sampling.hpp"

namespace slicefn {

Quaternion SliceFunction::eval(double alpha, double beta, const ImaginaryUnit& J) const {
  const Complex z(alpha, beta);
  if (!domain().contains(z)) throw DomainError("point outside the circular domain");
  const Hc v = stem_.eval_unchecked(z);
  return v.re + J.quaternion() * v.im;
}

Quaternion SliceFunction::operator()(const Quaternion& x) const {
  const SplitPoint p = split(x);
  if (!p.unit) {
    const Complex z(p.alpha, 0.0);
    if (!domain().contains(z)) throw DomainError("real point outside the circular domain");
    return stem_.eval_unchecked(z).re;
  }
  return eval(p.alpha, p.beta, *p.unit);
}

SliceFunction induce(StemFunction F) { return SliceFunction(std::move(F)); }

Quaternion eval(const SliceFunction& f, const Quaternion& x) { return f(x); }

Quaternion SemisliceRestriction::operator()(Complex z) const {
  if (z.imag() < 0.0) throw DomainError("semislice restriction evaluated below the real axis");
  return parent_.eval(z.real(), z.imag(), J_);
}

SemisliceRestriction restrict(const SliceFunction& f, const ImaginaryUnit& J) {
  return SemisliceRestriction(f, J);
}

Quaternion represent_general(const Quaternion& vJ, const Quaternion& vK, const ImaginaryUnit& J,
                             const ImaginaryUnit& K, const ImaginaryUnit& I) {
  const Quaternion jk_inv = (J.quaternion() - K.quaternion()).inverse();
  return (I.quaternion() - K.quaternion()) * (jk_inv * vJ) -
         (I.quaternion() - J.quaternion()) * (jk_inv * vK);
}

Quaternion represent_opposite(const Quaternion& vJ, const Quaternion& vK, const ImaginaryUnit& J,
                              const ImaginaryUnit& I) {
  return 0.5 * (vJ + vK) - (0.5 * I.quaternion()) * (J.quaternion() * (vJ - vK));
}

Quaternion represent(const Quaternion& vJ, const Quaternion& vK, const ImaginaryUnit& J,
                     const ImaginaryUnit& K, const ImaginaryUnit& I, double /*alpha*/,
                     double beta) {
  if (beta < 0.0) throw ArgumentError("represent expects beta >= 0");
  const double gap = distance(J.quaternion(), K.quaternion());
  if (gap <= 1e-12) throw ArgumentError("representation formula needs J != K");
  if (distance(J.quaternion(), -K.quaternion()) <= 1e-14) return represent_opposite(vJ, vK, J, I);
  return represent_general(vJ, vK, J, K, I);
}

Quaternion spherical_derivative(const SliceFunction& f, const Quaternion& x) {
  const Quaternion v = x.imag();
  if (v.is_real()) throw DomainError("spherical derivative is undefined on the real axis");
  return 0.5 * v.inverse() * (f(x) - f(x.conj()));
}

SliceFunction spherical_derivative(const SliceFunction& f) {
  const StemFunction F = f.stem();
  CircularDomain off_axis(f.domain().regions(), true);
  return SliceFunction(StemFunction::callable(std::move(off_axis), [F](Complex z) {
    return Hc{F.eval_unchecked(z).im / z.imag(), Quaternion{}};
  }));
}

namespace {

bool near_real(const Quaternion& q, double tol) { return q.imag().abs() <= tol; }

}  // namespace

bool is_real_slice(const SliceFunction& f, double tol) {
  if (f.stem().is_polynomial()) {
    for (const auto& c : f.stem().coeffs())
      if (!near_real(c.re, tol) || !near_real(c.im, tol)) return false;
    return true;
  }
  Rng rng(0);
  std::vector<Complex> pts = grid_upper_points(f.domain(), 32);
  for (const Complex z : sample_upper_points(f.domain(), 64, rng)) pts.push_back(z);
  for (const Complex z : pts) {
    const Hc v = f.stem().eval_unchecked(z);
    if (!near_real(v.re, tol) || !near_real(v.im, tol)) return false;
  }
  return true;
}

bool is_slice_constant(const SliceFunction& f, double tol) {
  const StemFunction& F = f.stem();
  if (F.is_polynomial()) {
    const auto& c = F.coeffs();
    for (std::size_t n = 1; n < c.size(); ++n)
      if (c[n].abs() > tol) return false;
    return true;
  }
  Rng rng(0);
  std::vector<Complex> pts = grid_upper_points(f.domain(), 32);
  for (const Complex z : sample_upper_points(f.domain(), 64, rng)) pts.push_back(z);
  for (const Complex z : pts) {
    const StemPartials d = stem_partials(F, z);
    const Hc dz = 0.5 * (d.d_alpha - Complex(0.0, 1.0) * d.d_beta);
    if (dz.abs() > tol) return false;
  }
  return true;
}

SphereParts sphere_parts(const SliceFunction& f, const Quaternion& x) {
  const SplitPoint p = split(x);
  if (!p.unit) throw DomainError("sphere parts are undefined at real points");
  const Quaternion fx = f(x);
  const Quaternion fxc = f(x.conj());
  return {0.5 * (fx + fxc), -0.5 * (p.unit->quaternion() * (fx - fxc))};
}

}  // namespace slicefn
