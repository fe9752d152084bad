#include "slicefn/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "slicefn/errors.hpp"

namespace slicefn {

namespace {

constexpr Complex kSqrtMinusOne{0.0, 1.0};

Hc dz(const StemPartials& d) { return 0.5 * (d.d_alpha - kSqrtMinusOne * d.d_beta); }
Hc dz_bar(const StemPartials& d) { return 0.5 * (d.d_alpha + kSqrtMinusOne * d.d_beta); }

}  // namespace

void DerivativeConfig::validate() const {
  if (!(fd_step > 0.0)) throw ArgumentError("fd_step must be positive");
  if (!(tol > 0.0)) throw ArgumentError("tol must be positive");
  if (grid < 2) throw ArgumentError("grid must have at least two cells per side");
}

SliceFunction d_dx(const SliceFunction& f, const DerivativeConfig& cfg) {
  cfg.validate();
  const StemFunction& F = f.stem();
  if (F.is_polynomial())
    return SliceFunction(StemFunction::polynomial(F.domain(), derivative_coeffs(F.coeffs())));
  const double h = cfg.fd_step;
  return SliceFunction(
      StemFunction::callable(F.domain(), [F, h](Complex z) { return dz(stem_partials(F, z, h)); }));
}

SliceFunction d_dxc(const SliceFunction& f, const DerivativeConfig& cfg) {
  cfg.validate();
  const StemFunction& F = f.stem();
  if (F.is_polynomial()) return SliceFunction(StemFunction::polynomial(F.domain(), {Hc{}}));
  const double h = cfg.fd_step;
  return SliceFunction(StemFunction::callable(
      F.domain(), [F, h](Complex z) { return dz_bar(stem_partials(F, z, h)); }));
}

RegularityReport is_slice_regular(const SliceFunction& f, const DerivativeConfig& cfg) {
  cfg.validate();
  RegularityReport report;
  const StemFunction& F = f.stem();
  if (F.is_polynomial()) {
    report.structural = true;
    return report;
  }

  const IntrinsicCurve curve = curve_components(F);
  const double h = cfg.fd_step;
  for (const Complex z : grid_upper_points(f.domain(), cfg.grid, cfg.window)) {
    const Complex stencil[] = {z + Complex(h, 0.0), z - Complex(h, 0.0), z + Complex(0.0, h),
                               z - Complex(0.0, h)};
    if (!std::all_of(std::begin(stencil), std::end(stencil),
                     [&](Complex w) { return f.domain().contains(w); }))
      continue;  // interior points only
    StemPartials d;
    try {
      d = stem_partials(F, z, h);
    } catch (const DomainError&) {
      continue;
    }
    const double r = dz_bar(d).abs();
    if (r > report.max_residual) {
      report.max_residual = r;
      report.worst_point = z;
    }
    // Each basis component is a complex function; Cauchy-Riemann reads
    // dG/dalpha + sqrt(-1) dG/dbeta = 0 for G = component(k).
    const std::array<Complex, 4> ga = curve(stencil[0]);
    const std::array<Complex, 4> gb = curve(stencil[1]);
    const std::array<Complex, 4> gc = curve(stencil[2]);
    const std::array<Complex, 4> gd = curve(stencil[3]);
    for (std::size_t k = 0; k < 4; ++k) {
      const Complex da = (ga[k] - gb[k]) / (2.0 * h);
      const Complex db = (gc[k] - gd[k]) / (2.0 * h);
      report.max_component_residual =
          std::max(report.max_component_residual, 0.5 * std::abs(da + kSqrtMinusOne * db));
    }
  }
  report.pass = report.max_residual <= cfg.tol && report.max_component_residual <= cfg.tol;
  return report;
}

Quaternion cullen_residual(const SliceFunction& f, const ImaginaryUnit& I, const Quaternion& x,
                           const DerivativeConfig& cfg) {
  cfg.validate();
  const Quaternion v = x.imag();
  const double beta = dot(v, I.quaternion());
  if (distance(v, beta * I.quaternion()) > 1e-12 * (1.0 + v.abs()))
    throw ArgumentError("point does not lie on the slice C_I");
  const double alpha = x.w;
  const double h = cfg.fd_step;
  const Quaternion da = (f.eval(alpha + h, beta, I) - f.eval(alpha - h, beta, I)) / (2.0 * h);
  const Quaternion db = (f.eval(alpha, beta + h, I) - f.eval(alpha, beta - h, I)) / (2.0 * h);
  return 0.5 * (da + I.quaternion() * db);
}

}  // namespace slicefn
