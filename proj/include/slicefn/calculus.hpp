#pragma once

#include "slicefn/sampling.hpp"
#include "slicefn/slice.hpp"

namespace slicefn {

struct DerivativeConfig {
  double fd_step = 1e-5;
  double tol = 1e-6;
  // Cells per side of the sampling grid laid over each region.
  int grid = 24;
  Box window = kDefaultWindow;

  void validate() const;
};

// df/dx = I(dF/dz) with dF/dz = (dF/dalpha - sqrt(-1) dF/dbeta) / 2.
SliceFunction d_dx(const SliceFunction& f, const DerivativeConfig& cfg = {});
// df/dx^c = I(dF/dz-bar) with dF/dz-bar = (dF/dalpha + sqrt(-1) dF/dbeta) / 2.
SliceFunction d_dxc(const SliceFunction& f, const DerivativeConfig& cfg = {});

struct RegularityReport {
  double max_residual = 0.0;
  Complex worst_point;
  // Max discrete Cauchy-Riemann defect over the four basis components.
  double max_component_residual = 0.0;
  bool pass = true;
  // True when the verdict is structural (holomorphic polynomial backend).
  bool structural = false;
};

RegularityReport is_slice_regular(const SliceFunction& f, const DerivativeConfig& cfg = {});

// (1/2)(d/dalpha + I d/dbeta) of alpha + beta I -> f(alpha + beta I) at x in C_I,
// by central differences. Throws DomainError when the stencil leaves Omega_D.
Quaternion cullen_residual(const SliceFunction& f, const ImaginaryUnit& I, const Quaternion& x,
                           const DerivativeConfig& cfg = {});

}  // namespace slicefn
