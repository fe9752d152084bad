#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicefn/calculus.hpp"
#include "slicefn/sampling.hpp"
#include "slicefn/slice.hpp"

namespace slicefn {

enum class VerdictKind { IdenticallyZero, SliceConstant, ZeroAtPoint, ConstantSemislice, Inconclusive };

const char* to_string(VerdictKind kind);

struct PrincipleVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<Quaternion> point;     // ZeroAtPoint
  std::optional<ImaginaryUnit> unit;   // ConstantSemislice
  std::string reason;                  // Inconclusive
  std::vector<Quaternion> evidence;
};

// Finite-sample surrogate for "the set has an accumulation point": at least
// min_count samples inside a disk of the given radius around one of them,
// with some pair closer than min_pair and not all coincident.
struct AccumulationRule {
  int min_count = 12;
  double radius = 1e-2;
  double min_pair = 1e-3;
};

bool has_accumulation(const std::vector<Complex>& points, const AccumulationRule& rule = {});

struct IdentityConfig {
  double zero_tol = 1e-10;
  double coeff_tol = 1e-8;
  int grid = 32;
  AccumulationRule rule;
};

// Checks the claimed zeros on D_J+ and D_K+ and concludes f = 0 when both sets
// accumulate. Throws ArgumentError for J = K, for samples off their semislice
// and for samples where |f| > zero_tol.
PrincipleVerdict identity_verdict(const SliceFunction& f, const ImaginaryUnit& J,
                                  const ImaginaryUnit& K,
                                  const std::vector<Quaternion>& zero_samples_J,
                                  const std::vector<Quaternion>& zero_samples_K,
                                  const IdentityConfig& cfg = {});

// |(1/2pi) int_0^{2pi} f(c + r e^{I t}) dt - f(c)| by the trapezoidal rule.
// `center` is alpha + sqrt(-1) beta on D_I+. Throws ArgumentError when the disk
// leaves D_I+.
double mean_value_residual(const SliceFunction& f, const ImaginaryUnit& I, Complex center,
                           double r, int n = 512);

enum class ExtremumKind { Max, Min };

struct Extremum {
  Quaternion point;
  Complex z;
  ExtremumKind kind = ExtremumKind::Max;
  double value = 0.0;
  // Strict: every neighbour is smaller (max) or larger (min) by more than the
  // flat tolerance. Interior: all eight neighbours belong to the domain.
  bool strict = false;
  bool interior = false;
};

struct ExtremumGrid {
  int n = 64;
  Box window = kDefaultWindow;
  // Relative band inside which neighbouring values count as equal.
  double flat_tol = 1e-12;
};

// Local extrema of |f| on D_I+ over a cell-centred grid (8-neighbour test),
// strict interior extrema refined by a quadratic fit along each axis.
std::vector<Extremum> extremum_scan(const SliceFunction& f, const ImaginaryUnit& I,
                                    const ExtremumGrid& grid = {});

// Shrinking pattern search for a local minimum of |f_I+| starting at z,
// confined to D+ with beta > 0.
Complex refine_semislice_minimum(const SliceFunction& f, const ImaginaryUnit& I, Complex z,
                                 double step = 0.05);

struct QuadratureConfig {
  int n = 64;  // cells per side of each region box
};

struct SemisliceMassReport {
  ImaginaryUnit unit = ImaginaryUnit::i();
  double mass = 0.0;
  double quadrature_error_estimate = 0.0;
};

// Tensor midpoint rule for int_{D+} |F1 + I F2| dmu. Throws ArgumentError on
// unbounded domains.
SemisliceMassReport semislice_mass(const SliceFunction& f, const ImaginaryUnit& I,
                                   const QuadratureConfig& quad = {});

struct MinModulusConfig {
  double zero_tol = 1e-9;
  double mass_tol = 1e-8;
  int n_directions = 64;
  QuadratureConfig quad{24};
  DerivativeConfig derivative;
};

// Minimum modulus alternative at p: f(p) = 0, or some semislice on which
// df/dx vanishes (searched on a disk around p). Other outcomes are Inconclusive.
PrincipleVerdict min_modulus_verdict(const SliceFunction& f, const Quaternion& p,
                                     const MinModulusConfig& cfg = {});

// Two-semislice maximum principle: when |f| has interior local maxima on both
// D_J+ and D_K+, f must be slice-constant. Returns SliceConstant when f is,
// Inconclusive otherwise (reason states whether maxima were found).
PrincipleVerdict max_modulus_verdict(const SliceFunction& f, const ImaginaryUnit& J,
                                     const ImaginaryUnit& K, const ExtremumGrid& grid = {});

struct KernelConfig {
  int n_directions = 256;
  double tol = 1e-8;
  QuadratureConfig quad;
  DerivativeConfig derivative;
};

// Semislices on which df/dx vanishes: Fibonacci directions plus the exact
// candidates I = -G1 G2^{-1} read off G = dF/dz, filtered by mass <= tol.
// Throws InconsistencyError when two distinct directions are found for a
// regular f whose derivative is not identically zero.
std::vector<ImaginaryUnit> kernel_semislices(const SliceFunction& f, const KernelConfig& cfg = {});

struct OpennessConfig {
  int n_samples = 200000;
  // Candidate radii rho = fraction * r * (median local stretch of f).
  std::vector<double> eps_fractions{0.5, 0.25, 0.125, 0.0625};
  // Lattice cells per radius; pitch = rho / lattice.
  int lattice = 3;
  unsigned seed = 0;
};

struct OpennessReport {
  bool open = false;
  double rho = 0.0;
  double pitch = 0.0;
  // Centre of an uncovered lattice cell (for the last rho tried) when !open.
  std::optional<Quaternion> witness;
  int samples = 0;
};

// Monte-Carlo image test: is some ball B(f(x), rho) covered by images of
// samples of B(x, r), cell by cell on a lattice of the given pitch? Throws
// ArgumentError when B(x, r) leaves Omega_D.
OpennessReport openness_probe(const SliceFunction& f, const Quaternion& x, double r,
                              const OpennessConfig& cfg = {});

}  // namespace slicefn
