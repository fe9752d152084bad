#pragma once

#include <optional>
#include <vector>

#include "slicefn/sampling.hpp"
#include "slicefn/slice.hpp"

namespace slicefn {

// The sphere alpha + beta S; beta = 0 denotes the real point alpha.
struct SphereId {
  double alpha = 0.0;
  double beta = 0.0;

  Complex z() const { return {alpha, beta}; }
};

enum class ZeroKind { NoZero, SphericalOrReal, SIsolated };

const char* to_string(ZeroKind kind);

struct ZeroClassification {
  ZeroKind kind = ZeroKind::NoZero;
  // Set for SIsolated only.
  std::optional<Quaternion> point;
};

struct SphereZero {
  SphereId sphere;
  ZeroClassification classification;
};

inline constexpr double kZeroTolerance = 1e-9;

// Trichotomy on one sphere from F(z) and CN(F)(z):
//   |CN| > tol            -> NoZero
//   |F| <= tol            -> SphericalOrReal
//   otherwise             -> SIsolated at alpha + beta I, I = -F1 F2^{-1}
// Throws DomainError off the domain and InconsistencyError when the computed I
// is not a unit imaginary quaternion or a pointwise real stem yields SIsolated.
ZeroClassification classify_sphere(const SliceFunction& f, const SphereId& s,
                                   double tol = kZeroTolerance);

// Roots of sum_n c_n z^n via eigenvalues of the balanced companion matrix.
// Clusters of nearby eigenvalues are treated as one multiple root and
// polished by Newton steps on the matching derivative. Returned with
// multiplicity.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

// Complete zero set of a polynomial slice function, one entry per sphere.
// Throws ArgumentError for callable stems and DegenerateError when N(f) = 0.
std::vector<SphereZero> find_zeros_polynomial(const SliceFunction& f,
                                              double tol = kZeroTolerance);

struct ZeroGrid {
  int n_alpha = 64;
  int n_beta = 64;
  Box window = kDefaultWindow;
  double relaxed_tol = 1e-6;
};

// Grid search of the zero locus: records every grid sphere with |CN| below
// the relaxed tolerance and refines each local minimum of |CN| by a shrinking
// pattern search in (alpha, beta).
std::vector<SphereZero> sample_zero_locus(const SliceFunction& f, const ZeroGrid& grid = {});

// True iff f is constant on the sphere, i.e. |F2(z)| / beta <= tol.
// Throws ArgumentError for beta <= 0.
bool is_degenerate_sphere(const SliceFunction& f, const SphereId& s, double tol = kZeroTolerance);

}  // namespace slicefn
