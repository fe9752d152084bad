#pragma once

#include <optional>
#include <string>

#include "slicefn/slice.hpp"

namespace slicefn {

// 1 - IJ at x = alpha + beta I: the constant stem (1, -J) on H minus R.
SliceFunction slice_constant_example(const ImaginaryUnit& J);

// x + c - (x - c) I J on B(0, r) minus R. Throws ArgumentError unless c > r > 0.
SliceFunction max_modulus_counterexample(const ImaginaryUnit& J, double c, double r);

// x - x I J on H minus R, stem z (1 - sqrt(-1) J).
SliceFunction open_mapping_counterexample(const ImaginaryUnit& J);

// x^n a on H. Throws ArgumentError for n < 0.
SliceFunction monomial(int n, const Quaternion& a);

// (x - J) . (x - a) on H.
SliceFunction binomial_zero(const ImaginaryUnit& J = ImaginaryUnit::i(),
                            const Quaternion& a = Quaternion::j());

// Closed forms of x - x I J at alpha + beta I in terms of the dot and cross
// products of I and J in R^3. `printed` uses sqrt(1 - (I.J)^2) as the
// coefficient of I x J, `corrected` uses alpha.
Quaternion open_mapping_expansion_printed(double alpha, double beta, const ImaginaryUnit& I,
                                          const ImaginaryUnit& J);
Quaternion open_mapping_expansion_corrected(double alpha, double beta, const ImaginaryUnit& I,
                                            const ImaginaryUnit& J);

struct GallerySpec {
  std::string name;  // slice_constant | max_modulus_cex | open_mapping_cex | monomial | binomial_zero
  // Unset J and a take per-name defaults: J = i, a = j for binomial_zero,
  // J = j and a = 1 otherwise.
  std::optional<ImaginaryUnit> J;
  double c = 10.0;
  double r = 1.0;
  int n = 1;
  std::optional<Quaternion> a;

  ImaginaryUnit unit() const;
  Quaternion coefficient() const;

  // Throws ArgumentError for unknown names or invalid parameters.
  void validate() const;
};

SliceFunction build_gallery(const GallerySpec& spec);

}  // namespace slicefn
