#include "slicefn/gallery.hpp"

#include <cmath>

#include "slicefn/errors.hpp"

namespace slicefn {

namespace {

// I.J and I x J for pure imaginary I, J.
double dot3(const Quaternion& a, const Quaternion& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Quaternion cross3(const Quaternion& a, const Quaternion& b) {
  return {0.0, a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Quaternion expansion(double coeff, double alpha, double beta, const ImaginaryUnit& I,
                     const ImaginaryUnit& J) {
  const Quaternion i = I.quaternion();
  const Quaternion j = J.quaternion();
  return alpha * (Quaternion(1.0) + Quaternion(dot3(i, j))) + beta * i + beta * j -
         coeff * cross3(i, j);
}

}  // namespace

SliceFunction slice_constant_example(const ImaginaryUnit& J) {
  return SliceFunction(
      StemFunction::constant(CircularDomain::whole(true), Quaternion(1.0), -J.quaternion()));
}

SliceFunction max_modulus_counterexample(const ImaginaryUnit& J, double c, double r) {
  if (!(r > 0.0) || !(c > r)) throw ArgumentError("max_modulus_counterexample needs c > r > 0");
  const Quaternion j = J.quaternion();
  // (z + c) + (z - c) sqrt(-1) (-J)
  std::vector<Hc> coeffs{Hc{Quaternion(c), c * j}, Hc{Quaternion(1.0), -j}};
  return SliceFunction(
      StemFunction::polynomial(CircularDomain::disk(Complex(0.0, 0.0), r, true), std::move(coeffs)));
}

SliceFunction open_mapping_counterexample(const ImaginaryUnit& J) {
  std::vector<Hc> coeffs{Hc{}, Hc{Quaternion(1.0), -J.quaternion()}};
  return SliceFunction(StemFunction::polynomial(CircularDomain::whole(true), std::move(coeffs)));
}

SliceFunction monomial(int n, const Quaternion& a) {
  if (n < 0) throw ArgumentError("monomial degree must be >= 0");
  std::vector<Quaternion> coeffs(std::size_t(n + 1));
  coeffs.back() = a;
  return SliceFunction(StemFunction::polynomial(CircularDomain::whole(), coeffs));
}

SliceFunction binomial_zero(const ImaginaryUnit& J, const Quaternion& a) {
  const StemFunction f =
      StemFunction::polynomial(CircularDomain::whole(), std::vector<Quaternion>{-J.quaternion(), Quaternion(1.0)});
  const StemFunction g = StemFunction::polynomial(CircularDomain::whole(), std::vector<Quaternion>{-a, Quaternion(1.0)});
  return SliceFunction(stem_mul(f, g));
}

Quaternion open_mapping_expansion_printed(double alpha, double beta, const ImaginaryUnit& I,
                                          const ImaginaryUnit& J) {
  const double d = dot3(I.quaternion(), J.quaternion());
  return expansion(std::sqrt(std::max(0.0, 1.0 - d * d)), alpha, beta, I, J);
}

Quaternion open_mapping_expansion_corrected(double alpha, double beta, const ImaginaryUnit& I,
                                            const ImaginaryUnit& J) {
  return expansion(alpha, alpha, beta, I, J);
}

void GallerySpec::validate() const {
  if (name == "max_modulus_cex") {
    if (!(r > 0.0) || !(c > r)) throw ArgumentError("max_modulus_cex needs c > r > 0");
  } else if (name == "monomial") {
    if (n < 0) throw ArgumentError("monomial needs n >= 0");
  } else if (name != "slice_constant" && name != "open_mapping_cex" && name != "binomial_zero") {
    throw ArgumentError("unknown gallery function '" + name + "'");
  }
}

ImaginaryUnit GallerySpec::unit() const {
  if (J) return *J;
  return name == "binomial_zero" ? ImaginaryUnit::i() : ImaginaryUnit::j();
}

Quaternion GallerySpec::coefficient() const {
  if (a) return *a;
  return name == "binomial_zero" ? Quaternion::j() : Quaternion(1.0);
}

SliceFunction build_gallery(const GallerySpec& spec) {
  spec.validate();
  const ImaginaryUnit J = spec.unit();
  if (spec.name == "slice_constant") return slice_constant_example(J);
  if (spec.name == "max_modulus_cex") return max_modulus_counterexample(J, spec.c, spec.r);
  if (spec.name == "open_mapping_cex") return open_mapping_counterexample(J);
  if (spec.name == "monomial") return monomial(spec.n, spec.coefficient());
  return binomial_zero(J, spec.coefficient());
}

}  // namespace slicefn
