#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "slicefn/domain.hpp"
#include "slicefn/quaternion.hpp"

namespace slicefn {

// F(z) = sum_n z^n c_n on the closed upper half-plane, c_n in H_C. Quaternion
// coefficients (zero sqrt(-1) part) give an entire intrinsic polynomial; a
// single coefficient a + sqrt(-1) b is the constant stem (a, b). Nonzero
// sqrt(-1) parts are only admissible on domains without real points.
struct PolynomialStem {
  std::vector<Hc> coeffs;
};

// Upper-half evaluator z -> F1(z) + sqrt(-1) F2(z), called with Im z >= 0 only.
using UpperHalfMap = std::function<Hc(Complex)>;

struct CallableStem {
  UpperHalfMap upper;
  // Optional values supplied by the user for Im z < 0; only consulted by
  // check_intrinsic, evaluation always reflects the upper half.
  UpperHalfMap lower;
};

enum class StemKind { Polynomial, Constant, Callable };

// Intrinsic stem F: D -> H_C. Values on the lower half are only ever produced
// by reflection F(conj z) = bar(F(z)).
class StemFunction {
 public:
  using Backend = std::variant<PolynomialStem, CallableStem>;

  // Polynomial with right quaternionic coefficients a_0..a_n.
  static StemFunction polynomial(CircularDomain domain, const std::vector<Quaternion>& coeffs);
  static StemFunction polynomial(CircularDomain domain, std::vector<Hc> coeffs);
  // F = a + sqrt(-1) b on the upper half.
  static StemFunction constant(CircularDomain domain, const Quaternion& a, const Quaternion& b);
  static StemFunction callable(CircularDomain domain, UpperHalfMap upper, UpperHalfMap lower = {});
  static StemFunction callable(CircularDomain domain, std::function<Quaternion(Complex)> f1,
                               std::function<Quaternion(Complex)> f2);

  const CircularDomain& domain() const { return *domain_; }
  const Backend& backend() const { return backend_; }
  StemKind kind() const;
  bool is_polynomial() const { return std::holds_alternative<PolynomialStem>(backend_); }
  // Throws ArgumentError for callable stems.
  const std::vector<Hc>& coeffs() const;
  // Degree of the polynomial backend after trimming exact zeros (-1 for zero).
  int degree() const;

  // Throws DomainError for z outside D.
  Hc operator()(Complex z) const;
  // Same as operator() without the membership test.
  Hc eval_unchecked(Complex z) const;

  StemFunction with_domain(CircularDomain domain) const;

 private:
  StemFunction(CircularDomain domain, Backend backend);
  std::shared_ptr<const CircularDomain> domain_;
  Backend backend_;
};

Hc stem_eval(const StemFunction& F, Complex z);

struct IntrinsicReport {
  bool pass = true;
  std::vector<Complex> violations;
};

// Polynomial stems pass structurally; callable stems are sampled on D+.
IntrinsicReport check_intrinsic(const StemFunction& F, int n_samples = 256, double tol = 1e-9,
                                unsigned seed = 0);

StemFunction stem_add(const StemFunction& F, const StemFunction& G);
StemFunction stem_scale(const StemFunction& F, double a);
// Pointwise H_C product F G; polynomial stems are convolved in order.
StemFunction stem_mul(const StemFunction& F, const StemFunction& G);
StemFunction stem_conj(const StemFunction& F);
// CN(F) = F F^c; its values have zero i, j, k parts.
StemFunction stem_cn(const StemFunction& F);

// Complex scalar coefficients of a polynomial whose values are complex, e.g. CN(F).
std::vector<Complex> complex_coeffs(const StemFunction& F);

// Component maps of F in the basis {1, i, j, k}; F = sum_k G_k(z) u_k.
class IntrinsicCurve {
 public:
  explicit IntrinsicCurve(StemFunction F) : F_(std::move(F)) {}
  Complex component(int k, Complex z) const;
  std::array<Complex, 4> operator()(Complex z) const;
  const StemFunction& stem() const { return F_; }

 private:
  StemFunction F_;
};

IntrinsicCurve curve_components(const StemFunction& F);

// Partial derivatives of F in alpha and beta. Polynomial stems are
// differentiated exactly; callable stems use second order central differences
// with a one-sided second order stencil when z +- 2h leaves the domain.
struct StemPartials {
  Hc d_alpha;
  Hc d_beta;
};
StemPartials stem_partials(const StemFunction& F, Complex z, double h = 1e-5);

// Exact derivative of a polynomial stem with respect to z.
std::vector<Hc> derivative_coeffs(const std::vector<Hc>& coeffs);
// Horner evaluation of sum_n z^n c_n.
Hc horner(const std::vector<Hc>& coeffs, Complex z);
std::vector<Hc> convolve(const std::vector<Hc>& a, const std::vector<Hc>& b);

}  // namespace slicefn
