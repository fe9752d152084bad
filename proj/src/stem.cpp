#include "slicefn/stem.hpp"

#include <algorithm>
#include <cmath>

#include "slicefn/errors.hpp"
#include "slicefn/sampling.hpp"

namespace slicefn {

namespace {

bool has_sqrt_minus_one_part(const std::vector<Hc>& coeffs) {
  return std::any_of(coeffs.begin(), coeffs.end(),
                     [](const Hc& c) { return c.im != Quaternion{}; });
}

void require_same_domain(const StemFunction& F, const StemFunction& G) {
  if (!(F.domain() == G.domain())) throw ArgumentError("stem functions live on different domains");
}

}  // namespace

Hc horner(const std::vector<Hc>& coeffs, Complex z) {
  Hc acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = z * acc + *it;
  return acc;
}

std::vector<Hc> convolve(const std::vector<Hc>& a, const std::vector<Hc>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Hc> c(a.size() + b.size() - 1);
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = 0; t < b.size(); ++t) c[s + t] += a[s] * b[t];
  return c;
}

std::vector<Hc> derivative_coeffs(const std::vector<Hc>& coeffs) {
  if (coeffs.size() <= 1) return {Hc{}};
  std::vector<Hc> d(coeffs.size() - 1);
  for (std::size_t n = 1; n < coeffs.size(); ++n) d[n - 1] = double(n) * coeffs[n];
  return d;
}

StemFunction::StemFunction(CircularDomain domain, Backend backend)
    : domain_(std::make_shared<const CircularDomain>(std::move(domain))),
      backend_(std::move(backend)) {
  if (auto* p = std::get_if<PolynomialStem>(&backend_)) {
    if (p->coeffs.empty()) p->coeffs.push_back(Hc{});
    if (domain_->contains_real() && has_sqrt_minus_one_part(p->coeffs))
      throw ValidationError(
          "stem with a nonzero sqrt(-1) coefficient is not intrinsic on a domain meeting the "
          "real axis");
  } else if (!std::get<CallableStem>(backend_).upper) {
    throw ArgumentError("callable stem without an upper-half evaluator");
  }
}

StemFunction StemFunction::polynomial(CircularDomain domain,
                                      const std::vector<Quaternion>& coeffs) {
  std::vector<Hc> c(coeffs.begin(), coeffs.end());
  return StemFunction(std::move(domain), PolynomialStem{std::move(c)});
}

StemFunction StemFunction::polynomial(CircularDomain domain, std::vector<Hc> coeffs) {
  return StemFunction(std::move(domain), PolynomialStem{std::move(coeffs)});
}

StemFunction StemFunction::constant(CircularDomain domain, const Quaternion& a,
                                    const Quaternion& b) {
  return StemFunction(std::move(domain), PolynomialStem{{Hc{a, b}}});
}

StemFunction StemFunction::callable(CircularDomain domain, UpperHalfMap upper,
                                    UpperHalfMap lower) {
  return StemFunction(std::move(domain), CallableStem{std::move(upper), std::move(lower)});
}

StemFunction StemFunction::callable(CircularDomain domain, std::function<Quaternion(Complex)> f1,
                                    std::function<Quaternion(Complex)> f2) {
  if (!f1 || !f2) throw ArgumentError("callable stem needs both component maps");
  return callable(std::move(domain),
                  [f1 = std::move(f1), f2 = std::move(f2)](Complex z) { return Hc{f1(z), f2(z)}; });
}

StemKind StemFunction::kind() const {
  if (std::holds_alternative<PolynomialStem>(backend_))
    return degree() <= 0 ? StemKind::Constant : StemKind::Polynomial;
  return StemKind::Callable;
}

const std::vector<Hc>& StemFunction::coeffs() const {
  if (const auto* p = std::get_if<PolynomialStem>(&backend_)) return p->coeffs;
  throw ArgumentError("callable stem has no coefficients");
}

int StemFunction::degree() const {
  const auto& c = coeffs();
  for (int n = int(c.size()) - 1; n >= 0; --n)
    if (c[std::size_t(n)] != Hc{}) return n;
  return -1;
}

Hc StemFunction::eval_unchecked(Complex z) const {
  const bool lower = z.imag() < 0.0;
  const Complex upper_z = lower ? std::conj(z) : z;
  Hc v = std::visit(
      [&](const auto& b) -> Hc {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, PolynomialStem>) {
          return horner(b.coeffs, upper_z);
        } else {
          return b.upper(upper_z);
        }
      },
      backend_);
  return lower ? v.bar() : v;
}

Hc StemFunction::operator()(Complex z) const {
  if (!domain_->contains(z)) throw DomainError("stem evaluated outside its domain");
  return eval_unchecked(z);
}

StemFunction StemFunction::with_domain(CircularDomain domain) const {
  return StemFunction(std::move(domain), backend_);
}

Hc stem_eval(const StemFunction& F, Complex z) { return F(z); }

IntrinsicReport check_intrinsic(const StemFunction& F, int n_samples, double tol, unsigned seed) {
  IntrinsicReport report;
  const auto* c = std::get_if<CallableStem>(&F.backend());
  if (c == nullptr) return report;

  const CircularDomain& D = F.domain();
  Rng rng(seed);
  for (const Complex z : sample_upper_points(D, n_samples, rng)) {
    if (!c->lower) break;
    const Hc reflected = c->upper(z).bar();
    if ((reflected - c->lower(std::conj(z))).abs() > tol) report.violations.push_back(z);
  }
  if (D.contains_real()) {
    // F2 must vanish on D intersected with R.
    const Box box = sampling_box(D);
    const int n_real = std::max(16, n_samples / 4);
    for (int s = 0; s < n_real; ++s) {
      const double a = box.alpha_min + (box.alpha_max - box.alpha_min) * (s + 0.5) / n_real;
      const Complex z(a, 0.0);
      if (!D.contains(z)) continue;
      if (c->upper(z).im.abs() > tol) report.violations.push_back(z);
    }
  }
  report.pass = report.violations.empty();
  return report;
}

StemFunction stem_add(const StemFunction& F, const StemFunction& G) {
  require_same_domain(F, G);
  if (F.is_polynomial() && G.is_polynomial()) {
    std::vector<Hc> c = F.coeffs();
    const auto& g = G.coeffs();
    if (g.size() > c.size()) c.resize(g.size());
    for (std::size_t n = 0; n < g.size(); ++n) c[n] += g[n];
    return StemFunction::polynomial(F.domain(), std::move(c));
  }
  return StemFunction::callable(
      F.domain(), [F, G](Complex z) { return F.eval_unchecked(z) + G.eval_unchecked(z); });
}

StemFunction stem_scale(const StemFunction& F, double a) {
  if (F.is_polynomial()) {
    std::vector<Hc> c = F.coeffs();
    for (auto& v : c) v = v * a;
    return StemFunction::polynomial(F.domain(), std::move(c));
  }
  return StemFunction::callable(F.domain(), [F, a](Complex z) { return F.eval_unchecked(z) * a; });
}

StemFunction stem_mul(const StemFunction& F, const StemFunction& G) {
  require_same_domain(F, G);
  if (F.is_polynomial() && G.is_polynomial())
    return StemFunction::polynomial(F.domain(), convolve(F.coeffs(), G.coeffs()));
  return StemFunction::callable(
      F.domain(), [F, G](Complex z) { return F.eval_unchecked(z) * G.eval_unchecked(z); });
}

StemFunction stem_conj(const StemFunction& F) {
  if (F.is_polynomial()) {
    std::vector<Hc> c = F.coeffs();
    for (auto& v : c) v = v.c_conj();
    return StemFunction::polynomial(F.domain(), std::move(c));
  }
  return StemFunction::callable(F.domain(),
                                [F](Complex z) { return F.eval_unchecked(z).c_conj(); });
}

StemFunction stem_cn(const StemFunction& F) {
  StemFunction cn = stem_mul(F, stem_conj(F));
  if (!cn.is_polynomial()) return cn;
  // The vector parts cancel exactly in theory; drop the rounding residue.
  std::vector<Hc> c = cn.coeffs();
  for (auto& v : c) v = Hc::from_complex(v.scalar_part());
  return StemFunction::polynomial(F.domain(), std::move(c));
}

std::vector<Complex> complex_coeffs(const StemFunction& F) {
  std::vector<Complex> out;
  for (const auto& c : F.coeffs()) out.push_back(c.scalar_part());
  return out;
}

Complex IntrinsicCurve::component(int k, Complex z) const {
  const Hc v = F_(z);
  const auto re = v.re.components();
  const auto im = v.im.components();
  return {re.at(std::size_t(k)), im.at(std::size_t(k))};
}

std::array<Complex, 4> IntrinsicCurve::operator()(Complex z) const {
  const Hc v = F_(z);
  const auto re = v.re.components();
  const auto im = v.im.components();
  return {Complex(re[0], im[0]), Complex(re[1], im[1]), Complex(re[2], im[2]),
          Complex(re[3], im[3])};
}

IntrinsicCurve curve_components(const StemFunction& F) { return IntrinsicCurve(F); }

StemPartials stem_partials(const StemFunction& F, Complex z, double h) {
  if (!(h > 0.0)) throw ArgumentError("finite-difference step must be positive");
  if (F.is_polynomial()) {
    // F is holomorphic on both halves (the reflection bar(P(conj z)) is again
    // holomorphic), so dF/dbeta = sqrt(-1) dF/dalpha.
    const bool lower = z.imag() < 0.0;
    Hc d = horner(derivative_coeffs(F.coeffs()), lower ? std::conj(z) : z);
    if (lower) d = d.bar();
    return {d, Complex(0.0, 1.0) * d};
  }

  const CircularDomain& D = F.domain();
  auto diff = [&](Complex dir) -> Hc {
    if (D.contains(z + 2.0 * h * dir) && D.contains(z - 2.0 * h * dir))
      return (F.eval_unchecked(z + h * dir) - F.eval_unchecked(z - h * dir)) * (0.5 / h);
    for (const double s : {1.0, -1.0}) {
      const Complex step = s * h * dir;
      if (D.contains(z + step) && D.contains(z + 2.0 * step)) {
        const Hc v = F.eval_unchecked(z) * -3.0 + F.eval_unchecked(z + step) * 4.0 -
                     F.eval_unchecked(z + 2.0 * step);
        return v * (s * 0.5 / h);
      }
    }
    throw DomainError("finite-difference stencil leaves the domain");
  };
  return {diff({1.0, 0.0}), diff({0.0, 1.0})};
}

}  // namespace slicefn
