#include "support.hpp"

#include "slicefn/errors.hpp"

using namespace slicefn;
using namespace testing_support;

namespace {

const CircularDomain H = CircularDomain::whole();

void expect_hc(const Hc& a, const Hc& b, double tol) {
  EXPECT_QNEAR(a.re, b.re, tol);
  EXPECT_QNEAR(a.im, b.im, tol);
}

}  // namespace

TEST(Stem, EvalExamples) {
  const StemFunction sq = StemFunction::polynomial(H, std::vector<Quaternion>{0, 0, 1});
  expect_hc(sq(Complex(0, 1)), Hc{Quaternion(-1.0), Quaternion()}, 1e-15);

  const StemFunction lin = StemFunction::polynomial(H, std::vector<Quaternion>{-I_, 1});
  expect_hc(lin(Complex(0, 1)), Hc{-I_, Quaternion(1.0)}, 1e-15);

  const StemFunction c = StemFunction::constant(CircularDomain::whole(true), 1, -J_);
  expect_hc(c(Complex(0, -1)), Hc{Quaternion(1.0), J_}, 0.0);
  expect_hc(c(Complex(2, 1)), Hc{Quaternion(1.0), -J_}, 0.0);
}

TEST(Stem, Intrinsic) {
  Rng rng(1);
  const StemFunction F = StemFunction::polynomial(H, random_coeffs(rng, 5));
  for (int n = 0; n < 50; ++n) {
    const Complex z(uniform(rng, -2, 2), uniform(rng, -2, 2));
    expect_hc(F(std::conj(z)), F(z).bar(), 1e-13);
  }
  EXPECT_TRUE(check_intrinsic(F).pass);
}

TEST(Stem, CallableIntrinsicCheck) {
  const StemFunction good = StemFunction::callable(
      H, QFn([](Complex z) { return Quaternion(z.real()); }),
      QFn([](Complex z) { return z.imag() * J_; }));
  EXPECT_TRUE(check_intrinsic(good).pass);

  const StemFunction bad = StemFunction::callable(
      H, QFn([](Complex z) { return Quaternion(z.real()); }), QFn([](Complex) { return Quaternion(1.0); }));
  const IntrinsicReport rep = check_intrinsic(bad);
  EXPECT_FALSE(rep.pass);
  ASSERT_FALSE(rep.violations.empty());
  for (const Complex z : rep.violations) EXPECT_EQ(z.imag(), 0.0);

  // Explicit lower-half values that disagree with the reflection.
  const StemFunction lopsided = StemFunction::callable(
      CircularDomain::whole(true), [](Complex z) { return Hc{Quaternion(z.real()), Quaternion(z.imag())}; },
      [](Complex z) { return Hc{Quaternion(z.real() + 1.0), Quaternion(z.imag())}; });
  EXPECT_FALSE(check_intrinsic(lopsided).pass);
}

TEST(Stem, ImaginaryCoefficientsNeedNoRealPoints) {
  EXPECT_THROW(StemFunction::constant(H, 1, -J_), ValidationError);
  EXPECT_NO_THROW(StemFunction::constant(CircularDomain::whole(true), 1, -J_));
}

TEST(Stem, AddScale) {
  const StemFunction z = StemFunction::polynomial(H, std::vector<Quaternion>{0, 1});
  const StemFunction mz = StemFunction::polynomial(H, std::vector<Quaternion>{0, -1});
  EXPECT_EQ(stem_add(z, mz).degree(), -1);

  const StemFunction sq2 = stem_scale(StemFunction::polynomial(H, std::vector<Quaternion>{0, 0, 1}), 2.0);
  ASSERT_EQ(sq2.coeffs().size(), 3u);
  EXPECT_EQ(sq2.coeffs()[2].re, Quaternion(2.0));
  EXPECT_EQ(sq2.coeffs()[0].re, Quaternion());

  const StemFunction cb = StemFunction::callable(
      H, QFn([](Complex w) { return Quaternion(w.real() * w.real()); }), QFn([](Complex w) { return w.imag() * K_; }));
  const StemFunction sum = stem_add(z, cb);
  EXPECT_EQ(sum.kind(), StemKind::Callable);
  Rng rng(3);
  for (int n = 0; n < 10; ++n) {
    const Complex w(uniform(rng, -2, 2), uniform(rng, 0, 2));
    const Hc want = z(w) + cb(w);
    expect_hc(sum(w), want, 1e-15);
  }
}

TEST(Stem, Multiply) {
  const StemFunction a = StemFunction::polynomial(H, std::vector<Quaternion>{-I_, 1});
  const StemFunction b = StemFunction::polynomial(H, std::vector<Quaternion>{-J_, 1});
  const StemFunction p = stem_mul(a, b);
  ASSERT_EQ(p.coeffs().size(), 3u);
  EXPECT_QNEAR(p.coeffs()[0].re, K_, 0);
  EXPECT_QNEAR(p.coeffs()[1].re, -(I_ + J_), 0);
  EXPECT_QNEAR(p.coeffs()[2].re, Quaternion(1.0), 0);

  const StemFunction one = StemFunction::polynomial(H, std::vector<Quaternion>{1});
  EXPECT_EQ(stem_mul(a, one).coeffs(), a.coeffs());

  // Ordering matters; compare with pointwise H_C products.
  const CircularDomain Hx = CircularDomain::whole(true);
  const StemFunction ci = StemFunction::constant(Hx, I_, 0);
  const StemFunction zj = StemFunction::polynomial(Hx, std::vector<Quaternion>{0, J_});
  const StemFunction left = stem_mul(ci, zj), right = stem_mul(zj, ci);
  Rng rng(4);
  for (int n = 0; n < 10; ++n) {
    const Complex w(uniform(rng, -2, 2), uniform(rng, 0.1, 2));
    expect_hc(left(w), ci(w) * zj(w), 1e-15);
    expect_hc(right(w), zj(w) * ci(w), 1e-15);
    EXPECT_GT(distance(left(w).re, right(w).re) + distance(left(w).im, right(w).im), 0.1);
  }
}

TEST(Stem, Conjugate) {
  const StemFunction a = StemFunction::polynomial(H, std::vector<Quaternion>{-I_, 1});
  const StemFunction c = stem_conj(a);
  EXPECT_QNEAR(c.coeffs()[0].re, I_, 0);
  const StemFunction r = StemFunction::polynomial(H, std::vector<Quaternion>{1, -2, 3});
  EXPECT_EQ(stem_conj(r).coeffs(), r.coeffs());
  Rng rng(5);
  const StemFunction g = StemFunction::polynomial(H, random_coeffs(rng, 4));
  EXPECT_EQ(stem_conj(stem_conj(g)).coeffs(), g.coeffs());
}

TEST(Stem, NormalStem) {
  const StemFunction a = StemFunction::polynomial(H, std::vector<Quaternion>{-I_, 1});
  const std::vector<Complex> cn = complex_coeffs(stem_cn(a));
  ASSERT_EQ(cn.size(), 3u);
  EXPECT_NEAR(std::abs(cn[0] - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(cn[1]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(cn[2] - 1.0), 0.0, 1e-15);

  const std::vector<Complex> z2 = complex_coeffs(stem_cn(StemFunction::polynomial(H, std::vector<Quaternion>{0, 1})));
  EXPECT_EQ(z2.size(), 3u);
  EXPECT_EQ(z2[2], Complex(1.0));

  // x^2 + 1 vanishes on the sphere of sqrt(-1) together with its normal.
  const StemFunction s = StemFunction::polynomial(H, std::vector<Quaternion>{1, 0, 1});
  EXPECT_LT(s(Complex(0, 1)).abs(), 1e-15);
  EXPECT_LT(stem_cn(s)(Complex(0, 1)).abs(), 1e-15);
}

TEST(Stem, NormalValuesAreComplex) {
  Rng rng(6);
  for (int n = 0; n < 20; ++n) {
    const StemFunction F = StemFunction::polynomial(H, random_coeffs(rng, 4));
    const Complex z(uniform(rng, -2, 2), uniform(rng, 0, 2));
    const Hc v = stem_cn(F)(z);
    EXPECT_LT(v.re.imag().abs() + v.im.imag().abs(), 1e-12);
    const Hc direct = F(z) * F(z).c_conj();
    EXPECT_LT(std::abs(v.scalar_part() - direct.scalar_part()), 1e-12);
  }
}

TEST(Stem, Components) {
  const StemFunction zi = StemFunction::polynomial(H, std::vector<Quaternion>{0, I_});
  const auto c = curve_components(zi)(Complex(0.3, 0.7));
  EXPECT_EQ(c[0], Complex(0.0));
  EXPECT_EQ(c[1], Complex(0.3, 0.7));
  EXPECT_EQ(c[2], Complex(0.0));

  const StemFunction k = StemFunction::constant(CircularDomain::whole(true), 1, -J_);
  const auto d = curve_components(k)(Complex(0.3, 0.7));
  EXPECT_EQ(d[0], Complex(1.0));
  EXPECT_EQ(d[1], Complex(0.0));
  EXPECT_EQ(d[2], Complex(0.0, -1.0));
  EXPECT_EQ(d[3], Complex(0.0));

  Rng rng(7);
  const StemFunction F = StemFunction::polynomial(H, random_coeffs(rng, 3));
  const Quaternion basis[4] = {Quaternion(1.0), I_, J_, K_};
  for (int n = 0; n < 20; ++n) {
    const Complex z(uniform(rng, -2, 2), uniform(rng, 0, 2));
    const auto comp = curve_components(F)(z);
    Hc sum;
    for (int b = 0; b < 4; ++b) sum += Complex(comp[std::size_t(b)]) * Hc{basis[b], Quaternion()};
    expect_hc(sum, F(z), 1e-14);
  }
}

TEST(Stem, Partials) {
  Rng rng(8);
  const StemFunction F = StemFunction::polynomial(H, random_coeffs(rng, 4));
  const StemFunction G = StemFunction::callable(H, [F](Complex z) { return F.eval_unchecked(z); });
  for (const Complex z : {Complex(0.4, 0.9), Complex(-1.0, -0.5), Complex(0.2, 0.0)}) {
    const StemPartials exact = stem_partials(F, z);
    const StemPartials fd = stem_partials(G, z);
    expect_hc(fd.d_alpha, exact.d_alpha, 1e-7);
    expect_hc(fd.d_beta, exact.d_beta, 1e-7);
    // Holomorphic: d/dbeta = sqrt(-1) d/dalpha.
    expect_hc(exact.d_beta, Complex(0, 1) * exact.d_alpha, 1e-12);
  }
}

TEST(Stem, OneSidedPartialsNearBoundary) {
  const CircularDomain D = CircularDomain::rect(0, 1, 1, 2);
  const StemFunction G = StemFunction::callable(
      D, [](Complex z) { return Hc::from_complex(z * z); });
  const StemPartials d = stem_partials(G, Complex(0.5, 1.0 + 1e-5));
  const Complex z(0.5, 1.0 + 1e-5);
  expect_hc(d.d_alpha, Hc::from_complex(2.0 * z), 1e-6);
  EXPECT_THROW(stem_partials(G, Complex(5, 5)), DomainError);
}

TEST(Stem, PolynomialHelpers) {
  const std::vector<Hc> c{Hc{Quaternion(1.0)}, Hc{Quaternion(2.0)}, Hc{I_}};
  const std::vector<Hc> d = derivative_coeffs(c);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].re, Quaternion(2.0));
  EXPECT_EQ(d[1].re, 2.0 * I_);
  const Hc v = horner(c, Complex(0, 1));
  EXPECT_QNEAR(v.re, Quaternion(1.0) - I_, 1e-15);
  EXPECT_QNEAR(v.im, Quaternion(2.0), 1e-15);
  EXPECT_EQ(convolve({Hc{I_}}, {Hc{J_}}).front().re, K_);
}

TEST(Stem, DomainChecks) {
  const StemFunction F = StemFunction::polynomial(CircularDomain::disk(Complex(0, 2), 1), std::vector<Quaternion>{0, 1});
  EXPECT_THROW(F(Complex(0, 0)), DomainError);
  EXPECT_NO_THROW(F(Complex(0, -2)));
}
