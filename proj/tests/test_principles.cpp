#include "support.hpp"

#include "slicefn/errors.hpp"
#include "slicefn/gallery.hpp"
#include "slicefn/principles.hpp"

using namespace slicefn;
using namespace testing_support;

namespace {

const ImaginaryUnit i_ = ImaginaryUnit::i();
const ImaginaryUnit j_ = ImaginaryUnit::j();

std::vector<Quaternion> spiral(Complex z0, const ImaginaryUnit& U, int count = 20) {
  std::vector<Quaternion> out;
  for (int k = 0; k < count; ++k) {
    const Complex z = z0 + std::polar(1e-2 * std::pow(0.8, k), 2.4 * k);
    out.push_back(on_slice(z.real(), z.imag(), U));
  }
  return out;
}

std::vector<Complex> complex_spiral(int count) {
  std::vector<Complex> out;
  for (int k = 0; k < count; ++k) out.push_back(Complex(1, 1) + std::polar(1e-2 * std::pow(0.8, k), 2.4 * k));
  return out;
}

}  // namespace

TEST(Accumulation, Rule) {
  EXPECT_TRUE(has_accumulation(complex_spiral(20)));
  EXPECT_FALSE(has_accumulation(complex_spiral(8)));
  std::vector<Complex> spread;
  for (int k = 0; k < 30; ++k) spread.push_back(Complex(0.1 * k, 1));
  EXPECT_FALSE(has_accumulation(spread));
  EXPECT_FALSE(has_accumulation(std::vector<Complex>(20, Complex(1, 1))));
}

TEST(Identity, ZeroFunction) {
  const SliceFunction f = poly({0});
  const PrincipleVerdict v = identity_verdict(f, i_, j_, spiral({0.5, 1}, i_), spiral({0.2, 0.7}, j_));
  EXPECT_EQ(v.kind, VerdictKind::IdenticallyZero);
  EXPECT_EQ(v.evidence.size(), 40u);
}

TEST(Identity, SliceConstantHalfPlane) {
  const SliceFunction f = slice_constant_example(j_);
  const PrincipleVerdict v = identity_verdict(f, -j_, i_, spiral({0.5, 1}, -j_), {});
  EXPECT_EQ(v.kind, VerdictKind::Inconclusive);
  EXPECT_FALSE(v.reason.empty());
  EXPECT_THROW(identity_verdict(f, -j_, i_, spiral({0.5, 1}, -j_), spiral({0.5, 1}, i_)), ArgumentError);
}

TEST(Identity, Errors) {
  const SliceFunction f = poly({-I_, 1});
  EXPECT_THROW(identity_verdict(f, i_, i_, {}, {}), ArgumentError);
  EXPECT_THROW(identity_verdict(f, i_, j_, {Quaternion(0, 1, 0, 0.1)}, {}), ArgumentError);
  try {
    identity_verdict(f, i_, j_, {2.0 * I_}, {});
    FAIL();
  } catch (const ArgumentError& e) {
    EXPECT_NE(std::string(e.what()).find("not a zero"), std::string::npos);
  }
}

TEST(Identity, NonzeroWithClaimedZerosOnOneSlice) {
  // x - i vanishes on C_i+ only at i: not an accumulation set.
  const SliceFunction f = poly({-I_, 1});
  const PrincipleVerdict v = identity_verdict(f, i_, j_, {I_}, {});
  EXPECT_EQ(v.kind, VerdictKind::Inconclusive);
}

TEST(Identity, CallableZero) {
  const SliceFunction z(StemFunction::callable(CircularDomain::rect(-1, 1, 0.5, 2, true),
                                               [](Complex) { return Hc{}; }));
  EXPECT_EQ(identity_verdict(z, i_, j_, spiral({0, 1}, i_), spiral({0.3, 1.2}, j_)).kind,
            VerdictKind::IdenticallyZero);
}

TEST(MeanValue, Examples) {
  EXPECT_LE(mean_value_residual(poly({0, 1}), i_, Complex(0, 2), 1.0), 1e-10);
  Rng rng(1);
  const SliceFunction f = poly({0, -J_, 0, 1});
  for (int n = 0; n < 10; ++n) {
    const Complex c(uniform(rng, -1, 1), uniform(rng, 1, 2));
    const double r = uniform(rng, 0.1, 0.9);
    EXPECT_LE(mean_value_residual(f, random_unit(rng), c, r), 1e-8);
  }
  const SliceFunction xc(StemFunction::callable(
      CircularDomain::whole(), [](Complex z) { return Hc{Quaternion(z.real()), Quaternion(-z.imag())}; }));
  EXPECT_LE(mean_value_residual(xc, i_, Complex(0, 2), 1.0), 1e-10);
  const SliceFunction modulus(StemFunction::callable(
      CircularDomain::whole(), [](Complex z) { return Hc{Quaternion(std::abs(z)), Quaternion()}; }));
  EXPECT_GT(mean_value_residual(modulus, i_, Complex(0, 2), 1.0), 1e-2);
  EXPECT_THROW(mean_value_residual(poly({0, 1}), i_, Complex(0, 0.5), 1.0), ArgumentError);
}

TEST(Extremum, LinearOnSquare) {
  const SliceFunction f = poly({0, 1}, CircularDomain::rect(1, 2, 1, 2));
  const auto ext = extremum_scan(f, i_);
  bool corner_max = false;
  for (const auto& e : ext) {
    EXPECT_FALSE(e.interior && e.strict);
    if (e.kind == ExtremumKind::Max && e.z.real() > 1.95 && e.z.imag() > 1.95) corner_max = true;
  }
  EXPECT_TRUE(corner_max);
}

TEST(Extremum, FlatMaximaOnlyOnOneSemislice) {
  const SliceFunction f = max_modulus_counterexample(j_, 10, 1);
  ExtremumGrid g;
  g.n = 24;
  const auto flat = extremum_scan(f, -j_, g);
  int interior_max = 0;
  for (const auto& e : flat) {
    if (e.kind == ExtremumKind::Max && e.interior) ++interior_max;
    EXPECT_NEAR(e.value, 20.0, 1e-10);
  }
  EXPECT_GT(interior_max, 100);
  for (const auto& e : extremum_scan(f, j_, g))
    EXPECT_FALSE(e.kind == ExtremumKind::Max && e.interior);
}

TEST(Extremum, QuadraticRefinement) {
  const SliceFunction f = poly({Quaternion(0.3, 0, 0, 0) - 1.2 * I_ + J_, 1}, CircularDomain::rect(-1, 1, 0.5, 2));
  const auto ext = extremum_scan(f, i_);
  ASSERT_FALSE(ext.empty());
  bool found = false;
  for (const auto& e : ext)
    if (e.kind == ExtremumKind::Min && e.interior) {
      found = true;
      EXPECT_NEAR(e.z.real(), -0.3, 0.02);
      EXPECT_NEAR(e.z.imag(), 1.2, 0.02);
      const Complex z = refine_semislice_minimum(f, i_, e.z);
      EXPECT_NEAR(z.real(), -0.3, 1e-7);
      EXPECT_NEAR(z.imag(), 1.2, 1e-7);
    }
  EXPECT_TRUE(found);
}

TEST(Mass, Examples) {
  const SliceFunction f(StemFunction::constant(CircularDomain::rect(0, 1, 1, 2, true), 1, -J_));
  EXPECT_LE(semislice_mass(f, -j_).mass, 1e-15);
  const SemisliceMassReport r = semislice_mass(f, i_);
  EXPECT_NEAR(r.mass, std::sqrt(2.0), 1e-12);
  EXPECT_LE(r.quadrature_error_estimate, 1e-12);
  const SliceFunction zero = poly({0}, CircularDomain::disk(Complex(0, 2), 1));
  Rng rng(2);
  for (int n = 0; n < 5; ++n) EXPECT_EQ(semislice_mass(zero, random_unit(rng)).mass, 0.0);
  EXPECT_THROW(semislice_mass(slice_constant_example(j_), i_), ArgumentError);
}

TEST(Mass, OverlapsCountedOnce) {
  const CircularDomain D({Rect{0, 1, 1, 2}, Rect{0.5, 1.5, 1, 2}}, true);
  const SliceFunction one = poly({1}, D);
  EXPECT_NEAR(semislice_mass(one, i_, QuadratureConfig{128}).mass, 1.5, 1e-2);
}

TEST(Mass, ZeroMassMeansPointwiseZero) {
  const SliceFunction f = max_modulus_counterexample(j_, 10, 1);
  const SliceFunction g = d_dx(f);
  EXPECT_LE(semislice_mass(g, -j_).mass, 1e-12);
  for (const Complex z : grid_upper_points(g.domain(), 16)) EXPECT_LE(g.eval(z.real(), z.imag(), -j_).abs(), 1e-11);
}

TEST(MinModulus, Examples) {
  const PrincipleVerdict a = min_modulus_verdict(poly({-I_, 1}), I_);
  EXPECT_EQ(a.kind, VerdictKind::ZeroAtPoint);

  const SliceFunction c = slice_constant_example(j_);
  const PrincipleVerdict b = min_modulus_verdict(c, Quaternion(0.2, 1.1, 0, 0));
  EXPECT_EQ(b.kind, VerdictKind::ConstantSemislice);

  const SliceFunction m = max_modulus_counterexample(j_, 10, 1);
  const PrincipleVerdict v = min_modulus_verdict(m, on_slice(0.1, 0.5, -j_));
  ASSERT_EQ(v.kind, VerdictKind::ConstantSemislice);
  EXPECT_QNEAR(v.unit->quaternion(), -J_, 1e-9);

  EXPECT_THROW(min_modulus_verdict(m, on_slice(0.1, 5, -j_)), DomainError);
}

TEST(MinModulus, SemisliceMinimumAwayFromZeros) {
  // |x - 2i + j| restricted to C_i+ is sqrt(|z - 2i|^2 + 1), minimal at 2i
  // where f = j; f has no constant semislice.
  const SliceFunction f = poly({-2.0 * I_ + J_, 1});
  const Complex z = refine_semislice_minimum(f, i_, Complex(0.1, 1.9));
  EXPECT_NEAR(std::abs(z - Complex(0, 2)), 0.0, 1e-9);
  const PrincipleVerdict v = min_modulus_verdict(f, 2.0 * I_);
  EXPECT_EQ(v.kind, VerdictKind::Inconclusive);
}

TEST(MaxModulus, Verdicts) {
  const SliceFunction c(StemFunction::constant(CircularDomain::disk(Complex(0, 2), 1, true), 1, -J_));
  EXPECT_EQ(max_modulus_verdict(c, i_, ImaginaryUnit::k()).kind, VerdictKind::SliceConstant);
  const SliceFunction m = max_modulus_counterexample(j_, 10, 1);
  const PrincipleVerdict v = max_modulus_verdict(m, -j_, j_);
  EXPECT_EQ(v.kind, VerdictKind::Inconclusive);
  EXPECT_THROW(max_modulus_verdict(m, j_, j_), ArgumentError);
}

TEST(MaxModulus, NoDoubleInteriorMaximum) {
  Rng rng(3);
  const CircularDomain D = CircularDomain::rect(-1, 1, 0.5, 2, true);
  ExtremumGrid g;
  g.n = 32;
  for (int n = 0; n < 10; ++n) {
    const SliceFunction f = poly(random_coeffs(rng, 4), D);
    const ImaginaryUnit A = random_unit(rng), B = random_unit(rng);
    auto interior_max = [&](const ImaginaryUnit& U) {
      for (const auto& e : extremum_scan(f, U, g))
        if (e.kind == ExtremumKind::Max && e.strict && e.interior) return true;
      return false;
    };
    EXPECT_FALSE(interior_max(A) && interior_max(B));
  }
}

TEST(Kernel, Examples) {
  const CircularDomain D = CircularDomain::disk(Complex(0, 2), 1, true);
  EXPECT_TRUE(kernel_semislices(poly({0, 0, 1}, D)).empty());

  const SliceFunction m = max_modulus_counterexample(j_, 10, 1);
  const auto k = kernel_semislices(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_QNEAR(k[0].quaternion(), -J_, 1e-9);

  const SliceFunction c(StemFunction::constant(D, 1, -J_));
  KernelConfig cfg;
  EXPECT_EQ(kernel_semislices(c, cfg).size(), std::size_t(cfg.n_directions));
}

TEST(Kernel, TrichotomyOnRandomPolynomials) {
  Rng rng(4);
  const CircularDomain D = CircularDomain::disk(Complex(0, 1.5), 1, true);
  KernelConfig cfg;
  cfg.n_directions = 64;
  cfg.quad.n = 16;
  for (int n = 0; n < 10; ++n) {
    const auto k = kernel_semislices(poly(random_coeffs(rng, 4), D), cfg);
    EXPECT_TRUE(k.empty());
  }
}

TEST(Openness, Examples) {
  OpennessConfig cfg;
  cfg.n_samples = 50000;
  EXPECT_TRUE(openness_probe(poly({0, 0, 1}), Quaternion(1, 1, 0, 0), 0.1, cfg).open);

  const SliceFunction f = open_mapping_counterexample(j_);
  const OpennessReport closed = openness_probe(f, on_slice(0.8, 1.0, -j_), 0.1, cfg);
  EXPECT_FALSE(closed.open);
  ASSERT_TRUE(closed.witness);
  EXPECT_GT(closed.rho, 0.0);
  EXPECT_TRUE(openness_probe(f, on_slice(0.8, 1.0, i_), 0.1, cfg).open);

  EXPECT_THROW(openness_probe(f, on_slice(0.8, 0.05, i_), 0.1, cfg), ArgumentError);
  EXPECT_THROW(openness_probe(f, on_slice(0.8, 1, i_), 0.0, cfg), ArgumentError);
}

TEST(Openness, Deterministic) {
  OpennessConfig cfg;
  cfg.n_samples = 20000;
  const SliceFunction f = poly({0, 0, 1});
  const OpennessReport a = openness_probe(f, Quaternion(1, 1, 0, 0), 0.1, cfg);
  const OpennessReport b = openness_probe(f, Quaternion(1, 1, 0, 0), 0.1, cfg);
  EXPECT_EQ(a.open, b.open);
  EXPECT_EQ(a.rho, b.rho);
}

TEST(Openness, RandomPolynomialsOffExcisedSet) {
  Rng rng(5);
  OpennessConfig cfg;
  cfg.n_samples = 50000;
  int open = 0, total = 0;
  for (int n = 0; n < 50; ++n) {
    const SliceFunction f = poly(random_coeffs(rng, 1 + n % 4));
    const Quaternion x = on_slice(uniform(rng, -1, 1), uniform(rng, 0.3, 1.5), random_unit(rng));
    ++total;
    open += openness_probe(f, x, 0.1, cfg).open;
  }
  EXPECT_EQ(open, total);
}
