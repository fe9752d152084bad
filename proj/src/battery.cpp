#include "slicefn/battery.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "slicefn/calculus.hpp"
#include "slicefn/errors.hpp"
#include "slicefn/gallery.hpp"
#include "slicefn/principles.hpp"
#include "slicefn/products.hpp"
#include "slicefn/sampling.hpp"
#include "slicefn/zeros.hpp"

namespace slicefn {

namespace {

// Pinned tolerances and budgets.
constexpr double kRepresentTol = 1e-10;
constexpr double kOppositeTol = 1e-12;
constexpr double kRepresentSeconds = 5.0;
constexpr double kProductTol = 1e-8;
constexpr double kRealProductTol = 1e-10;
constexpr double kReciprocalTol = 1e-8;
constexpr double kOracleZero = 1e-7;
constexpr int kOracleSamples = 10000;
constexpr double kOraclePointTol = 1e-5;
constexpr double kCoeffTol = 1e-8;
constexpr double kFixtureTol = 1e-10;
constexpr double kOpenSeconds = 60.0;
constexpr double kExpansionTol = 1e-10;
constexpr double kCullenTol = 1e-6;
constexpr double kNonRegularResidual = 0.5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel(const Quaternion& a, const Quaternion& b) {
  return distance(a, b) / std::max(b.abs(), 1e-300);
}

SliceFunction random_polynomial(Rng& rng, const CircularDomain& D, int max_degree,
                                bool real = false) {
  const int degree = std::uniform_int_distribution<int>(1, max_degree)(rng);
  std::vector<Quaternion> coeffs;
  for (int n = 0; n <= degree; ++n)
    coeffs.push_back(real ? Quaternion(uniform(rng, -1.0, 1.0)) : random_quaternion(rng));
  return SliceFunction(StemFunction::polynomial(D, coeffs));
}

Quaternion random_point(Rng& rng) {
  return on_slice(uniform(rng, -2.0, 2.0), uniform(rng, 1e-3, 2.0), random_unit(rng));
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

// Independent zero oracle on one sphere: samples |f| at random points of
// alpha + beta S and polishes the best samples by a search on the sphere.
struct OracleVerdict {
  ZeroKind kind = ZeroKind::NoZero;
  std::optional<Quaternion> point;
  bool ambiguous = false;
};

OracleVerdict sphere_oracle(const SliceFunction& f, const SphereId& s, Rng& rng) {
  std::vector<std::pair<double, Quaternion>> values;
  values.reserve(kOracleSamples);
  double vmax = 0.0;
  for (int n = 0; n < kOracleSamples; ++n) {
    const ImaginaryUnit I = random_unit(rng);
    const double v = f.eval(s.alpha, s.beta, I).abs();
    vmax = std::max(vmax, v);
    values.emplace_back(v, I.quaternion());
  }
  OracleVerdict out;
  if (vmax <= kOracleZero) {
    out.kind = ZeroKind::SphericalOrReal;
    return out;
  }
  std::partial_sort(values.begin(), values.begin() + 5, values.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });

  auto polish = [&](Quaternion I) {
    auto value = [&](const Quaternion& u) {
      return f.eval(s.alpha, s.beta, ImaginaryUnit::normalized(u)).abs();
    };
    double best = value(I);
    double step = 0.05;
    while (step > 1e-13) {
      // Tangent frame at I.
      Quaternion a = std::abs(I.x) < 0.9 ? Quaternion::i() : Quaternion::j();
      a = cross(I, a);
      a = a / a.abs();
      const Quaternion b = cross(I, a);
      bool moved = false;
      for (const Quaternion& d : {a, -a, b, -b}) {
        Quaternion cand = I + step * d;
        cand = cand / cand.abs();
        const double v = value(cand);
        if (v < best) {
          best = v;
          I = cand;
          moved = true;
        }
      }
      if (!moved) step *= 0.5;
    }
    return std::pair{best, I};
  };

  std::vector<Quaternion> zeros;
  for (int n = 0; n < 5; ++n) {
    const auto [v, I] = polish(values[std::size_t(n)].second);
    if (v <= kOracleZero) zeros.push_back(I);
  }
  if (zeros.empty()) return out;
  for (const auto& z : zeros)
    if (distance(z, zeros.front()) > kOraclePointTol) out.ambiguous = true;
  out.kind = ZeroKind::SIsolated;
  out.point = on_slice(s.alpha, s.beta, ImaginaryUnit::normalized(zeros.front()));
  return out;
}

// Real 4x4 matrix of a |-> p a.
Eigen::Matrix4d left_multiplication(const Quaternion& p) {
  Eigen::Matrix4d m;
  const Quaternion basis[4] = {Quaternion(1.0), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  for (int c = 0; c < 4; ++c) {
    const Quaternion col = p * basis[c];
    m.col(c) << col.w, col.x, col.y, col.z;
  }
  return m;
}

}  // namespace

CriterionResult check_representation(const BatteryConfig& cfg) {
  const auto t0 = Clock::now();
  Rng rng(cfg.seed + 1);
  const CircularDomain H = CircularDomain::whole();
  double worst = 0.0, worst_opp = 0.0;
  for (int n = 0; n < 100; ++n) {
    const SliceFunction f = random_polynomial(rng, H, 6);
    const double alpha = uniform(rng, -2.0, 2.0);
    const double beta = uniform(rng, 1e-3, 2.0);
    const ImaginaryUnit J = random_unit(rng), K = random_unit(rng), I = random_unit(rng);
    const Quaternion vJ = f.eval(alpha, beta, J);
    const Quaternion vK = f.eval(alpha, beta, K);
    worst = std::max(worst, rel(represent(vJ, vK, J, K, I, alpha, beta), f.eval(alpha, beta, I)));
    const Quaternion vM = f.eval(alpha, beta, -J);
    worst_opp = std::max(worst_opp, rel(represent_opposite(vJ, vM, J, I),
                                        represent_general(vJ, vM, J, -J, I)));
  }
  CriterionResult r;
  r.id = 1;
  r.title = "representation formula";
  r.seconds = seconds_since(t0);
  r.pass = worst <= kRepresentTol && worst_opp <= kOppositeTol && r.seconds < kRepresentSeconds;
  r.detail = "max rel err " + sci(worst) + " (tol " + sci(kRepresentTol) + "), opposite vs general " +
             sci(worst_opp) + " (tol " + sci(kOppositeTol) + ")";
  return r;
}

CriterionResult check_slice_product(const BatteryConfig& cfg) {
  const auto t0 = Clock::now();
  Rng rng(cfg.seed + 2);
  const CircularDomain H = CircularDomain::whole();
  double worst = 0.0, worst_real = 0.0;
  for (int n = 0; n < 100; ++n) {
    const SliceFunction f = random_polynomial(rng, H, 6);
    const SliceFunction g = random_polynomial(rng, H, 6);
    Quaternion x = random_point(rng);
    while (f(x).abs() < 1e-6) x = random_point(rng);
    const Quaternion fx = f(x);
    const SliceFunction fg = slice_product(f, g);
    worst = std::max(worst, rel(fg(x), fx * g(fx.inverse() * x * fx)));

    const SliceFunction fr = random_polynomial(rng, H, 6, true);
    const Quaternion y = random_point(rng);
    worst_real = std::max(worst_real, rel(slice_product(fr, g)(y), fr(y) * g(y)));
  }
  CriterionResult r;
  r.id = 2;
  r.title = "slice product semantics";
  r.seconds = seconds_since(t0);
  r.pass = worst <= kProductTol && worst_real <= kRealProductTol;
  r.detail = "max rel err " + sci(worst) + " (tol " + sci(kProductTol) + "), real f " +
             sci(worst_real) + " (tol " + sci(kRealProductTol) + ")";
  return r;
}

CriterionResult check_reciprocal(const BatteryConfig& cfg) {
  const auto t0 = Clock::now();
  Rng rng(cfg.seed + 3);
  const CircularDomain H = CircularDomain::whole();
  double worst_right = 0.0, worst_left = 0.0, worst_t = 0.0;
  int built = 0;
  while (built < 50) {
    const SliceFunction f0 = random_polynomial(rng, H, 6);
    std::vector<double> radii{0.0};
    for (const auto& z : find_zeros_polynomial(f0)) radii.push_back(std::abs(z.sphere.z()));
    std::sort(radii.begin(), radii.end());
    radii.push_back(radii.back() + 2.0);
    double lo = 0.0, hi = 0.0;
    for (std::size_t s = 0; s + 1 < radii.size(); ++s)
      if (radii[s + 1] - radii[s] > hi - lo) {
        lo = radii[s];
        hi = radii[s + 1];
      }
    const double r_in = lo + 0.2 * (hi - lo);
    const double r_out = hi - 0.2 * (hi - lo);
    if (r_in < 0.05 || r_out - r_in < 0.1) continue;
    ++built;

    const CircularDomain A = CircularDomain::annulus(0.0, r_in, r_out);
    const SliceFunction f(f0.stem().with_domain(A));
    const ReciprocalFunction inv = reciprocal(f);
    const SliceFunction right = slice_product(f, inv.base());
    const SliceFunction left = slice_product(inv.base(), f);
    const Quaternion one(1.0);
    for (const Complex z : sample_upper_points(A, 20, rng)) {
      const Quaternion x = on_slice(z.real(), z.imag(), random_unit(rng));
      worst_right = std::max(worst_right, distance(right(x), one));
      worst_left = std::max(worst_left, distance(left(x), one));
      worst_t = std::max(worst_t, rel(inv(x), f(t_map(f, x)).inverse()));
    }
  }
  CriterionResult r;
  r.id = 3;
  r.title = "regular reciprocal";
  r.seconds = seconds_since(t0);
  r.pass = worst_right <= kReciprocalTol && worst_left <= kReciprocalTol && worst_t <= kReciprocalTol;
  r.detail = "|f.f^-1 - 1| " + sci(worst_right) + ", |f^-1.f - 1| " + sci(worst_left) +
             ", T_f identity " + sci(worst_t) + " (tol " + sci(kReciprocalTol) + ")";
  return r;
}

CriterionResult check_zero_trichotomy(const BatteryConfig& cfg) {
  const auto t0 = Clock::now();
  Rng rng(cfg.seed + 4);
  const CircularDomain H = CircularDomain::whole();
  int disagreements = 0, counts[3] = {0, 0, 0};
  std::string first_bad;
  for (int n = 0; n < 200; ++n) {
    SliceFunction f = random_polynomial(rng, H, 4);
    SphereId s{uniform(rng, -2.0, 2.0), uniform(rng, 0.05, 2.0)};
    if (n % 4 == 0) {
      for (const auto& z : find_zeros_polynomial(f))
        if (z.classification.kind == ZeroKind::SIsolated) {
          s = z.sphere;
          break;
        }
    } else if (n % 4 == 1) {
      const double a = s.alpha, b = s.beta;
      const SliceFunction q(StemFunction::polynomial(
          H, std::vector<Quaternion>{Quaternion(a * a + b * b), Quaternion(-2.0 * a), Quaternion(1.0)}));
      f = slice_product(q, f);
    }
    const ZeroClassification got = classify_sphere(f, s);
    const OracleVerdict want = sphere_oracle(f, s, rng);
    ++counts[int(want.kind)];
    bool ok = got.kind == want.kind && !want.ambiguous;
    if (ok && got.kind == ZeroKind::SIsolated)
      ok = distance(*got.point, *want.point) <= kOraclePointTol;
    if (!ok && disagreements++ == 0) {
      std::ostringstream os;
      os << "case " << n << ": classify " << to_string(got.kind) << ", oracle "
         << to_string(want.kind);
      first_bad = os.str();
    }
  }

  const auto zeros = find_zeros_polynomial(binomial_zero());
  const bool exact = zeros.size() == 1 && std::abs(zeros[0].sphere.alpha) <= 1e-12 &&
                     std::abs(zeros[0].sphere.beta - 1.0) <= 1e-12 &&
                     zeros[0].classification.kind == ZeroKind::SIsolated &&
                     distance(*zeros[0].classification.point, Quaternion::i()) <= 1e-12;

  CriterionResult r;
  r.id = 4;
  r.title = "zero trichotomy";
  r.seconds = seconds_since(t0);
  r.pass = disagreements == 0 && exact;
  r.detail = std::to_string(disagreements) + " disagreements over 200 spheres (NoZero " +
             std::to_string(counts[0]) + ", spherical " + std::to_string(counts[1]) +
             ", S-isolated " + std::to_string(counts[2]) + "); (x-i).(x-j) " +
             (exact ? "gives {(0,1): SIsolated(i)}" : "mismatch");
  if (!first_bad.empty()) r.notes.push_back(first_bad);
  return r;
}

CriterionResult check_identity_principle(const BatteryConfig& cfg) {
  const auto t0 = Clock::now();
  Rng rng(cfg.seed + 5);
  const CircularDomain H = CircularDomain::whole();
  constexpr int kDegree = 6;
  constexpr int kZerosPerSemislice = 20;

  double worst_coeff = 0.0, worst_ratio = 1.0;
  bool all_zero_verdicts = true;
  for (int trial = 0; trial < 10; ++trial) {
    const ImaginaryUnit J = random_unit(rng);
    ImaginaryUnit K = random_unit(rng);
    while (distance(J.quaternion(), K.quaternion()) < 0.1) K = random_unit(rng);

    std::vector<Quaternion> samples_J, samples_K;
    for (const ImaginaryUnit* U : {&J, static_cast<const ImaginaryUnit*>(&K)}) {
      const Complex z0(uniform(rng, -1.5, 1.5), uniform(rng, 0.5, 2.0));
      for (int k = 0; k < kZerosPerSemislice; ++k) {
        const Complex z = z0 + std::polar(1e-2 * std::pow(0.8, k), 2.4 * k);
        (U == &J ? samples_J : samples_K).push_back(on_slice(z.real(), z.imag(), *U));
      }
    }

    // Coefficients a_0..a_6 with sum_n x^n a_n = 0 at all 40 points, least squares.
    Eigen::MatrixXd A(4 * 2 * kZerosPerSemislice, 4 * (kDegree + 1));
    Eigen::VectorXd b = Eigen::VectorXd::Zero(A.rows());
    int row = 0;
    for (const auto* list : {&samples_J, &samples_K})
      for (const Quaternion& x : *list) {
        Quaternion p(1.0);
        for (int n = 0; n <= kDegree; ++n) {
          A.block<4, 4>(row, 4 * n) = left_multiplication(p);
          p = p * x;
        }
        row += 4;
      }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd c = svd.solve(b);
    const auto& sv = svd.singularValues();
    worst_ratio = std::min(worst_ratio, sv(sv.size() - 1) / sv(0));

    std::vector<Quaternion> coeffs;
    for (int n = 0; n <= kDegree; ++n) {
      coeffs.emplace_back(c(4 * n), c(4 * n + 1), c(4 * n + 2), c(4 * n + 3));
      worst_coeff = std::max(worst_coeff, coeffs.back().abs());
    }
    const SliceFunction fit(StemFunction::polynomial(H, coeffs));
    const PrincipleVerdict v = identity_verdict(fit, J, K, samples_J, samples_K);
    all_zero_verdicts = all_zero_verdicts && v.kind == VerdictKind::IdenticallyZero;
  }

  const ImaginaryUnit J = ImaginaryUnit::j();
  const SliceFunction g = slice_constant_example(J);
  std::vector<Quaternion> zeros;
  const Complex z0(0.7, 1.3);
  for (int k = 0; k < kZerosPerSemislice; ++k) {
    const Complex z = z0 + std::polar(1e-2 * std::pow(0.8, k), 2.4 * k);
    zeros.push_back(on_slice(z.real(), z.imag(), -J));
  }
  const PrincipleVerdict half_plane = identity_verdict(g, -J, ImaginaryUnit::i(), zeros, {});
  const bool nonzero_elsewhere = g.eval(0.7, 1.3, ImaginaryUnit::i()).abs() > 1.0;

  CriterionResult r;
  r.id = 5;
  r.title = "identity principle";
  r.seconds = seconds_since(t0);
  // Full column rank keeps the zero polynomial the only interpolant.
  const bool unique = worst_ratio > 1e-14;
  r.pass = worst_coeff <= kCoeffTol && all_zero_verdicts && unique &&
           half_plane.kind == VerdictKind::Inconclusive && nonzero_elsewhere;
  r.detail = "max |coeff| " + sci(worst_coeff) + " (tol " + sci(kCoeffTol) +
             "), min sigma ratio " + sci(worst_ratio) + ", verdicts " +
             (all_zero_verdicts ? "IdenticallyZero" : "mismatch") + "; 1-Ij: " +
             to_string(half_plane.kind) + " (" + half_plane.reason + ")";
  return r;
}

CriterionResult check_modulus_fixtures(const BatteryConfig& cfg) {
  const auto t0 = Clock::now();
  Rng rng(cfg.seed + 6);
  const ImaginaryUnit J = ImaginaryUnit::j();
  const SliceFunction m = max_modulus_counterexample(J, 10.0, 1.0);
  double dev_flat = 0.0, dev_twice = 0.0;
  for (const Complex z : sample_upper_points(m.domain(), 200, rng)) {
    dev_flat = std::max(dev_flat, std::abs(m.eval(z.real(), z.imag(), -J).abs() - 20.0));
    const Quaternion x = on_slice(z.real(), z.imag(), J);
    dev_twice = std::max(dev_twice, std::abs(m(x).abs() - 2.0 * x.abs()));
  }

  // Interior strict local minima of |f_I+| on random polynomials.
  const CircularDomain D = CircularDomain::rect(-2.0, 2.0, 0.25, 2.25, true);
  int minima = 0, by_kind[5] = {0, 0, 0, 0, 0}, four_dim_inconclusive = 0;
  for (int n = 0; n < 50; ++n) {
    const SliceFunction f = random_polynomial(rng, D, 6);
    const ImaginaryUnit I = random_unit(rng);
    ExtremumGrid grid;
    for (const Extremum& e : extremum_scan(f, I, grid)) {
      if (e.kind != ExtremumKind::Min || !e.strict || !e.interior) continue;
      const Complex z = refine_semislice_minimum(f, I, e.z, 4.0 / grid.n);
      if (!D.contains_disk(z, 1e-3)) continue;
      ++minima;
      const Quaternion p = on_slice(z.real(), z.imag(), I);
      const PrincipleVerdict v = min_modulus_verdict(f, p);
      ++by_kind[int(v.kind)];
      if (v.kind != VerdictKind::Inconclusive) continue;
      // Is p also a local minimum of |f| in H?
      const double fp = f(p).abs();
      bool local_min = true;
      for (int s = 0; s < 2000 && local_min; ++s) {
        Quaternion d = random_quaternion(rng);
        d = d / d.abs();
        if (f(p + 1e-3 * d).abs() < fp) local_min = false;
      }
      four_dim_inconclusive += local_min;
    }
  }

  CriterionResult r;
  r.id = 6;
  r.title = "max/min modulus fixtures";
  r.seconds = seconds_since(t0);
  const int inconclusive = by_kind[int(VerdictKind::Inconclusive)];
  r.pass = dev_flat <= kFixtureTol && dev_twice <= kFixtureTol && minima > 0 && inconclusive == 0;
  r.detail = "||f|-20| on C_-j " + sci(dev_flat) + ", ||f|-2|x|| on C_j " + sci(dev_twice) +
             " (tol " + sci(kFixtureTol) + "); min_modulus_verdict on " + std::to_string(minima) +
             " semislice minima: ZeroAtPoint " +
             std::to_string(by_kind[int(VerdictKind::ZeroAtPoint)]) + ", ConstantSemislice " +
             std::to_string(by_kind[int(VerdictKind::ConstantSemislice)]) + ", Inconclusive " +
             std::to_string(inconclusive);
  if (inconclusive > 0)
    r.notes.push_back(std::to_string(four_dim_inconclusive) + " of the " +
                      std::to_string(inconclusive) +
                      " Inconclusive points are local minima of |f| in H (sampled on a 1e-3 sphere)");
  return r;
}

CriterionResult check_open_mapping(const BatteryConfig& cfg) {
  const auto t0 = Clock::now();
  Rng rng(cfg.seed + 7);
  const ImaginaryUnit J = ImaginaryUnit::j();
  const SliceFunction f = open_mapping_counterexample(J);
  OpennessConfig probe;
  probe.seed = cfg.seed;

  auto sample_alpha = [&] {
    const double a = uniform(rng, 0.3, 1.5);
    return uniform(rng, 0.0, 1.0) < 0.5 ? -a : a;
  };
  int closed_ok = 0, open_ok = 0;
  for (int n = 0; n < 10; ++n) {
    const Quaternion x = on_slice(sample_alpha(), uniform(rng, 0.5, 2.0), -J);
    closed_ok += !openness_probe(f, x, 0.1, probe).open;
  }
  for (int n = 0; n < 10; ++n) {
    const Quaternion x = on_slice(sample_alpha(), uniform(rng, 0.5, 2.0), ImaginaryUnit::i());
    open_ok += openness_probe(f, x, 0.1, probe).open;
  }

  // Away from C_-J+ the image avoids the real axis.
  int real_images = 0;
  for (int n = 0; n < 100000; ++n) {
    const Quaternion y = random_point(rng);
    if (f(y).imag().abs() <= 1e-15 * (1.0 + y.abs())) ++real_images;
  }

  CriterionResult r;
  r.id = 7;
  r.title = "open mapping";
  r.seconds = seconds_since(t0);
  r.pass = closed_ok == 10 && open_ok == 10 && real_images == 0 && r.seconds < kOpenSeconds;
  r.detail = "not open at " + std::to_string(closed_ok) + "/10 points of C_-j, open at " +
             std::to_string(open_ok) + "/10 points of C_i, real images off C_-j: " +
             std::to_string(real_images) + "/100000";
  return r;
}

CriterionResult check_expansion_identity(const BatteryConfig& cfg) {
  const auto t0 = Clock::now();
  Rng rng(cfg.seed + 8);
  double printed = 0.0, corrected = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const ImaginaryUnit J = random_unit(rng), I = random_unit(rng);
    const double alpha = uniform(rng, -2.0, 2.0), beta = uniform(rng, 1e-3, 2.0);
    const Quaternion v = open_mapping_counterexample(J).eval(alpha, beta, I);
    printed = std::max(printed, distance(open_mapping_expansion_printed(alpha, beta, I, J), v));
    corrected = std::max(corrected, distance(open_mapping_expansion_corrected(alpha, beta, I, J), v));
  }
  CriterionResult r;
  r.id = 8;
  r.title = "expansion identity";
  r.seconds = seconds_since(t0);
  r.pass = printed <= kExpansionTol;
  r.detail = "closed form with sqrt(1-(I.J)^2) coefficient: max err " + sci(printed) + " (tol " +
             sci(kExpansionTol) + ")";
  r.notes.push_back("same closed form with coefficient alpha on I x J: max err " + sci(corrected));
  return r;
}

CriterionResult check_calculus(const BatteryConfig& cfg) {
  const auto t0 = Clock::now();
  Rng rng(cfg.seed + 9);
  const CircularDomain H = CircularDomain::whole();
  double worst = 0.0;
  for (int n = 0; n < 20; ++n) {
    const SliceFunction f = random_polynomial(rng, H, 6);
    for (int s = 0; s < 50; ++s) {
      const ImaginaryUnit I = random_unit(rng);
      const Quaternion x = on_slice(uniform(rng, -2.0, 2.0), uniform(rng, 1e-3, 2.0), I);
      worst = std::max(worst, cullen_residual(f, I, x).abs());
    }
  }
  const SliceFunction xc(StemFunction::callable(
      H, [](Complex z) { return Hc{Quaternion(z.real()), Quaternion(-z.imag())}; }));
  const RegularityReport rep = is_slice_regular(xc);

  CriterionResult r;
  r.id = 9;
  r.title = "calculus consistency";
  r.seconds = seconds_since(t0);
  r.pass = worst <= kCullenTol && !rep.pass && rep.max_residual >= kNonRegularResidual;
  r.detail = "max Cullen residual " + sci(worst) + " (tol " + sci(kCullenTol) +
             "), x^c regularity residual " + sci(rep.max_residual) + (rep.pass ? " (pass)" : " (fail)");
  return r;
}

std::vector<CriterionResult> run_battery(const BatteryConfig& cfg,
                                         const std::function<void(const CriterionResult&)>& progress) {
  using Check = CriterionResult (*)(const BatteryConfig&);
  const Check checks[] = {check_representation, check_slice_product,     check_reciprocal,
                          check_zero_trichotomy, check_identity_principle, check_modulus_fixtures,
                          check_open_mapping,    check_expansion_identity, check_calculus};
  std::vector<CriterionResult> out;
  int id = 1;
  for (const Check check : checks) {
    CriterionResult r;
    try {
      r = check(cfg);
    } catch (const std::exception& e) {
      r.id = id;
      r.title = "criterion " + std::to_string(id);
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    ++id;
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.title << ": " << r.detail
     << " [" << r.seconds << " s]";
  for (const auto& n : r.notes) os << "\n     note: " << n;
  return os.str();
}

}  // namespace slicefn
