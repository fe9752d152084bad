#include "slicefn/principles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>

#include "slicefn/errors.hpp"

namespace slicefn {

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::IdenticallyZero:
      return "IdenticallyZero";
    case VerdictKind::SliceConstant:
      return "SliceConstant";
    case VerdictKind::ZeroAtPoint:
      return "ZeroAtPoint";
    case VerdictKind::ConstantSemislice:
      return "ConstantSemislice";
    case VerdictKind::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

namespace {

PrincipleVerdict inconclusive(std::string reason, std::vector<Quaternion> evidence = {}) {
  PrincipleVerdict v;
  v.kind = VerdictKind::Inconclusive;
  v.reason = std::move(reason);
  v.evidence = std::move(evidence);
  return v;
}

// alpha + sqrt(-1) beta for a point of C_J+, or nullopt when x is off it.
std::optional<Complex> on_semislice(const Quaternion& x, const ImaginaryUnit& J) {
  const Quaternion v = x.imag();
  const double beta = dot(v, J.quaternion());
  if (beta < -1e-12 || distance(v, beta * J.quaternion()) > 1e-12 * (1.0 + v.abs()))
    return std::nullopt;
  return Complex(x.w, std::max(beta, 0.0));
}

double max_coeff(const StemFunction& F) {
  double m = 0.0;
  for (const auto& c : F.coeffs()) m = std::max(m, c.abs());
  return m;
}

// Quadrature nodes of D+ with weights; each node is attributed to the first
// region containing it so overlaps are counted once.
struct Node {
  Complex z;
  double weight;
};

std::vector<Node> quadrature_nodes(const CircularDomain& D, int n) {
  if (!D.bounded()) throw ArgumentError("semislice mass needs a bounded domain");
  std::vector<Node> nodes;
  const auto& regions = D.regions();
  for (std::size_t r = 0; r < regions.size(); ++r) {
    const Box box = CircularDomain::region_box(regions[r]);
    const double ha = (box.alpha_max - box.alpha_min) / n;
    const double hb = (box.beta_max - box.beta_min) / n;
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        const Complex z(box.alpha_min + (s + 0.5) * ha, box.beta_min + (t + 0.5) * hb);
        if (z.imag() > 0.0 && D.region_of(z) == int(r)) nodes.push_back({z, ha * hb});
      }
  }
  return nodes;
}

// Stem values at quadrature nodes; mass(I) = sum_w |G1 + I G2|.
struct SampledStem {
  std::vector<Node> nodes;
  std::vector<Hc> values;

  SampledStem(const StemFunction& G, const CircularDomain& D, int n)
      : nodes(quadrature_nodes(D, n)) {
    values.reserve(nodes.size());
    for (const auto& node : nodes) values.push_back(G.eval_unchecked(node.z));
  }

  double mass(const ImaginaryUnit& I) const {
    double m = 0.0;
    for (std::size_t s = 0; s < nodes.size(); ++s)
      m += nodes[s].weight * (values[s].re + I.quaternion() * values[s].im).abs();
    return m;
  }
};

// Directions I = -G1 G2^{-1} at a few nodes: f_I vanishes at a node only there.
std::vector<ImaginaryUnit> analytic_candidates(const SampledStem& g) {
  std::vector<ImaginaryUnit> out;
  const std::size_t n = g.nodes.size();
  const std::size_t picks[] = {0, n / 3, (2 * n) / 3, n ? n - 1 : 0};
  for (const std::size_t s : picks) {
    if (s >= n) continue;
    const Hc& v = g.values[s];
    if (v.im.abs() <= 1e-12) continue;
    const Quaternion I = -(v.re * v.im.inverse());
    if (std::abs(I.w) > 1e-6 || std::abs(I.abs() - 1.0) > 1e-6) continue;
    const ImaginaryUnit u = ImaginaryUnit::normalized(I);
    if (std::none_of(out.begin(), out.end(), [&](const ImaginaryUnit& o) {
          return distance(o.quaternion(), u.quaternion()) < 1e-6;
        }))
      out.push_back(u);
  }
  return out;
}

double semislice_mass_sampled(const SliceFunction& f, const ImaginaryUnit& I, int n) {
  return SampledStem(f.stem(), f.domain(), n).mass(I);
}

}  // namespace

bool has_accumulation(const std::vector<Complex>& points, const AccumulationRule& rule) {
  for (const Complex c : points) {
    std::vector<Complex> near;
    for (const Complex p : points)
      if (std::abs(p - c) <= rule.radius) near.push_back(p);
    if (int(near.size()) < rule.min_count) continue;
    double min_pair = kInfinity;
    double max_pair = 0.0;
    for (std::size_t s = 0; s < near.size(); ++s)
      for (std::size_t t = s + 1; t < near.size(); ++t) {
        const double d = std::abs(near[s] - near[t]);
        min_pair = std::min(min_pair, d);
        max_pair = std::max(max_pair, d);
      }
    if (min_pair < rule.min_pair && max_pair > 0.0) return true;
  }
  return false;
}

PrincipleVerdict identity_verdict(const SliceFunction& f, const ImaginaryUnit& J,
                                  const ImaginaryUnit& K,
                                  const std::vector<Quaternion>& zero_samples_J,
                                  const std::vector<Quaternion>& zero_samples_K,
                                  const IdentityConfig& cfg) {
  if (distance(J.quaternion(), K.quaternion()) <= 1e-12)
    throw ArgumentError("identity principle needs two distinct semislices");

  std::vector<Quaternion> evidence;
  auto collect = [&](const std::vector<Quaternion>& samples, const ImaginaryUnit& U) {
    std::vector<Complex> zs;
    for (const Quaternion& x : samples) {
      const auto z = on_semislice(x, U);
      if (!z) throw ArgumentError("sample does not lie on its semislice");
      if (!f.domain().contains(*z)) throw ArgumentError("sample lies outside the domain");
      const double v = f.eval(z->real(), z->imag(), U).abs();
      if (v > cfg.zero_tol) {
        std::ostringstream os;
        os << "sample " << x << " is not a zero of f (|f| = " << v << ")";
        throw ArgumentError(os.str());
      }
      zs.push_back(*z);
      evidence.push_back(x);
    }
    return zs;
  };
  const std::vector<Complex> zj = collect(zero_samples_J, J);
  const std::vector<Complex> zk = collect(zero_samples_K, K);

  const bool acc_j = has_accumulation(zj, cfg.rule);
  const bool acc_k = has_accumulation(zk, cfg.rule);
  if (!acc_j || !acc_k) {
    std::string which = !acc_j && !acc_k ? "either semislice" : (!acc_j ? "D_J+" : "D_K+");
    return inconclusive("zeros do not accumulate on " + which, std::move(evidence));
  }

  PrincipleVerdict v;
  v.evidence = std::move(evidence);
  if (f.stem().is_polynomial()) {
    if (max_coeff(f.stem()) > cfg.coeff_tol)
      return inconclusive("accumulating zeros but nonzero coefficients; tolerance too loose",
                          std::move(v.evidence));
    v.kind = VerdictKind::IdenticallyZero;
    return v;
  }
  const auto directions = fibonacci_sphere(32);
  for (const Complex z : grid_upper_points(f.domain(), cfg.grid)) {
    const Hc F = f.stem().eval_unchecked(z);
    for (const auto& I : directions)
      if ((F.re + I.quaternion() * F.im).abs() > cfg.zero_tol)
        return inconclusive("f does not vanish on the verification grid", std::move(v.evidence));
  }
  v.kind = VerdictKind::IdenticallyZero;
  return v;
}

double mean_value_residual(const SliceFunction& f, const ImaginaryUnit& I, Complex center,
                           double r, int n) {
  if (!(r > 0.0) || n < 3) throw ArgumentError("mean value needs r > 0 and n >= 3");
  if (center.imag() - r < 0.0 || !f.domain().contains_disk(center, r))
    throw ArgumentError("disk leaves the semislice domain");
  Quaternion avg;
  for (int s = 0; s < n; ++s) {
    const Complex z = center + std::polar(r, 2.0 * std::numbers::pi * s / n);
    avg += f.eval(z.real(), z.imag(), I);
  }
  avg = avg / double(n);
  return distance(avg, f.eval(center.real(), center.imag(), I));
}

std::vector<Extremum> extremum_scan(const SliceFunction& f, const ImaginaryUnit& I,
                                    const ExtremumGrid& grid) {
  if (grid.n < 3) throw ArgumentError("extremum grid needs >= 3 cells per side");
  const CircularDomain& D = f.domain();
  const Box box = sampling_box(D, grid.window);
  const int n = grid.n;
  const double ha = (box.alpha_max - box.alpha_min) / n;
  const double hb = (box.beta_max - box.beta_min) / n;
  auto node = [&](double s, double t) {
    return Complex(box.alpha_min + (s + 0.5) * ha, box.beta_min + (t + 0.5) * hb);
  };
  auto modulus = [&](Complex z) { return f.eval(z.real(), z.imag(), I).abs(); };

  std::vector<double> value(std::size_t(n * n), -1.0);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const Complex z = node(s, t);
      if (z.imag() > 0.0 && D.contains(z)) value[std::size_t(s * n + t)] = modulus(z);
    }
  auto at = [&](int s, int t) {
    if (s < 0 || s >= n || t < 0 || t >= n) return -1.0;
    return value[std::size_t(s * n + t)];
  };

  std::vector<Extremum> out;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const double v = at(s, t);
      if (v < 0.0) continue;
      const double band = grid.flat_tol * (1.0 + v);
      bool is_max = true, is_min = true, strict_max = true, strict_min = true, interior = true;
      int neighbours = 0;
      for (int ds = -1; ds <= 1; ++ds)
        for (int dt = -1; dt <= 1; ++dt) {
          if (ds == 0 && dt == 0) continue;
          const double w = at(s + ds, t + dt);
          if (w < 0.0) {
            interior = false;
            continue;
          }
          ++neighbours;
          if (w > v + band) is_max = false;
          if (w < v - band) is_min = false;
          if (w >= v - band) strict_max = false;
          if (w <= v + band) strict_min = false;
        }
      if (neighbours == 0) continue;

      for (const ExtremumKind kind : {ExtremumKind::Max, ExtremumKind::Min}) {
        const bool hit = kind == ExtremumKind::Max ? is_max : is_min;
        if (!hit) continue;
        Extremum e;
        e.kind = kind;
        e.strict = kind == ExtremumKind::Max ? strict_max : strict_min;
        e.interior = interior;
        e.z = node(s, t);
        e.value = v;
        if (e.strict && interior) {
          auto offset = [](double lo, double mid, double hi) {
            const double curv = lo - 2.0 * mid + hi;
            if (curv == 0.0) return 0.0;
            return std::clamp(0.5 * (lo - hi) / curv, -0.5, 0.5);
          };
          const double da = offset(at(s - 1, t), v, at(s + 1, t));
          const double db = offset(at(s, t - 1), v, at(s, t + 1));
          const Complex refined = node(s + da, t + db);
          if (refined.imag() > 0.0 && D.contains(refined)) {
            const double rv = modulus(refined);
            if (kind == ExtremumKind::Max ? rv >= v : rv <= v) {
              e.z = refined;
              e.value = rv;
            }
          }
        }
        e.point = on_slice(e.z.real(), e.z.imag(), I);
        out.push_back(e);
      }
    }
  return out;
}

Complex refine_semislice_minimum(const SliceFunction& f, const ImaginaryUnit& I, Complex z,
                                 double step) {
  const CircularDomain& D = f.domain();
  auto modulus = [&](Complex w) { return f.eval(w.real(), w.imag(), I).abs(); };
  double best = modulus(z);
  for (int it = 0; it < 2000 && step > 1e-14; ++it) {
    bool moved = false;
    for (const Complex d : {Complex(step, 0), Complex(-step, 0), Complex(0, step), Complex(0, -step)}) {
      const Complex cand = z + d;
      if (cand.imag() <= 0.0 || !D.contains(cand)) continue;
      const double v = modulus(cand);
      if (v < best) {
        best = v;
        z = cand;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return z;
}

SemisliceMassReport semislice_mass(const SliceFunction& f, const ImaginaryUnit& I,
                                   const QuadratureConfig& quad) {
  if (quad.n < 2) throw ArgumentError("quadrature needs >= 2 cells per side");
  SemisliceMassReport report;
  report.unit = I;
  report.mass = semislice_mass_sampled(f, I, quad.n);
  report.quadrature_error_estimate =
      std::abs(report.mass - semislice_mass_sampled(f, I, std::max(1, quad.n / 2)));
  return report;
}

PrincipleVerdict min_modulus_verdict(const SliceFunction& f, const Quaternion& p,
                                     const MinModulusConfig& cfg) {
  if (!f.domain().contains(p)) throw DomainError("p lies outside the domain");
  const Quaternion fp = f(p);
  if (fp.abs() <= cfg.zero_tol) {
    PrincipleVerdict v;
    v.kind = VerdictKind::ZeroAtPoint;
    v.point = p;
    v.evidence = {p};
    return v;
  }

  const SplitPoint sp = split(p);
  if (!sp.unit) return inconclusive("p is real; semislices are not defined there", {p});

  // df/dx is holomorphic on each semislice, so its vanishing on one is decided
  // on any disk of it.
  double radius = 0.0;
  for (double r = 0.25 * std::max(sp.beta, 1e-3); r > 1e-4; r *= 0.5)
    if (sp.beta - r > 0.0 && f.domain().contains_disk(sp.z(), r)) {
      radius = r;
      break;
    }
  if (radius == 0.0) return inconclusive("no disk around p fits in the domain", {p});

  const SliceFunction local(f.stem().with_domain(CircularDomain::disk(sp.z(), radius, true)));
  const SliceFunction g = d_dx(local, cfg.derivative);
  const SampledStem sampled(g.stem(), g.domain(), cfg.quad.n);

  std::vector<ImaginaryUnit> directions{*sp.unit};
  for (const auto& u : analytic_candidates(sampled)) directions.push_back(u);
  for (const auto& u : fibonacci_sphere(cfg.n_directions)) directions.push_back(u);
  for (const auto& J : directions) {
    if (sampled.mass(J) <= cfg.mass_tol) {
      PrincipleVerdict v;
      v.kind = VerdictKind::ConstantSemislice;
      v.unit = J;
      v.evidence = {p};
      return v;
    }
  }
  return inconclusive("f(p) != 0 and no semislice with vanishing df/dx was found", {p});
}

PrincipleVerdict max_modulus_verdict(const SliceFunction& f, const ImaginaryUnit& J,
                                     const ImaginaryUnit& K, const ExtremumGrid& grid) {
  if (distance(J.quaternion(), K.quaternion()) <= 1e-12)
    throw ArgumentError("maximum principle needs two distinct semislices");
  auto interior_max = [&](const ImaginaryUnit& U) -> std::optional<Quaternion> {
    for (const Extremum& e : extremum_scan(f, U, grid))
      if (e.kind == ExtremumKind::Max && e.interior) return e.point;
    return std::nullopt;
  };
  const auto a = interior_max(J);
  const auto b = interior_max(K);
  if (is_slice_constant(f)) {
    PrincipleVerdict v;
    v.kind = VerdictKind::SliceConstant;
    if (a) v.evidence.push_back(*a);
    if (b) v.evidence.push_back(*b);
    return v;
  }
  if (a && b) return inconclusive("interior maxima on two semislices of a non slice-constant f", {*a, *b});
  return inconclusive("no interior maximum on both semislices");
}

std::vector<ImaginaryUnit> kernel_semislices(const SliceFunction& f, const KernelConfig& cfg) {
  const SliceFunction g = d_dx(f, cfg.derivative);
  const SampledStem sampled(g.stem(), g.domain(), cfg.quad.n);
  const std::vector<ImaginaryUnit> fib = fibonacci_sphere(cfg.n_directions);

  std::vector<ImaginaryUnit> out;
  int fib_hits = 0;
  for (const auto& I : fib)
    if (sampled.mass(I) <= cfg.tol) {
      out.push_back(I);
      ++fib_hits;
    }
  for (const auto& I : analytic_candidates(sampled)) {
    const bool known = std::any_of(out.begin(), out.end(), [&](const ImaginaryUnit& o) {
      return distance(o.quaternion(), I.quaternion()) < 1e-6;
    });
    if (!known && sampled.mass(I) <= cfg.tol) out.push_back(I);
  }

  if (out.size() >= 2) {
    bool regular = f.stem().is_polynomial() || is_slice_regular(f, cfg.derivative).pass;
    bool vanishes = g.stem().is_polynomial() ? max_coeff(g.stem()) <= cfg.tol
                                             : fib_hits == int(fib.size());
    if (regular && !vanishes)
      throw InconsistencyError(
          "df/dx vanishes on two distinct semislices without vanishing identically");
  }
  return out;
}

OpennessReport openness_probe(const SliceFunction& f, const Quaternion& x, double r,
                              const OpennessConfig& cfg) {
  if (!(r > 0.0)) throw ArgumentError("probe radius must be positive");
  const SplitPoint sp = split(x);
  const CircularDomain& D = f.domain();
  if ((sp.beta - r <= 0.0 && !D.contains_real()) || !D.contains_disk(sp.z(), r))
    throw ArgumentError("ball B(x, r) leaves the domain");

  Rng rng(cfg.seed);
  std::normal_distribution<double> gauss;
  const Quaternion fx = f(x);
  const double log_span = std::log(1e3);
  std::vector<Quaternion> images;
  std::vector<double> stretch;
  images.reserve(std::size_t(cfg.n_samples));
  for (int s = 0; s < cfg.n_samples; ++s) {
    Quaternion dir(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    dir = dir / dir.abs();
    // Half of the samples uniform in the ball, half log-uniform in radius to
    // resolve the image near f(x).
    const double u = uniform(rng, 0.0, 1.0);
    const double rho = s % 2 == 0 ? r * std::pow(u, 0.25) : r * std::exp(-log_span * u);
    const Quaternion y = x + rho * dir;
    const Quaternion w = f(y) - fx;
    images.push_back(w);
    stretch.push_back(w.abs() / rho);
  }
  std::nth_element(stretch.begin(), stretch.begin() + std::ptrdiff_t(stretch.size() / 2),
                   stretch.end());
  const double scale = stretch[stretch.size() / 2];

  // Where the differential is invertible, draw further samples uniformly in
  // image space and pull them back linearly; the test itself only uses the
  // true images.
  const auto as_vec = [](const Quaternion& q) { return Eigen::Vector4d(q.w, q.x, q.y, q.z); };
  Eigen::Matrix4d jac;
  const double fd = 1e-6 * std::max(1.0, x.abs());
  for (int k = 0; k < 4; ++k) {
    Eigen::Vector4d e = Eigen::Vector4d::Zero();
    e[k] = fd;
    const Quaternion step(e[0], e[1], e[2], e[3]);
    jac.col(k) = as_vec(f(x + step) - f(x - step)) / (2.0 * fd);
  }
  const Eigen::JacobiSVD<Eigen::Matrix4d> svd(jac, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector4d sv = svd.singularValues();
  const bool invertible = sv[0] > 0.0 && sv[3] > 1e-6 * sv[0];
  if (invertible && scale > 0.0) {
    const Eigen::Matrix4d inv = svd.matrixV() * sv.cwiseInverse().asDiagonal() * svd.matrixU().transpose();
    const int per = cfg.n_samples / int(std::max<std::size_t>(1, cfg.eps_fractions.size()));
    for (const double frac : cfg.eps_fractions) {
      // Cube cells reach rho (1 + 1/lattice) from the centre.
      const double reach = frac * r * scale * (1.0 + 1.0 / std::max(1, cfg.lattice)) * 1.05;
      for (int s = 0; s < per; ++s) {
        Eigen::Vector4d v(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
        v *= reach * std::pow(uniform(rng, 0.0, 1.0), 0.25) / v.norm();
        const Eigen::Vector4d d = inv * v;
        if (!(d.norm() < r)) continue;
        images.push_back(f(x + Quaternion(d[0], d[1], d[2], d[3])) - fx);
      }
    }
  }

  OpennessReport report;
  report.samples = int(images.size());
  if (!(scale > 0.0)) {
    report.witness = fx + Quaternion(r, 0, 0, 0);
    return report;
  }

  const int L = cfg.lattice;
  for (const double frac : cfg.eps_fractions) {
    const double rho = frac * r * scale;
    const double h = rho / L;
    std::set<std::array<int, 4>> covered;
    for (const Quaternion& w : images) {
      if (w.abs() > rho + h) continue;
      covered.insert({int(std::lround(w.w / h)), int(std::lround(w.x / h)),
                      int(std::lround(w.y / h)), int(std::lround(w.z / h))});
    }
    std::optional<Quaternion> hole;
    for (int a = -L; a <= L && !hole; ++a)
      for (int b = -L; b <= L && !hole; ++b)
        for (int c = -L; c <= L && !hole; ++c)
          for (int d = -L; d <= L && !hole; ++d) {
            if (a * a + b * b + c * c + d * d > L * L) continue;
            if (!covered.count({a, b, c, d})) hole = fx + Quaternion(a * h, b * h, c * h, d * h);
          }
    report.rho = rho;
    report.pitch = h;
    if (!hole) {
      report.open = true;
      report.witness.reset();
      return report;
    }
    report.witness = hole;
  }
  return report;
}

}  // namespace slicefn
