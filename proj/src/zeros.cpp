#include "slicefn/zeros.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "slicefn/errors.hpp"

namespace slicefn {

namespace {

using CMatrix = Eigen::MatrixXcd;

// Parlett-Reinsch style balancing of the companion matrix by powers of two.
void balance(CMatrix& m) {
  const Eigen::Index n = m.rows();
  constexpr double kGamma = 0.9;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index s = 0; s < n; ++s) {
      const double row = m.row(s).cwiseAbs().sum();
      const double col = m.col(s).cwiseAbs().sum();
      if (row == 0.0 || col == 0.0) continue;
      int exponent = 0;
      std::frexp(row / col, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      const double scaled_col = std::ldexp(col, exponent);
      const double scaled_row = std::ldexp(row, -exponent);
      if (scaled_col + scaled_row < kGamma * (col + row)) {
        changed = true;
        m.row(s) *= std::ldexp(1.0, -exponent);
        m.col(s) *= std::ldexp(1.0, exponent);
      }
    }
  }
}

Complex eval_poly(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Complex> derive(const std::vector<Complex>& c) {
  std::vector<Complex> d;
  for (std::size_t n = 1; n < c.size(); ++n) d.push_back(double(n) * c[n]);
  return d;
}

double max_abs(const std::vector<Complex>& c) {
  double m = 0.0;
  for (const auto& v : c) m = std::max(m, std::abs(v));
  return m;
}

// Snap distance to the real axis and sphere de-duplication radius.
constexpr double kRealSnap = 1e-8;
constexpr double kSphereMerge = 1e-7;
constexpr double kClusterRadius = 1e-4;

bool same_sphere(const SphereId& a, const SphereId& b, double eps) {
  return std::abs(a.alpha - b.alpha) <= eps && std::abs(a.beta - b.beta) <= eps;
}

}  // namespace

const char* to_string(ZeroKind kind) {
  switch (kind) {
    case ZeroKind::NoZero:
      return "NoZero";
    case ZeroKind::SphericalOrReal:
      return "SphericalOrReal";
    case ZeroKind::SIsolated:
      return "SIsolated";
  }
  return "?";
}

ZeroClassification classify_sphere(const SliceFunction& f, const SphereId& s, double tol) {
  if (s.beta < 0.0) throw ArgumentError("sphere radius beta must be >= 0");
  const Hc F = f.stem()(s.z());
  const Complex cn = (F * F.c_conj()).scalar_part();
  if (std::abs(cn) > tol) return {ZeroKind::NoZero, std::nullopt};
  if (F.abs() <= tol) return {ZeroKind::SphericalOrReal, std::nullopt};

  if (s.beta == 0.0 || F.im.norm() == 0.0)
    throw InconsistencyError("CN(F) vanishes while F does not at a point where F2 = 0");
  if (F.re.imag().abs() <= 1e-12 && F.im.imag().abs() <= 1e-12)
    throw InconsistencyError("real-valued stem produced an S-isolated zero");

  const Quaternion I = -(F.re * F.im.inverse());
  if (std::abs(I.w) > 1e-6 || std::abs(I.abs() - 1.0) > 1e-6)
    throw InconsistencyError("S-isolated zero direction is not a unit imaginary quaternion");
  return {ZeroKind::SIsolated, on_slice(s.alpha, s.beta, ImaginaryUnit::normalized(I))};
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs_in) {
  std::vector<Complex> c = coeffs_in;
  const double scale = max_abs(c);
  if (scale == 0.0) throw DegenerateError("zero polynomial has no isolated roots");
  while (!c.empty() && std::abs(c.back()) <= 1e-14 * scale) c.pop_back();

  std::vector<Complex> roots;
  // Exact roots at the origin.
  std::size_t lead_zero = 0;
  while (lead_zero < c.size() && c[lead_zero] == 0.0) ++lead_zero;
  roots.assign(lead_zero, Complex(0.0));
  c.erase(c.begin(), c.begin() + std::ptrdiff_t(lead_zero));
  const int degree = int(c.size()) - 1;
  if (degree <= 0) return roots;

  CMatrix companion = CMatrix::Zero(degree, degree);
  for (int s = 1; s < degree; ++s) companion(s, s - 1) = 1.0;
  for (int s = 0; s < degree; ++s) companion(s, degree - 1) = -c[std::size_t(s)] / c.back();
  balance(companion);
  Eigen::ComplexEigenSolver<CMatrix> solver(companion, false);
  if (solver.info() != Eigen::Success) throw InconsistencyError("companion eigen solver failed");
  std::vector<Complex> eig(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());

  // Group eigenvalues that belong to one multiple root.
  std::vector<bool> used(eig.size(), false);
  for (std::size_t s = 0; s < eig.size(); ++s) {
    if (used[s]) continue;
    std::vector<Complex> cluster{eig[s]};
    used[s] = true;
    for (std::size_t t = s + 1; t < eig.size(); ++t) {
      if (!used[t] && std::abs(eig[t] - eig[s]) <= kClusterRadius * std::max(1.0, std::abs(eig[s]))) {
        cluster.push_back(eig[t]);
        used[t] = true;
      }
    }
    Complex r = 0.0;
    for (const auto& v : cluster) r += v;
    r /= double(cluster.size());

    std::vector<Complex> p = c;
    for (std::size_t m = 1; m < cluster.size(); ++m) p = derive(p);
    const std::vector<Complex> dp = derive(p);
    for (int it = 0; it < 8; ++it) {
      const Complex d = eval_poly(dp, r);
      if (d == 0.0) break;
      const Complex step = eval_poly(p, r) / d;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      r -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(r))) break;
    }
    roots.insert(roots.end(), cluster.size(), r);
  }
  return roots;
}

std::vector<SphereZero> find_zeros_polynomial(const SliceFunction& f, double tol) {
  const StemFunction& F = f.stem();
  if (!F.is_polynomial()) throw ArgumentError("find_zeros_polynomial needs a polynomial stem");
  const std::vector<Complex> cn = complex_coeffs(stem_cn(F));
  double f_scale = 0.0;
  for (const auto& c : F.coeffs()) f_scale = std::max(f_scale, c.abs());
  if (max_abs(cn) <= 1e-14 * std::max(1.0, f_scale * f_scale))
    throw DegenerateError("zero divisor / identically degenerate: N(f) vanishes identically");

  std::vector<SphereId> spheres;
  for (const Complex r : polynomial_roots(cn)) {
    if (r.imag() < -kRealSnap) continue;
    SphereId s{r.real(), std::abs(r.imag()) < kRealSnap ? 0.0 : r.imag()};
    if (!f.domain().contains(s.z())) continue;
    const bool seen = std::any_of(spheres.begin(), spheres.end(),
                                  [&](const SphereId& o) { return same_sphere(o, s, kSphereMerge); });
    if (!seen) spheres.push_back(s);
  }
  std::sort(spheres.begin(), spheres.end(), [](const SphereId& a, const SphereId& b) {
    return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
  });

  std::vector<SphereZero> out;
  for (const SphereId& s : spheres) {
    ZeroClassification c = classify_sphere(f, s, tol);
    if (c.kind != ZeroKind::NoZero) out.push_back({s, std::move(c)});
  }
  return out;
}

std::vector<SphereZero> sample_zero_locus(const SliceFunction& f, const ZeroGrid& grid) {
  if (grid.n_alpha < 2 || grid.n_beta < 2) throw ArgumentError("zero grid needs >= 2 cells per side");
  const StemFunction& F = f.stem();
  const CircularDomain& D = f.domain();
  const Box box = sampling_box(D, grid.window);
  const double ha = (box.alpha_max - box.alpha_min) / grid.n_alpha;
  const double hb = (box.beta_max - box.beta_min) / grid.n_beta;

  auto cn_abs = [&](Complex z) {
    const Hc v = F.eval_unchecked(z);
    return std::abs((v * v.c_conj()).scalar_part());
  };
  auto node = [&](int s, int t) {
    return Complex(box.alpha_min + (s + 0.5) * ha, box.beta_min + (t + 0.5) * hb);
  };

  const int na = grid.n_alpha;
  const int nb = grid.n_beta;
  std::vector<double> value(std::size_t(na * nb), -1.0);
  for (int s = 0; s < na; ++s)
    for (int t = 0; t < nb; ++t) {
      const Complex z = node(s, t);
      if (z.imag() > 0.0 && D.contains(z)) value[std::size_t(s * nb + t)] = cn_abs(z);
    }

  std::vector<SphereZero> out;
  auto record = [&](const SphereId& sph, double merge) {
    for (const auto& o : out)
      if (same_sphere(o.sphere, sph, merge)) return;
    ZeroClassification c = classify_sphere(f, sph, grid.relaxed_tol);
    if (c.kind != ZeroKind::NoZero) out.push_back({sph, std::move(c)});
  };

  for (int s = 0; s < na; ++s)
    for (int t = 0; t < nb; ++t) {
      const double v = value[std::size_t(s * nb + t)];
      if (v < 0.0) continue;
      const Complex z = node(s, t);
      if (v <= grid.relaxed_tol) {
        record({z.real(), z.imag()}, 0.0);
        continue;
      }
      bool is_min = true;
      for (const auto& [ds, dt] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
        const int u = s + ds;
        const int w = t + dt;
        if (u < 0 || u >= na || w < 0 || w >= nb) continue;
        const double nv = value[std::size_t(u * nb + w)];
        if (nv >= 0.0 && nv < v) is_min = false;
      }
      if (!is_min) continue;

      // Shrinking pattern search on |CN|, confined to the domain.
      Complex best = z;
      double best_v = v;
      double step_a = ha;
      double step_b = hb;
      for (int it = 0; it < 400 && (step_a > 1e-13 || step_b > 1e-13); ++it) {
        bool moved = false;
        for (const Complex d : {Complex(step_a, 0), Complex(-step_a, 0), Complex(0, step_b),
                                Complex(0, -step_b)}) {
          const Complex cand = best + d;
          if (cand.imag() <= 0.0 || !D.contains(cand)) continue;
          const double cv = cn_abs(cand);
          if (cv < best_v) {
            best = cand;
            best_v = cv;
            moved = true;
          }
        }
        if (!moved) {
          step_a *= 0.5;
          step_b *= 0.5;
        }
      }
      if (best_v <= grid.relaxed_tol) record({best.real(), best.imag()}, std::max(ha, hb));
    }
  return out;
}

bool is_degenerate_sphere(const SliceFunction& f, const SphereId& s, double tol) {
  if (!(s.beta > 0.0)) throw ArgumentError("degenerate spheres have beta > 0");
  const Hc F = f.stem()(s.z());
  return F.im.abs() / s.beta <= tol;
}

}  // namespace slicefn
