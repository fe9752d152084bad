#include "slicefn/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "slicefn/battery.hpp"
#include "slicefn/calculus.hpp"
#include "slicefn/errors.hpp"
#include "slicefn/gallery.hpp"
#include "slicefn/io.hpp"
#include "slicefn/principles.hpp"
#include "slicefn/products.hpp"
#include "slicefn/zeros.hpp"

namespace slicefn {

namespace {

std::vector<double> parse_list(const std::string& text, std::size_t n, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad number '" + item + "'", flag);
    }
  }
  if (out.size() != n)
    throw ParseError("expected " + std::to_string(n) + " comma-separated numbers", flag);
  return out;
}

Quaternion parse_point(const std::string& text) {
  const auto v = parse_list(text, 4, "--point");
  return {v[0], v[1], v[2], v[3]};
}

ImaginaryUnit parse_unit_flag(const std::string& text, const char* flag) {
  const auto v = parse_list(text, 3, flag);
  try {
    return ImaginaryUnit(v[0], v[1], v[2]);
  } catch (const Error& e) {
    throw ParseError(e.what(), flag);
  }
}

SliceFunction load_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read function spec '" + path + "'", "--fn");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_function_spec(buf.str());
}

Json sphere_json(const SphereId& s) { return Json{{"alpha", s.alpha}, {"beta", s.beta}}; }

Json zero_json(const SphereZero& z) {
  Json j{{"sphere", sphere_json(z.sphere)}, {"kind", to_string(z.classification.kind)}};
  if (z.classification.point) j["point"] = to_json(*z.classification.point);
  return j;
}

std::string error_name(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const ValidationError*>(&e)) return "validation";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const ArgumentError*>(&e)) return "argument";
  if (dynamic_cast<const DegenerateError*>(&e)) return "degenerate";
  if (dynamic_cast<const SingularError*>(&e)) return "singular";
  if (dynamic_cast<const InconsistencyError*>(&e)) return "inconsistency";
  return "internal";
}

int error_code(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ValidationError*>(&e))
    return kExitParse;
  if (dynamic_cast<const InconsistencyError*>(&e)) return kExitInconsistent;
  return kExitDomain;
}

struct Options {
  std::vector<std::string> fn;
  std::string point, I, J, K, sphere, name, a, out, which = "x";
  std::vector<int> res;
  double tol = kZeroTolerance;
  double r = 0.1;
  double c = 10.0;
  double radius = 1.0;
  int n = 1;
  unsigned seed = 0;
};

}  // namespace

std::string export_grid(const SliceFunction& f, const ImaginaryUnit& I, int n_alpha, int n_beta) {
  if (n_alpha < 1 || n_beta < 1) throw ArgumentError("grid resolution must be positive");
  const CircularDomain& D = f.domain();
  if (!D.bounded()) throw ArgumentError("grid export needs a bounded domain");
  const Box box = D.bounding_box();
  const double ha = (box.alpha_max - box.alpha_min) / n_alpha;
  const double hb = (box.beta_max - box.beta_min) / n_beta;
  std::ostringstream os;
  os << std::setprecision(17) << "alpha,beta,f_w,f_x,f_y,f_z,abs_f\n";
  for (int t = 0; t < n_beta; ++t)
    for (int s = 0; s < n_alpha; ++s) {
      const double alpha = box.alpha_min + (s + 0.5) * ha;
      const double beta = box.beta_min + (t + 0.5) * hb;
      os << alpha << ',' << beta << ',';
      if (D.contains(Complex(alpha, beta))) {
        const Quaternion v = f.eval(alpha, beta, I);
        os << v.w << ',' << v.x << ',' << v.y << ',' << v.z << ',' << v.abs() << '\n';
      } else {
        os << "nan,nan,nan,nan,nan\n";
      }
    }
  return os.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slice function toolkit"};
  app.require_subcommand(1, 1);
  Options o;

  auto fn_opt = [&](CLI::App* sub, std::size_t count = 1) {
    sub->add_option("--fn", o.fn, "function spec JSON path")->required()->expected(int(count));
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "write output to PATH");
    sub->add_option("--seed", o.seed, "RNG seed");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate f at a point");
  fn_opt(eval);
  eval->add_option("--point", o.point, "w,x,y,z")->required();
  CLI::App* product = app.add_subcommand("product", "slice product of two functions");
  fn_opt(product, 2);
  CLI::App* normal_cmd = app.add_subcommand("normal", "normal function N(f)");
  fn_opt(normal_cmd);
  CLI::App* recip = app.add_subcommand("reciprocal", "regular reciprocal");
  fn_opt(recip);
  recip->add_option("--point", o.point, "optional point w,x,y,z to evaluate at");
  CLI::App* zeros = app.add_subcommand("zeros", "zero spheres of a polynomial");
  fn_opt(zeros);
  zeros->add_option("--tol", o.tol, "zero tolerance");
  CLI::App* classify = app.add_subcommand("classify", "classify one sphere");
  fn_opt(classify);
  classify->add_option("--sphere", o.sphere, "alpha,beta")->required();
  classify->add_option("--tol", o.tol, "zero tolerance");
  CLI::App* regular = app.add_subcommand("regular-check", "slice regularity report");
  fn_opt(regular);
  regular->add_option("--tol", o.tol, "residual tolerance");
  CLI::App* deriv = app.add_subcommand("derivative", "df/dx or df/dx^c");
  fn_opt(deriv);
  deriv->add_option("--wrt", o.which, "x or xc")->check(CLI::IsMember({"x", "xc"}));
  CLI::App* repr = app.add_subcommand("represent", "reconstruct f(alpha+beta I) from J and K");
  fn_opt(repr);
  repr->add_option("--sphere", o.sphere, "alpha,beta")->required();
  repr->add_option("--J", o.J, "x,y,z")->required();
  repr->add_option("--K", o.K, "x,y,z")->required();
  repr->add_option("--I", o.I, "x,y,z")->required();
  CLI::App* mass = app.add_subcommand("mass", "semislice mass of |f|");
  fn_opt(mass);
  mass->add_option("--I", o.I, "x,y,z")->required();
  mass->add_option("--res", o.res, "cells per side")->expected(1);
  CLI::App* extrema = app.add_subcommand("extrema", "local extrema of |f| on a semislice");
  fn_opt(extrema);
  extrema->add_option("--I", o.I, "x,y,z")->required();
  extrema->add_option("--res", o.res, "cells per side")->expected(1);
  CLI::App* probe = app.add_subcommand("probe-open", "Monte-Carlo openness probe");
  fn_opt(probe);
  probe->add_option("--point", o.point, "w,x,y,z")->required();
  probe->add_option("--r", o.r, "ball radius");
  probe->add_option("--n", o.n, "number of samples (default 200000)");
  CLI::App* gallery = app.add_subcommand("gallery", "emit a named example as function spec");
  gallery->add_option("--name", o.name, "gallery name")->required();
  gallery->add_option("--J", o.J, "x,y,z");
  gallery->add_option("--a", o.a, "w,x,y,z");
  gallery->add_option("--c", o.c, "real parameter c");
  gallery->add_option("--r", o.radius, "domain radius");
  gallery->add_option("--n", o.n, "monomial degree");
  CLI::App* grid = app.add_subcommand("sample-grid", "CSV grid of f on a semislice");
  fn_opt(grid);
  grid->add_option("--I", o.I, "x,y,z")->required();
  grid->add_option("--res", o.res, "N or N,M")->delimiter(',')->required();
  CLI::App* verify = app.add_subcommand("verify", "run the property battery");
  for (CLI::App* sub : app.get_subcommands({})) common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", "parse"}, {"detail", e.what()}}.dump() << '\n';
    return kExitParse;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    auto fn = [&](std::size_t s = 0) { return load_function(o.fn.at(s)); };
    auto res = [&](int fallback) { return o.res.empty() ? fallback : o.res.front(); };

    if (*eval) {
      buffer << Json{{"value", to_json(fn()(parse_point(o.point)))}}.dump() << '\n';
    } else if (*product) {
      buffer << emit_function_spec(slice_product(fn(0), fn(1))).dump() << '\n';
    } else if (*normal_cmd) {
      buffer << emit_function_spec(normal(fn())).dump() << '\n';
    } else if (*recip) {
      const SliceFunction f = fn();
      const ReciprocalFunction inv = reciprocal(f);
      Json excluded = Json::array();
      for (const SphereId& s : inv.excluded()) excluded.push_back(sphere_json(s));
      // f^{-.} = N(f)^{-1} f^c.
      Json j{{"numerator", emit_function_spec(conjugate(f))},
             {"normal", emit_function_spec(normal(f))},
             {"excluded_spheres", excluded}};
      if (!o.point.empty()) j["value"] = to_json(inv(parse_point(o.point)));
      buffer << j.dump() << '\n';
    } else if (*zeros) {
      Json j = Json::array();
      for (const SphereZero& z : find_zeros_polynomial(fn(), o.tol)) j.push_back(zero_json(z));
      buffer << j.dump() << '\n';
    } else if (*classify) {
      const auto v = parse_list(o.sphere, 2, "--sphere");
      const SphereId s{v[0], v[1]};
      buffer << zero_json({s, classify_sphere(fn(), s, o.tol)}).dump() << '\n';
    } else if (*regular) {
      DerivativeConfig cfg;
      if (regular->count("--tol")) cfg.tol = o.tol;
      const RegularityReport rep = is_slice_regular(fn(), cfg);
      buffer << Json{{"max_residual", rep.max_residual},
                     {"worst_point", {rep.worst_point.real(), rep.worst_point.imag()}},
                     {"pass", rep.pass},
                     {"structural", rep.structural}}
                    .dump()
             << '\n';
    } else if (*deriv) {
      const SliceFunction f = fn();
      buffer << emit_function_spec(o.which == "x" ? d_dx(f) : d_dxc(f)).dump() << '\n';
    } else if (*repr) {
      const SliceFunction f = fn();
      const auto v = parse_list(o.sphere, 2, "--sphere");
      const ImaginaryUnit J = parse_unit_flag(o.J, "--J"), K = parse_unit_flag(o.K, "--K"),
                          I = parse_unit_flag(o.I, "--I");
      const Quaternion got =
          represent(f.eval(v[0], v[1], J), f.eval(v[0], v[1], K), J, K, I, v[0], v[1]);
      const Quaternion direct = f.eval(v[0], v[1], I);
      buffer << Json{{"value", to_json(got)}, {"direct", to_json(direct)},
                     {"error", distance(got, direct)}}
                    .dump()
             << '\n';
    } else if (*mass) {
      const SemisliceMassReport rep =
          semislice_mass(fn(), parse_unit_flag(o.I, "--I"), QuadratureConfig{res(64)});
      buffer << Json{{"I", to_json(rep.unit.quaternion())},
                     {"mass", rep.mass},
                     {"quadrature_error_estimate", rep.quadrature_error_estimate}}
                    .dump()
             << '\n';
    } else if (*extrema) {
      ExtremumGrid g;
      g.n = res(64);
      Json j = Json::array();
      for (const Extremum& e : extremum_scan(fn(), parse_unit_flag(o.I, "--I"), g))
        j.push_back({{"point", to_json(e.point)},
                     {"kind", e.kind == ExtremumKind::Max ? "max" : "min"},
                     {"value", e.value},
                     {"strict", e.strict},
                     {"interior", e.interior}});
      buffer << j.dump() << '\n';
    } else if (*probe) {
      OpennessConfig cfg;
      cfg.seed = o.seed;
      if (probe->count("--n")) cfg.n_samples = o.n;
      const OpennessReport rep = openness_probe(fn(), parse_point(o.point), o.r, cfg);
      Json j{{"open", rep.open}, {"rho", rep.rho}, {"pitch", rep.pitch}, {"samples", rep.samples}};
      if (rep.witness) j["witness"] = to_json(*rep.witness);
      buffer << j.dump() << '\n';
    } else if (*gallery) {
      GallerySpec spec;
      spec.name = o.name;
      if (!o.J.empty()) spec.J = parse_unit_flag(o.J, "--J");
      if (!o.a.empty()) spec.a = parse_point(o.a);
      spec.c = o.c;
      spec.r = o.radius;
      spec.n = o.n;
      buffer << emit_function_spec(build_gallery(spec)).dump() << '\n';
    } else if (*grid) {
      if (o.res.size() > 2) throw ParseError("--res takes N or N,M", "--res");
      const int na = o.res.front();
      const int nb = o.res.size() == 2 ? o.res[1] : na;
      buffer << export_grid(fn(), parse_unit_flag(o.I, "--I"), na, nb);
    } else if (*verify) {
      Json list = Json::array();
      bool all = true;
      for (const CriterionResult& r : run_battery(BatteryConfig{o.seed})) {
        all = all && r.pass;
        list.push_back({{"id", r.id},
                        {"title", r.title},
                        {"pass", r.pass},
                        {"detail", r.detail},
                        {"seconds", r.seconds},
                        {"notes", r.notes}});
      }
      buffer << Json{{"pass", all}, {"criteria", list}}.dump(2) << '\n';
      if (!all) code = kExitVerify;
    }
  } catch (const std::exception& e) {
    err << Json{{"error", error_name(e)}, {"detail", e.what()}}.dump() << '\n';
    return dynamic_cast<const Error*>(&e) ? error_code(e) : kExitInconsistent;
  }

  if (o.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << Json{{"error", "io"}, {"detail", "cannot write " + o.out}}.dump() << '\n';
      return kExitDomain;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace slicefn
