#include "slicefn/io.hpp"

#include <cmath>

#include "slicefn/errors.hpp"

namespace slicefn {

namespace {

Json bound(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double number(const Json& j, const std::string& pointer) {
  if (!j.is_number()) throw ParseError("expected a number", pointer);
  return j.get<double>();
}

const Json& member(const Json& j, const char* key, const std::string& pointer) {
  if (!j.is_object()) throw ParseError("expected an object", pointer);
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing member '") + key + "'", pointer);
  return *it;
}

std::array<double, 2> pair(const Json& j, const std::string& pointer, bool allow_null) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected an array of 2 numbers", pointer);
  std::array<double, 2> out{};
  for (std::size_t s = 0; s < 2; ++s) {
    const std::string p = pointer + "/" + std::to_string(s);
    if (allow_null && j[s].is_null())
      out[s] = s == 0 ? -kInfinity : kInfinity;
    else
      out[s] = number(j[s], p);
  }
  return out;
}

Region parse_region(const Json& j, const std::string& pointer) {
  const Json& type = member(j, "type", pointer);
  if (!type.is_string()) throw ParseError("region type must be a string", pointer + "/type");
  const std::string t = type.get<std::string>();
  if (t == "rect") {
    const auto a = pair(member(j, "alpha", pointer), pointer + "/alpha", true);
    const auto b = pair(member(j, "beta", pointer), pointer + "/beta", true);
    const double b0 = j["beta"][0].is_null() ? 0.0 : b[0];
    return Rect{a[0], a[1], b0, b[1]};
  }
  if (t == "disk") {
    const auto c = pair(member(j, "center", pointer), pointer + "/center", false);
    return Disk{Complex(c[0], c[1]), number(member(j, "radius", pointer), pointer + "/radius")};
  }
  if (t == "annulus") {
    return Annulus{number(member(j, "center", pointer), pointer + "/center"),
                   number(member(j, "r_inner", pointer), pointer + "/r_inner"),
                   number(member(j, "r_outer", pointer), pointer + "/r_outer")};
  }
  throw ParseError("unknown region type '" + t + "'", pointer + "/type");
}

}  // namespace

// Adding 0.0 folds negative zeros.
Json to_json(const Quaternion& q) { return Json::array({q.w + 0.0, q.x + 0.0, q.y + 0.0, q.z + 0.0}); }

Json to_json(const Hc& w) { return Json{{"re", to_json(w.re)}, {"im", to_json(w.im)}}; }

Json to_json(const CircularDomain& domain) {
  Json regions = Json::array();
  for (const Region& r : domain.regions()) {
    if (const auto* rect = std::get_if<Rect>(&r)) {
      regions.push_back({{"type", "rect"},
                         {"alpha", {bound(rect->alpha_min), bound(rect->alpha_max)}},
                         {"beta", {rect->beta_min, bound(rect->beta_max)}}});
    } else if (const auto* disk = std::get_if<Disk>(&r)) {
      regions.push_back({{"type", "disk"},
                         {"center", {disk->center.real(), disk->center.imag()}},
                         {"radius", disk->radius}});
    } else {
      const auto& ann = std::get<Annulus>(r);
      regions.push_back({{"type", "annulus"},
                         {"center", ann.center},
                         {"r_inner", ann.r_inner},
                         {"r_outer", ann.r_outer}});
    }
  }
  return Json{{"regions", regions}, {"exclude_real", domain.exclude_real()}};
}

Json to_json(const StemFunction& stem) {
  if (!stem.is_polynomial()) throw ArgumentError("callable stems are not serializable");
  const auto& coeffs = stem.coeffs();
  if (coeffs.size() == 1)
    return Json{{"type", "constant"}, {"a", to_json(coeffs[0].re)}, {"b", to_json(coeffs[0].im)}};
  Json arr = Json::array();
  for (const Hc& c : coeffs) arr.push_back(c.im.norm() == 0.0 ? to_json(c.re) : to_json(c));
  return Json{{"type", "polynomial"}, {"coeffs", arr}};
}

Json emit_function_spec(const SliceFunction& f) {
  return Json{{"domain", to_json(f.domain())}, {"stem", to_json(f.stem())}};
}

Quaternion parse_quaternion(const Json& j, const std::string& pointer) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError("quaternion must be an array of 4 numbers", pointer);
  double v[4];
  for (std::size_t s = 0; s < 4; ++s) v[s] = number(j[s], pointer + "/" + std::to_string(s));
  return {v[0], v[1], v[2], v[3]};
}

ImaginaryUnit parse_unit(const Json& j, const std::string& pointer) {
  if (!j.is_array() || (j.size() != 3 && j.size() != 4))
    throw ParseError("imaginary unit must be [x, y, z] or [0, x, y, z]", pointer);
  const std::size_t off = j.size() - 3;
  double v[3];
  for (std::size_t s = 0; s < 3; ++s)
    v[s] = number(j[s + off], pointer + "/" + std::to_string(s + off));
  try {
    return ImaginaryUnit(v[0], v[1], v[2]);
  } catch (const Error& e) {
    throw ParseError(e.what(), pointer);
  }
}

Hc parse_hc(const Json& j, const std::string& pointer) {
  if (j.is_array()) return Hc{parse_quaternion(j, pointer), Quaternion()};
  return Hc{parse_quaternion(member(j, "re", pointer), pointer + "/re"),
            parse_quaternion(member(j, "im", pointer), pointer + "/im")};
}

CircularDomain parse_domain(const Json& j, const std::string& pointer) {
  const Json& regions = member(j, "regions", pointer);
  if (!regions.is_array() || regions.empty())
    throw ParseError("regions must be a non-empty array", pointer + "/regions");
  std::vector<Region> out;
  for (std::size_t s = 0; s < regions.size(); ++s)
    out.push_back(parse_region(regions[s], pointer + "/regions/" + std::to_string(s)));
  bool exclude_real = false;
  if (const auto it = j.find("exclude_real"); it != j.end()) {
    if (!it->is_boolean()) throw ParseError("exclude_real must be a boolean", pointer + "/exclude_real");
    exclude_real = it->get<bool>();
  }
  return CircularDomain(std::move(out), exclude_real);
}

GallerySpec parse_gallery(const Json& j, const std::string& pointer) {
  GallerySpec spec;
  const Json& name = member(j, "name", pointer);
  if (!name.is_string()) throw ParseError("gallery name must be a string", pointer + "/name");
  spec.name = name.get<std::string>();
  if (j.contains("J")) spec.J = parse_unit(j["J"], pointer + "/J");
  if (j.contains("a")) spec.a = parse_quaternion(j["a"], pointer + "/a");
  if (j.contains("c")) spec.c = number(j["c"], pointer + "/c");
  if (j.contains("r")) spec.r = number(j["r"], pointer + "/r");
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw ParseError("n must be an integer", pointer + "/n");
    spec.n = j["n"].get<int>();
  }
  try {
    spec.validate();
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), pointer);
  }
  return spec;
}

SliceFunction parse_function_spec(const Json& j) {
  if (!j.is_object()) throw ParseError("function spec must be an object", "");
  if (j.contains("gallery")) return build_gallery(parse_gallery(j["gallery"], "/gallery"));

  const CircularDomain domain =
      j.contains("domain") ? parse_domain(j["domain"], "/domain") : CircularDomain::whole();
  const Json& stem = member(j, "stem", "");
  const Json& type = member(stem, "type", "/stem");
  if (!type.is_string()) throw ParseError("stem type must be a string", "/stem/type");
  const std::string t = type.get<std::string>();

  std::vector<Hc> coeffs;
  if (t == "polynomial") {
    const Json& arr = member(stem, "coeffs", "/stem");
    if (!arr.is_array() || arr.empty())
      throw ParseError("coeffs must be a non-empty array", "/stem/coeffs");
    for (std::size_t s = 0; s < arr.size(); ++s)
      coeffs.push_back(parse_hc(arr[s], "/stem/coeffs/" + std::to_string(s)));
  } else if (t == "constant") {
    coeffs.push_back(Hc{parse_quaternion(member(stem, "a", "/stem"), "/stem/a"),
                        parse_quaternion(member(stem, "b", "/stem"), "/stem/b")});
  } else {
    throw ParseError("unknown stem type '" + t + "'", "/stem/type");
  }
  try {
    return SliceFunction(StemFunction::polynomial(domain, std::move(coeffs)));
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
}

SliceFunction parse_function_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), "");
  }
  return parse_function_spec(j);
}

}  // namespace slicefn
