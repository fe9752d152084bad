#pragma once

#include <json.hpp>
#include <string>

#include "slicefn/gallery.hpp"
#include "slicefn/slice.hpp"

namespace slicefn {

using Json = nlohmann::json;

Json to_json(const Quaternion& q);
Json to_json(const Hc& w);
Json to_json(const CircularDomain& domain);
// Throws ArgumentError for callable stems.
Json to_json(const StemFunction& stem);
// Function spec {"domain": ..., "stem": ...}.
Json emit_function_spec(const SliceFunction& f);

// Parsers throw ParseError (with a JSON pointer) on schema violations and
// ValidationError on inconsistent domains.
Quaternion parse_quaternion(const Json& j, const std::string& pointer = "");
ImaginaryUnit parse_unit(const Json& j, const std::string& pointer = "");
Hc parse_hc(const Json& j, const std::string& pointer = "");
CircularDomain parse_domain(const Json& j, const std::string& pointer = "");
GallerySpec parse_gallery(const Json& j, const std::string& pointer = "");

// {"domain": ..., "stem": {...}} or {"gallery": {"name": ..., ...}}. A
// missing domain means all of H.
SliceFunction parse_function_spec(const Json& j);
SliceFunction parse_function_spec(const std::string& text);

}  // namespace slicefn
