#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spb/bundles.hpp"
#include "spb/transport.hpp"

namespace spb::io {

using json = nlohmann::json;

/// Reads a document given as a file path, "-" for `in`, or inline JSON
/// (text starting with '{' or '"'). Throws SchemaError.
json load_document(std::string_view source, std::istream &in);

/// Group specs: "z<n>", "z2xz2", "s<n>", "trivial", or an object
/// {"kind": "cyclic"|"symmetric", "n": ...}, {"kind": "product", "factors": [...]},
/// {"kind": "table", "table": [[...], ...]}.
FiniteGroup parse_group(const json &j);
/// {"kind": "standard_semitorsor", "group": ..., "n": ...},
/// {"kind": "trivial", "group": ..., "size": ...},
/// {"kind": "table", "group": ..., "size": ..., "act": [[...] per element]}.
GSet parse_gset(const json &j);
/// {"mode": "gspace", "fiber": <gset>, "loops": m, "clutching": [...]}
/// {"mode": "group", "fiber": <group>, "loops": m, "clutching": [...]}
/// {"kind": "winding", "group": <group>, "k": k}
/// Clutching entries: {"perm": [...]}, {"automorphism": [...]} or
/// {"wreath": {"g": [...], "sigma": [...]}} (standard semi-torsor fibers).
FlatBundle parse_bundle(const json &j);
/// {"k": k, "loops": m, "generators": [{"angles": ["p/q", ...], "perm": [...]}]}
U1FlatBundle parse_u1_bundle(const json &j);

/// Signed 1-based loop letters separated by commas or spaces.
LoopWord parse_word(std::string_view text);
/// "angle:slot", e.g. "1/4:0".
FiberPoint parse_fiber_point(std::string_view text);
/// Fiber points separated by commas or spaces.
std::vector<FiberPoint> parse_path(std::string_view text);
Rational parse_rational(std::string_view text);

} // namespace spb::io
