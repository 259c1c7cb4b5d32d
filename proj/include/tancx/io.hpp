#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tancx/examples.hpp"
#include "tancx/simplicial.hpp"
#include "tancx/tangent.hpp"

namespace tancx::io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Parses a JSON document; syntax errors become ParseError with line and
/// column.
json parse_document(std::string_view text);
json read_document(const std::string& path);

/// Rationals travel as strings "p" or "p/q"; plain JSON integers are
/// accepted on input.
json to_json(const Rat& value);
json to_json(const Vec& v);
json to_json(const Mat& m);

Rat rat_from_json(const json& j, const std::string& where);
Vec vec_from_json(const json& j, std::size_t length, const std::string& where);
/// Row-major array of rows, checked against the expected shape.
Mat mat_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where);

/// {formatVersion, maxLevel, dims, faces[l][i] (faces[0] = []), degens[l][i]}
json to_json(const SimplicialVS& s);
SimplicialVS simplicial_from_json(const json& j);

/// {formatVersion, dims, diffs} with diffs[0] = [].
json to_json(const ChainComplex& c);
ChainComplex complex_from_json(const json& j);

/// {ambient, fiberDim, truncated, components: [{index, value}]}; components
/// not listed are zero.
json to_json(const TanFamily& f);
TanFamily family_from_json(const json& j, const std::string& where);

/// {formatVersion, k, fiberDim, members}; each member is either a full family
/// object or just {components}.
json to_json(const CompatFamily& f);
CompatFamily compat_family_from_json(const json& j);

json to_json(const ValidationReport& r);
json to_json(const KanReport& r);
json to_json(const HomLimitReport& r, const SimplicialVS& s);
json to_json(const ExampleSpec& spec);

/// Two-space indented JSON followed by a newline.
std::string dump(const json& j);

}  // namespace tancx::io
