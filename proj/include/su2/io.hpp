#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "su2/inequalities.hpp"
#include "su2/interpolation.hpp"
#include "su2/multipliers.hpp"

namespace su2 {

using Json = nlohmann::json;

// { "band_limit_twol": int, "blocks": [ { "twol", "re", "im" } ] } with rows and columns
// in ascending weight order.
Json to_json(const FourierCoefficients& c);
FourierCoefficients coefficients_from_json(const Json& j);

// Coefficient schema plus "kind".
Json to_json(const MultiplierSymbol& sigma);
MultiplierSymbol symbol_from_json(const Json& j);

Json to_json(const InequalityReport& report);
Json to_json(const EmpiricalResult& result);
Json to_json(const BoundsReport& report);
Json to_json(const WeakTypeEstimate& estimate);

// Sorted keys, two-space indent, doubles as %.17g, non-finite numbers as null.
std::string canonical_dump(const Json& j);

// Throws FormatError when the file is missing or not valid JSON.
Json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

FourierCoefficients read_coefficients(const std::filesystem::path& path);

// A symbol file path when one exists, otherwise a kind string for make_symbol.
MultiplierSymbol load_symbol(const std::string& source, TwoL band);

}  // namespace su2
