#include "su2/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace su2 {

namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

template <typename T>
Json optional_number(const std::optional<T>& x) {
  return x ? number(static_cast<double>(*x)) : Json(nullptr);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int integer_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Eigen::MatrixXd read_matrix(const Json& rows, int size, const char* key) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != size)
    throw FormatError(std::string("'") + key + "' must have " + std::to_string(size) + " rows");
  Eigen::MatrixXd out(size, size);
  for (int r = 0; r < size; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != size)
      throw FormatError(std::string("'") + key + "' rows must have " + std::to_string(size) + " entries");
    for (int c = 0; c < size; ++c) {
      if (!row[c].is_number()) throw FormatError(std::string("'") + key + "' entries must be numbers");
      out(r, c) = row[c].get<double>();
    }
  }
  return out;
}

void dump(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map keeps keys sorted
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(key).dump() + ": ";
        dump(value, indent + 2, out);
      }
      out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ", ";
        first = false;
        dump(value, indent, out);
      }
      out += "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buffer[32];
      std::snprintf(buffer, sizeof buffer, "%.17g", x);
      out += buffer;
      return;
    }
    default: out += j.dump();
  }
}

}  // namespace

Json to_json(const FourierCoefficients& c) {
  Json blocks = Json::array();
  for (int k = 0; k < c.levels(); ++k) {
    Json re = Json::array(), im = Json::array();
    for (Eigen::Index r = 0; r <= k; ++r) {
      Json re_row = Json::array(), im_row = Json::array();
      for (Eigen::Index col = 0; col <= k; ++col) {
        re_row.push_back(c[k](r, col).real());
        im_row.push_back(c[k](r, col).imag());
      }
      re.push_back(std::move(re_row));
      im.push_back(std::move(im_row));
    }
    blocks.push_back({{"twol", k}, {"re", std::move(re)}, {"im", std::move(im)}});
  }
  return {{"band_limit_twol", c.band_limit().value()}, {"blocks", std::move(blocks)}};
}

FourierCoefficients coefficients_from_json(const Json& j) {
  const int band = integer_field(j, "band_limit_twol");
  if (band < 0) throw FormatError("band_limit_twol must be nonnegative");
  FourierCoefficients c{TwoL(band)};
  const auto& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw FormatError("'blocks' must be an array");
  for (const auto& block : blocks) {
    const int k = integer_field(block, "twol");
    if (k < 0 || k > band) throw FormatError("block twol " + std::to_string(k) + " outside the band");
    c[k].real() = read_matrix(field(block, "re"), k + 1, "re");
    c[k].imag() = read_matrix(field(block, "im"), k + 1, "im");
  }
  return c;
}

Json to_json(const MultiplierSymbol& sigma) {
  Json j = to_json(sigma.blocks());
  j["kind"] = sigma.tag();
  return j;
}

MultiplierSymbol symbol_from_json(const Json& j) {
  const auto& kind = field(j, "kind");
  if (!kind.is_string()) throw FormatError("'kind' must be a string");
  return MultiplierSymbol(coefficients_from_json(j), kind.get<std::string>());
}

Json to_json(const InequalityReport& report) {
  Json j;
  j["name"] = report.name;
  j["parameters"] = {{"p", number(report.p)}, {"b", optional_number(report.b)}};
  j["lhs"] = number(report.lhs);
  j["rhs"] = number(report.rhs);
  j["ratio"] = number(report.ratio);
  Json ratios = Json::array();
  for (double r : report.ratios) ratios.push_back(number(r));
  j["ratios"] = std::move(ratios);
  j["seed"] = report.ensemble.seed;
  j["band_limit"] = report.ensemble.band.value();
  j["ensemble_size"] = report.ensemble.size;
  j["decay"] = number(report.ensemble.decay);
  j["grid_band"] = report.grid_band;
  j["grid_residual"] = optional_number(report.grid_residual);
  j["paley_constant"] = optional_number(report.paley_constant);
  j["endpoint_error"] = optional_number(report.endpoint_error);
  j["passed"] = report.passed;
  j["failures"] = report.failures;
  j["note"] = report.note;
  return j;
}

Json to_json(const EmpiricalResult& result) {
  return {{"value", number(result.value)},
          {"start_value", number(result.start_value)},
          {"start", result.start},
          {"accepted_steps", result.accepted_steps},
          {"grid_band", result.grid_band},
          {"fine_value", number(result.fine_value)}};
}

Json to_json(const BoundsReport& report) {
  return {{"p", number(report.p)},
          {"q", number(report.q)},
          {"lower_diag", number(report.lower_diag)},
          {"lower_diag_spectral", number(report.lower_diag_spectral)},
          {"lower_trace", number(report.lower_trace)},
          {"upper", number(report.upper)},
          {"empirical", to_json(report.empirical)},
          {"slack", number(report.slack)},
          {"lower_ok", report.lower_ok},
          {"upper_ok", report.upper_ok},
          {"sandwich_ok", report.sandwich_ok()}};
}

Json to_json(const WeakTypeEstimate& estimate) {
  return {{"p", number(estimate.p)},
          {"norm", number(estimate.norm)},
          {"worst_y", number(estimate.worst_y)},
          {"worst_member", estimate.worst_member},
          {"samples", estimate.samples}};
}

std::string canonical_dump(const Json& j) {
  std::string out;
  dump(j, 0, out);
  out += "\n";
  return out;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
  if (!out) throw FormatError("write failed for " + path.string());
}

FourierCoefficients read_coefficients(const std::filesystem::path& path) {
  return coefficients_from_json(read_json(path));
}

MultiplierSymbol load_symbol(const std::string& source, TwoL band) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    auto sigma = symbol_from_json(read_json(source));
    if (sigma.band_limit() < band) throw FormatError("symbol file band is smaller than the requested band");
    return MultiplierSymbol(sigma.blocks().truncated(band), sigma.tag());
  }
  return make_symbol(source, band);
}

}  // namespace su2
