#include "localfield/function_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "localfield/errors.hpp"

namespace lf {
namespace {

using nlohmann::ordered_json;

const ordered_json& member(const ordered_json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw InvalidArgument(path + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw InvalidArgument(path + "." + key + ": missing");
  return *it;
}

int as_int(const ordered_json& v, const std::string& path) {
  if (!v.is_number_integer()) throw InvalidArgument(path + ": expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < -1000000 || x > 1000000) throw InvalidArgument(path + ": out of range");
  return static_cast<int>(x);
}

double as_double(const ordered_json& v, const std::string& path) {
  if (!v.is_number()) throw InvalidArgument(path + ": expected a number");
  return v.get<double>();
}

}  // namespace

StepFunction parse_function(std::string_view text, FieldOptions options) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError("malformed function file: " + std::string(e.what()), e.byte == 0 ? 0 : e.byte - 1);
  }
  const auto& field_obj = member(doc, "field", "$");
  const int p = as_int(member(field_obj, "p", "$.field"), "$.field.p");
  const int c = as_int(member(field_obj, "c", "$.field"), "$.field.c");
  if (p < 2 || c < 1) throw InvalidArgument("$.field: need p >= 2 and c >= 1");
  const FieldPtr field = field_init(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(c), std::nullopt, options);

  Side side = Side::spatial;
  if (const auto it = doc.find("side"); it != doc.end()) {
    if (*it == "spatial") {
      side = Side::spatial;
    } else if (*it == "frequency") {
      side = Side::frequency;
    } else {
      throw InvalidArgument("$.side: expected \"spatial\" or \"frequency\"");
    }
  }
  const int resolution = as_int(member(doc, "resolution", "$"), "$.resolution");
  const int support = as_int(member(doc, "support", "$"), "$.support");
  StepFunction f(field, side, resolution, support);

  const auto& terms = member(doc, "terms", "$");
  if (!terms.is_array()) throw InvalidArgument("$.terms: expected an array");
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const std::string path = "$.terms[" + std::to_string(n) + "]";
    const auto& term = terms[n];
    const auto& center_v = member(term, "center", path);
    if (!center_v.is_string()) throw InvalidArgument(path + ".center: expected an element literal");
    FieldElement center(field);
    try {
      center = FieldElement::parse_literal(field, center_v.get<std::string>());
    } catch (const ParseError& e) {
      throw InvalidArgument(path + ".center: " + e.what());
    }
    const int level = as_int(member(term, "level", path), path + ".level");
    const auto& coef_v = member(term, "coef", path);
    if (!coef_v.is_array() || coef_v.size() != 2) throw InvalidArgument(path + ".coef: expected [re, im]");
    const Complex coef{as_double(coef_v[0], path + ".coef[0]"), as_double(coef_v[1], path + ".coef[1]")};
    try {
      f.add_ball(center, level, coef);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(path + ": " + e.what());
    }
  }
  return f;
}

std::string emit_function(const StepFunction& f) {
  ordered_json doc;
  doc["field"] = {{"p", f.field()->p()}, {"c", f.field()->c()}};
  doc["side"] = to_string(f.side());
  doc["resolution"] = f.resolution();
  doc["support"] = f.support();
  doc["terms"] = ordered_json::array();
  for (const auto& [id, value] : f.nonzero_terms()) {
    doc["terms"].push_back({{"center", id.rep.to_literal()}, {"level", id.level}, {"coef", {value.real(), value.imag()}}});
  }
  return doc.dump(2) + "\n";
}

StepFunction read_function_file(const std::string& path, FieldOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open function file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_function(buf.str(), options);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace lf
