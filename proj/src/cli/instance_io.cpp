#include "rup/cli/instance_io.hpp"

#include "rup/errors.hpp"

namespace rup {

namespace {

std::string join(const std::string& path, const std::string& field) {
  return path.empty() ? field : path + "." + field;
}

}  // namespace

json rational_array(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Rational> parse_rational_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of rational strings");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_string()) throw ParseError(at, "expected a rational string like \"-3/4\"");
    try {
      out.push_back(parse_rational(j[i].get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(at, e.what());
    }
  }
  return out;
}

Instance instance_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "mode" && key != "coefficients" && key != "initial") throw ParseError(join(path, key), "unknown field");
  }
  for (const char* field : {"mode", "coefficients", "initial"}) {
    if (!j.contains(field)) throw ParseError(join(path, field), "missing field");
  }
  const auto& mode_j = j["mode"];
  if (!mode_j.is_string()) throw ParseError(join(path, "mode"), "expected \"discrete\" or \"continuous\"");
  Mode mode;
  if (mode_j == "discrete") {
    mode = Mode::Discrete;
  } else if (mode_j == "continuous") {
    mode = Mode::Continuous;
  } else {
    throw ParseError(join(path, "mode"), "expected \"discrete\" or \"continuous\"");
  }
  auto c = parse_rational_array(j["coefficients"], join(path, "coefficients"));
  auto v = parse_rational_array(j["initial"], join(path, "initial"));
  if (c.empty()) throw ParseError(join(path, "coefficients"), "order must be at least 1");
  if (c.size() != v.size()) {
    throw ParseError(join(path, "initial"), "length " + std::to_string(v.size()) + " differs from coefficients (" +
                                                std::to_string(c.size()) + ")");
  }
  return Instance(mode, std::move(c), std::move(v));
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Instance parse_instance(std::string_view text) { return instance_from_json(parse_json(text)); }

std::vector<Instance> parse_instances(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_array()) return {instance_from_json(j)};
  std::vector<Instance> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(instance_from_json(j[i], "[" + std::to_string(i) + "]"));
  return out;
}

json instance_to_json(const Instance& inst) {
  return json{{"mode", std::string(to_string(inst.mode()))},
              {"coefficients", rational_array(inst.coefficients())},
              {"initial", rational_array(inst.initial())}};
}

std::string format_instance(const Instance& inst) { return instance_to_json(inst).dump(); }

}  // namespace rup
