#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rup/lds/instance.hpp"

namespace rup {

using json = nlohmann::json;

/// Instance file:
///   {"mode": "discrete"|"continuous", "coefficients": ["p/q", ...], "initial": ["p/q", ...]}
/// Rationals must be strings. Throws ParseError naming the offending field.
Instance parse_instance(std::string_view text);
Instance instance_from_json(const json& j, const std::string& path = "");
/// A file holding either one instance object or an array of them.
std::vector<Instance> parse_instances(std::string_view text);

json instance_to_json(const Instance& inst);
/// Canonical single-line form.
std::string format_instance(const Instance& inst);

json rational_array(const std::vector<Rational>& values);
std::vector<Rational> parse_rational_array(const json& j, const std::string& path);

}  // namespace rup
