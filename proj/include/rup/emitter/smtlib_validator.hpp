#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rup::fo {

/// Grammar-level check of an SMT-LIB 2 script in the fragment the emitter
/// produces: balanced s-expressions, known commands, symbols declared (or
/// bound by a quantifier) before use, arithmetic/boolean operators with
/// sensible arity. Returns the list of problems; empty means accepted.
std::vector<std::string> validate_smtlib(std::string_view script);

inline bool is_valid_smtlib(std::string_view script) { return validate_smtlib(script).empty(); }

}  // namespace rup::fo
