#pragma once

#include <optional>

#include "rup/classify/classify.hpp"
#include "rup/cli/instance_io.hpp"

namespace rup {

/// Machine-readable classification result. Witness fields mirror Witness.
struct VerdictReport {
  VerdictKind kind = VerdictKind::NonRobust;
  Condition condition = Condition::None;
  std::optional<AlgebraicReal> dominant_root;
  std::optional<int> numerator_sign;
  std::optional<Polynomial> support_quotient;
  std::optional<RootBox> oscillating_root;
  Instance instance;
};

VerdictReport make_report(const Instance& inst, const Verdict& verdict);

json report_to_json(const VerdictReport& report);
/// Throws ParseError on a malformed report.
VerdictReport report_from_json(const json& j);

}  // namespace rup
