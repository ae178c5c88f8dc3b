#include "rup/cli/report.hpp"

#include "rup/errors.hpp"

namespace rup {

VerdictReport make_report(const Instance& inst, const Verdict& verdict) {
  const Witness& w = verdict.witness;
  return VerdictReport{verdict.kind,         w.triggered,        w.dominant_root,
                       w.numerator_sign_at_rho, w.support_quotient, w.oscillating_root, inst};
}

namespace {

json interval_json(const Interval& i) { return json::array({to_string(i.lo), to_string(i.hi)}); }

Interval parse_interval(const json& j, const std::string& path) {
  const auto ends = parse_rational_array(j, path);
  if (ends.size() != 2 || ends[0] > ends[1]) throw ParseError(path, "expected [lo, hi] with lo <= hi");
  return Interval{ends[0], ends[1]};
}

const json& field(const json& j, const std::string& name, const std::string& path) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(path.empty() ? name : path + "." + name, "missing field");
  return j[name];
}

template <typename Enum, std::size_t N>
Enum parse_enum(const json& j, const Enum (&options)[N], const std::string& path) {
  if (j.is_string()) {
    for (Enum e : options) {
      if (j.get<std::string>() == to_string(e)) return e;
    }
  }
  throw ParseError(path, "unexpected value " + j.dump());
}

}  // namespace

json report_to_json(const VerdictReport& r) {
  json witness = json::object();
  if (r.dominant_root) {
    witness["dominant_root"] = {{"poly", rational_array(r.dominant_root->poly().coefficients())},
                                {"interval", interval_json(Interval{r.dominant_root->lo(), r.dominant_root->hi()})},
                                {"approx", r.dominant_root->approx()}};
  }
  if (r.numerator_sign) witness["numerator_sign"] = *r.numerator_sign;
  if (r.support_quotient) witness["support_quotient_coeffs"] = rational_array(r.support_quotient->coefficients());
  if (r.oscillating_root) {
    const auto& b = *r.oscillating_root;
    witness["oscillating_root_box"] = {{"poly", rational_array(b.factor.coefficients())},
                                       {"re", interval_json(b.re)},
                                       {"im", interval_json(b.im)},
                                       {"multiplicity", b.multiplicity}};
  }
  return json{{"verdict", std::string(to_string(r.kind))},
              {"condition", std::string(to_string(r.condition))},
              {"witness", witness},
              {"instance_echo", instance_to_json(r.instance)}};
}

VerdictReport report_from_json(const json& j) {
  static const VerdictKind kinds[] = {VerdictKind::RobustYes, VerdictKind::RobustNo, VerdictKind::NonRobust};
  static const Condition conditions[] = {Condition::Yes, Condition::No1, Condition::No2, Condition::None};
  VerdictReport r{parse_enum(field(j, "verdict", ""), kinds, "verdict"),
                  parse_enum(field(j, "condition", ""), conditions, "condition"),
                  std::nullopt,
                  std::nullopt,
                  std::nullopt,
                  std::nullopt,
                  instance_from_json(field(j, "instance_echo", ""), "instance_echo")};
  const json& w = field(j, "witness", "");
  if (!w.is_object()) throw ParseError("witness", "expected an object");
  if (w.contains("dominant_root")) {
    const json& d = w["dominant_root"];
    Polynomial p(parse_rational_array(field(d, "poly", "witness.dominant_root"), "witness.dominant_root.poly"));
    const Interval i = parse_interval(field(d, "interval", "witness.dominant_root"), "witness.dominant_root.interval");
    try {
      r.dominant_root = AlgebraicReal(std::move(p), i.lo, i.hi);
    } catch (const std::invalid_argument& e) {
      throw ParseError("witness.dominant_root", e.what());
    }
  }
  if (w.contains("numerator_sign")) {
    const json& s = w["numerator_sign"];
    if (!s.is_number_integer() || s.get<int>() < -1 || s.get<int>() > 1) {
      throw ParseError("witness.numerator_sign", "expected -1, 0 or 1");
    }
    r.numerator_sign = s.get<int>();
  }
  if (w.contains("support_quotient_coeffs")) {
    r.support_quotient = Polynomial(parse_rational_array(w["support_quotient_coeffs"], "witness.support_quotient_coeffs"));
  }
  if (w.contains("oscillating_root_box")) {
    const json& b = w["oscillating_root_box"];
    const std::string path = "witness.oscillating_root_box";
    RootBox box;
    box.factor = Polynomial(parse_rational_array(field(b, "poly", path), path + ".poly"));
    box.re = parse_interval(field(b, "re", path), path + ".re");
    box.im = parse_interval(field(b, "im", path), path + ".im");
    const json& m = field(b, "multiplicity", path);
    if (!m.is_number_integer() || m.get<int>() < 1) throw ParseError(path + ".multiplicity", "expected >= 1");
    box.multiplicity = m.get<int>();
    box.real = box.im.lo == 0 && box.im.hi == 0;
    r.oscillating_root = std::move(box);
  }
  return r;
}

}  // namespace rup
