#include "rup/classify/classify.hpp"

#include <stdexcept>
#include <vector>

#include "rup/algebra/composed.hpp"
#include "rup/errors.hpp"
#include "rup/transform/transform.hpp"

namespace rup {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::RobustYes: return "RobustYes";
    case VerdictKind::RobustNo: return "RobustNo";
    case VerdictKind::NonRobust: return "NonRobust";
  }
  return "?";
}

std::string_view to_string(Condition condition) {
  switch (condition) {
    case Condition::Yes: return "Yes";
    case Condition::No1: return "No1";
    case Condition::No2: return "No2";
    case Condition::None: return "None";
  }
  return "?";
}

Polynomial support_quotient(const Polynomial& chi, const Polynomial& num) {
  if (chi.is_zero()) throw DegenerateInput("support quotient of the zero polynomial");
  return exact_quotient(chi, poly_gcd(chi, num));
}

namespace {

// Roots of chi, each tagged with whether its closed-form block is nonzero,
// plus the real-valued quantity that orders roots for the mode: |lambda|^2 for
// recurrences, 2 Re(lambda) for ODEs.
class Spectrum {
 public:
  Spectrum(const Instance& inst)
      : mode_(inst.mode()),
        chi_(characteristic_poly(inst)),
        num_(transform_numerator(inst)),
        h2_(support_quotient(chi_, num_)) {
    std::vector<SquarefreeFactor> split;
    for (const auto& [f, m] : squarefree_decomposition(chi_)) {
      const Polynomial live = h2_.degree() >= 1 ? poly_gcd(f, h2_) : Polynomial::constant(1);
      if (live.degree() >= 1) {
        split.push_back({live, m});
        supported_by_factor_.push_back(true);
      }
      const Polynomial dead = exact_quotient(f, live);
      if (dead.degree() >= 1) {
        split.push_back({dead.monic(), m});
        supported_by_factor_.push_back(false);
      }
    }
    boxes_ = isolate_complex_roots(split);
    size_.resize(boxes_.size());
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
      if (boxes_[i].real) top_real_ = i;
    }
  }

  const std::vector<RootBox>& boxes() const { return boxes_; }
  bool supported(std::size_t i) const { return supported_by_factor_[boxes_[i].factor_index]; }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& quotient() const { return h2_; }

  /// index of the largest real root, if any
  std::optional<std::size_t> top_real() const { return top_real_; }

  const AlgebraicReal& size(std::size_t i) {
    if (!size_[i]) {
      size_[i] = mode_ == Mode::Discrete ? modulus_squared(boxes_[i]) : real_part_doubled(boxes_[i]);
    }
    return *size_[i];
  }

  std::strong_ordering compare_size(std::size_t i, std::size_t j) { return compare_algebraic(size(i), size(j)); }

 private:
  Mode mode_;
  Polynomial chi_;
  Polynomial num_;
  Polynomial h2_;
  std::vector<RootBox> boxes_;
  std::vector<bool> supported_by_factor_;
  std::vector<std::optional<AlgebraicReal>> size_;
  std::optional<std::size_t> top_real_;
};

struct Evaluation {
  ConditionValues values;
  Witness yes;
  Witness no1;
  Witness no2;
};

Evaluation evaluate(const Instance& inst) {
  Spectrum spectrum(inst);
  const auto& boxes = spectrum.boxes();
  const bool discrete = inst.mode() == Mode::Discrete;
  Evaluation out;

  // rho: the largest real root; the discrete conditions also need rho > 0
  std::optional<std::size_t> rho = spectrum.top_real();
  std::optional<AlgebraicReal> rho_value;
  if (rho) {
    rho_value = real_value(boxes[*rho]);
    if (discrete && rho_value->sign() <= 0) {
      rho.reset();
      rho_value.reset();
    }
  }

  std::optional<int> num_sign;
  if (rho_value) num_sign = sign_at(spectrum.numerator(), *rho_value);

  // Yes: rho simple, strictly dominant over every other root, numerator > 0
  if (rho && boxes[*rho].multiplicity == 1 && num_sign == 1) {
    bool dominant = true;
    for (std::size_t i = 0; i < boxes.size() && dominant; ++i) {
      if (i != *rho && spectrum.compare_size(i, *rho) >= 0) dominant = false;
    }
    if (dominant) {
      out.values.yes = true;
      out.yes = {rho_value, std::nullopt, num_sign, std::nullopt, Condition::Yes};
    }
  }

  // No1: an oscillating root with a nonzero block, strictly dominating every
  // positive real root (discrete) or every real root (continuous)
  std::optional<std::size_t> rival = spectrum.top_real();
  if (discrete) rival = rho;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const bool oscillates = !boxes[i].real || (discrete && real_value(boxes[i]).sign() < 0);
    if (!oscillates || !spectrum.supported(i)) continue;
    if (rival && spectrum.compare_size(i, *rival) <= 0) continue;
    out.values.no1 = true;
    out.no1 = {std::nullopt, boxes[i], std::nullopt, spectrum.quotient(), Condition::No1};
    break;
  }

  // No2: the largest real root's leading coefficient is negative
  if (rho && num_sign == -1) {
    out.values.no2 = true;
    out.no2 = {rho_value, std::nullopt, num_sign, std::nullopt, Condition::No2};
  }

  if (out.values.yes && (out.values.no1 || out.values.no2)) {
    throw std::logic_error("robust YES and robust NO conditions hold simultaneously");
  }
  return out;
}

Verdict verdict_from(Evaluation e) {
  if (e.values.yes) return {VerdictKind::RobustYes, std::move(e.yes)};
  if (e.values.no1) return {VerdictKind::RobustNo, std::move(e.no1)};
  if (e.values.no2) return {VerdictKind::RobustNo, std::move(e.no2)};
  return {VerdictKind::NonRobust, Witness{}};
}

}  // namespace

Verdict classify_discrete(const Instance& inst) {
  require_mode(inst, Mode::Discrete);
  return verdict_from(evaluate(inst));
}

Verdict classify_continuous(const Instance& inst) {
  require_mode(inst, Mode::Continuous);
  return verdict_from(evaluate(inst));
}

Verdict classify(const Instance& inst) {
  return inst.mode() == Mode::Discrete ? classify_discrete(inst) : classify_continuous(inst);
}

ConditionValues evaluate_conditions(const Instance& inst) { return evaluate(inst).values; }

}  // namespace rup
