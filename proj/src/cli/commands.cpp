#include "rup/cli/commands.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "rup/cli/report.hpp"
#include "rup/emitter/emitter.hpp"
#include "rup/errors.hpp"
#include "rup/lds/simulate.hpp"
#include "rup/oracle/perturbation.hpp"
#include "rup/transform/transform.hpp"

namespace rup::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Instance> load(const std::string& path) {
  try {
    return parse_instances(read_file(path));
  } catch (const ParseError& e) {
    if (e.path() == path) throw;
    throw ParseError(path + (e.path().empty() ? "" : ":" + e.path()), e.what());
  }
}

Instance load_one(const std::string& path) {
  auto all = load(path);
  if (all.size() != 1) throw ParseError(path, "expected a single instance");
  return std::move(all.front());
}

Rational rational_flag(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(flag, e.what());
  }
}

std::vector<Verdict> classify_all(const std::vector<Instance>& instances, unsigned jobs) {
  std::vector<std::optional<Verdict>> verdicts(instances.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        verdicts[i] = classify(instances[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(instances.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<Verdict> out;
  for (auto& v : verdicts) out.push_back(std::move(*v));
  return out;
}

int cmd_classify(const std::vector<std::string>& files, unsigned jobs, std::ostream& out) {
  std::vector<Instance> instances;
  for (const auto& f : files) {
    auto batch = load(f);
    instances.insert(instances.end(), batch.begin(), batch.end());
  }
  const auto verdicts = classify_all(instances, jobs);
  if (instances.size() == 1) {
    out << report_to_json(make_report(instances[0], verdicts[0])).dump(2) << "\n";
    return kOk;
  }
  json all = json::array();
  for (std::size_t i = 0; i < instances.size(); ++i) all.push_back(report_to_json(make_report(instances[i], verdicts[i])));
  out << all.dump(2) << "\n";
  return kOk;
}

std::vector<Rational> parse_times(const std::string& text) {
  std::vector<Rational> times;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) times.push_back(rational_flag(item, "--times"));
  return times;
}

int cmd_simulate(const std::string& file, long steps, const std::string& dt_text, const std::string& times_text,
                 const std::string& tol_text, std::ostream& out) {
  const Instance inst = load_one(file);
  if (inst.mode() == Mode::Discrete) {
    if (!times_text.empty()) throw ParseError("--times", "only meaningful for continuous instances");
    out << "n,value\n";
    for (const auto& p : simulate_discrete(inst, static_cast<int>(steps) - 1).samples) {
      out << to_string(p.at) << "," << to_string(p.value) << "\n";
    }
    return kOk;
  }
  std::vector<Rational> times;
  if (!times_text.empty()) {
    times = parse_times(times_text);
  } else {
    const Rational dt = rational_flag(dt_text, "--dt");
    for (long i = 0; i < steps; ++i) times.push_back(dt * i);
  }
  const Rational tol = tol_text.empty() ? kDefaultTolerance : rational_flag(tol_text, "--tol");
  const auto traj = simulate_continuous(inst, times, tol);
  out << "t,value,error_bound\n";
  out.precision(17);
  for (const auto& p : traj.samples) {
    out << to_string(p.at) << "," << p.value.get_d() << "," << p.error_bound << "\n";
  }
  return kOk;
}

// Discrete: psi/chi = sum u[n] z^-n. Continuous: phi/chi = sum u^(n)(0) z^-(n+1),
// and the derivatives at 0 obey the same recurrence as a sequence.
int cmd_series(const std::string& file, std::size_t terms, std::ostream& out) {
  const Instance inst = load_one(file);
  const bool discrete = inst.mode() == Mode::Discrete;
  const auto series = series_expand(transform_numerator(inst), characteristic_poly(inst), terms + (discrete ? 0 : 1));
  const auto direct = discrete_terms(Instance(Mode::Discrete, inst.coefficients(), inst.initial()), terms);
  out << (discrete ? "n,series,simulated,match\n" : "n,series,derivative,match\n");
  for (std::size_t n = 0; n < terms; ++n) {
    const Rational& s = series[discrete ? n : n + 1];
    out << n << "," << to_string(s) << "," << to_string(direct[n]) << "," << (s == direct[n] ? "true" : "false")
        << "\n";
  }
  return kOk;
}

int cmd_emit(const std::string& file, const std::string& formula, bool parametric, std::ostream& out) {
  const Instance inst = load_one(file);
  const auto sys = parametric ? fo::parametric_system(inst.mode(), inst.order()) : fo::instantiated_system(inst);
  out << (formula == "yes" ? fo::emit_robust_yes(sys) : fo::emit_robust_no(sys));
  return kOk;
}

int cmd_sample(const std::string& file, const std::string& eps_text, long count, std::uint64_t seed, long horizon,
               long window, unsigned jobs, std::ostream& out) {
  const Instance inst = load_one(file);
  const Rational eps = rational_flag(eps_text, "--epsilon");
  if (eps <= 0) throw ParseError("--epsilon", "must be positive");
  const auto sample = sample_perturbations(inst, eps, count, seed);
  const auto base = classify(inst);
  const auto verdicts = classify_all(sample.instances, jobs);
  json samples = json::array();
  std::map<std::string, int> tally;
  for (std::size_t i = 0; i < sample.instances.size(); ++i) {
    const auto emp = empirical_up(sample.instances[i], horizon, window);
    ++tally[std::string(to_string(emp))];
    samples.push_back({{"instance", instance_to_json(sample.instances[i])},
                       {"corner", i < 4 * inst.order()},
                       {"verdict", std::string(to_string(verdicts[i].kind))},
                       {"empirical_up", std::string(to_string(emp))}});
  }
  json report{{"base", report_to_json(make_report(inst, base))},
              {"epsilon", to_string(eps)},
              {"seed", seed},
              {"horizon", horizon},
              {"window", window},
              {"empirical_up_counts", tally},
              {"samples", samples}};
  out << report.dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust ultimate positivity for linear recurrences and linear ODEs", "robustup"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string file;
  unsigned jobs = 1;
  long steps = 10;
  std::string dt = "1/10";
  std::string times;
  std::string tol;
  std::size_t terms = 20;
  std::string formula = "yes";
  bool parametric = false;
  std::string epsilon = "1/100000000";
  long count = 16;
  std::uint64_t seed = 1;
  long horizon = 2000;
  long window = 100;

  auto* classify_cmd = app.add_subcommand("classify", "classify instances, print verdict report JSON");
  classify_cmd->add_option("files", files, "instance files (object or array)")->required();
  classify_cmd->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);

  auto* simulate_cmd = app.add_subcommand("simulate", "print a trajectory as CSV");
  simulate_cmd->add_option("file", file)->required();
  simulate_cmd->add_option("--steps", steps, "number of samples")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--dt", dt, "time step for continuous instances");
  simulate_cmd->add_option("--times", times, "comma-separated sample times");
  simulate_cmd->add_option("--tol", tol, "absolute error tolerance");

  auto* series_cmd = app.add_subcommand("series", "transform series coefficients against direct values, CSV");
  series_cmd->add_option("file", file)->required();
  series_cmd->add_option("--terms", terms)->check(CLI::PositiveNumber);

  auto* emit_cmd = app.add_subcommand("emit-smt", "print the SMT-LIB script of a robust formula");
  emit_cmd->add_option("file", file)->required();
  emit_cmd->add_option("--formula", formula)->check(CLI::IsMember({"yes", "no"}));
  emit_cmd->add_flag("--parametric", parametric, "leave c and v as free constants");

  auto* sample_cmd = app.add_subcommand("sample", "perturbation sampling report, JSON");
  sample_cmd->add_option("file", file)->required();
  sample_cmd->add_option("--epsilon", epsilon);
  sample_cmd->add_option("--count", count, "random samples besides the axis corners")->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--seed", seed);
  sample_cmd->add_option("--horizon", horizon);
  sample_cmd->add_option("--window", window);
  sample_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "robustup: " << e.what() << "\n" << app.help();
    return kParseError;
  }

  try {
    if (*classify_cmd) return cmd_classify(files, jobs, out);
    if (*simulate_cmd) return cmd_simulate(file, steps, dt, times, tol, out);
    if (*series_cmd) return cmd_series(file, terms, out);
    if (*emit_cmd) return cmd_emit(file, formula, parametric, out);
    if (*sample_cmd) return cmd_sample(file, epsilon, count, seed, horizon, window, jobs, out);
  } catch (const ParseError& e) {
    err << "robustup: parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "robustup: " << e.what() << "\n";
    return kInternalError;
  }
  return kParseError;
}

}  // namespace rup::cli
