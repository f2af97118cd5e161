#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "output.hpp"
#include "qslip/bipartite.hpp"
#include "qslip/errors.hpp"
#include "qslip/semigroup.hpp"
#include "verify.hpp"

namespace qslip::cli {
namespace {

/// A long flag that may also be supplied by the JSON config file.
struct Flag {
  CLI::Option* option = nullptr;
  std::function<void(const Json&)> assign;
  bool from_config = false;

  bool given() const { return option->count() > 0 || from_config; }
};

struct Command {
  CLI::App* app = nullptr;
  std::map<std::string, Flag> flags;
  std::string config_path;
  std::string output_path;
  std::string format;

  void number(const std::string& name, double& target, const std::string& help) {
    auto* opt = app->add_option("--" + name, target, help);
    flags[name] = {opt, [&target, name](const Json& v) {
                     if (!v.is_number()) throw ValidationError("config key '" + name + "' must be a number");
                     target = v.get<double>();
                   }};
  }

  void integer(const std::string& name, long& target, const std::string& help) {
    auto* opt = app->add_option("--" + name, target, help);
    flags[name] = {opt, [&target, name](const Json& v) {
                     if (!v.is_number_integer()) throw ValidationError("config key '" + name + "' must be an integer");
                     target = v.get<long>();
                   }};
  }

  void text(const std::string& name, std::string& target, const std::string& help) {
    auto* opt = app->add_option("--" + name, target, help);
    flags[name] = {opt, [&target, name](const Json& v) {
                     if (!v.is_string()) throw ValidationError("config key '" + name + "' must be a string");
                     target = v.get<std::string>();
                   }};
  }

  void common(const std::string& default_format) {
    format = default_format;
    text("output", output_path, "Write results to this file instead of stdout");
    text("format", format, "Output format: csv or json");
    app->add_option("--config", config_path, "JSON file whose keys are long flag names; flags win");
  }

  bool given(const std::string& name) const { return flags.at(name).given(); }

  void require(const std::string& name) const {
    if (!given(name)) throw ValidationError("--" + name + " is required");
  }

  /// Fills every flag that was not given on the command line from the config file.
  void apply_config() {
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw ValidationError("cannot open config file " + config_path);
    Json cfg;
    try {
      cfg = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ValidationError("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!cfg.is_object()) throw ValidationError("config file must hold a JSON object");
    for (const auto& [key, value] : cfg.items()) {
      auto it = flags.find(key);
      if (it == flags.end()) throw ValidationError("unknown config key '" + key + "'");
      if (it->second.option->count() > 0) continue;
      it->second.assign(value);
      it->second.from_config = true;
    }
  }

  void check_format() const {
    if (format != "csv" && format != "json") throw ValidationError("--format must be csv or json");
  }
};

struct ModelFlags {
  double a = 0.0;
  double b = 0.0;
  double omega = 1.0;

  void add(Command& c) {
    c.number("a", a, "Dephasing rate a >= 0");
    c.number("b", b, "Off-diagonal rate b >= 0");
    c.number("omega", omega, "Frequency omega > b (default 1)");
  }

  ModelParams model(const Command& c) const {
    c.require("a");
    c.require("b");
    return ModelParams(a, b, omega);
  }
};

Json with_schema(Json body) {
  Json out{{"schema", 1}};
  for (auto& [key, value] : body.items()) out[key] = std::move(value);
  return out;
}

void emit_record(std::ostream& os, const Command& c, const Json& record) {
  if (c.format == "json")
    os << with_schema(record).dump(2) << '\n';
  else
    write_record_csv(os, record);
}

void emit_table(std::ostream& os, const Command& c, const Table& t) {
  if (c.format == "json")
    os << with_schema(table_json(t)).dump(2) << '\n';
  else
    write_csv(os, t);
}

double checked_time_span(double t_max) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ValidationError("--t-max must be finite and > 0");
  return t_max;
}

long checked_steps(long steps, long minimum) {
  if (steps < minimum) throw ValidationError("--steps must be >= " + std::to_string(minimum));
  return steps;
}

Json window_report_json(const WindowReport& r) {
  Json intervals = Json::array();
  for (const auto& iv : r.intervals) intervals.push_back(Json{{"t1", iv.t1}, {"t2", iv.t2}});
  return Json{{"t_bar", r.t_bar},
              {"intervals", std::move(intervals)},
              {"mu_upper_physical", r.mu_upper_physical},
              {"mu_upper_corrected", r.mu_upper_corrected},
              {"max_headroom", r.max_headroom ? Json(*r.max_headroom) : Json(nullptr)},
              {"kills_all_entanglement", r.kills_all_entanglement}};
}

/// Registers every subcommand; `handler` holds the action of the one selected.
class Cli {
 public:
  Cli() : app_("Dephasing-qubit semigroup, slippage and isotropic entanglement toolkit", "qslip") {
    app_.require_subcommand(1);
    app_.set_help_all_flag("--help-all", "Help for every subcommand");
    add_classify();
    add_derive_params();
    add_eigs();
    add_windows();
    add_bounds();
    add_verify();
    add_evolve();
  }

  CLI::App& app() { return app_; }

  /// Returns the exit code of the selected subcommand.
  int dispatch(std::ostream& out, std::ostream& err) {
    for (auto& [name, entry] : commands_) {
      if (!entry.command->app->parsed()) continue;
      Command& c = *entry.command;
      c.apply_config();
      c.check_format();
      std::ostringstream buffer;
      const int code = entry.action(buffer, err);
      if (c.output_path.empty()) {
        out << buffer.str();
      } else {
        std::ofstream file(c.output_path, std::ios::binary);
        if (!file) throw ValidationError("cannot write " + c.output_path);
        file << buffer.str();
      }
      return code;
    }
    return kInvalidInput;
  }

 private:
  struct Entry {
    std::unique_ptr<Command> command;
    std::function<int(std::ostream&, std::ostream&)> action;
  };

  Command& make(const std::string& name, const std::string& help, const std::string& default_format) {
    auto& e = commands_[name];
    e.command = std::make_unique<Command>();
    e.command->app = app_.add_subcommand(name, help);
    e.command->common(default_format);
    return *e.command;
  }

  void add_classify() {
    Command& c = make("classify", "Positivity class of the semigroup", "json");
    c.number("a", cls_.a, "Dephasing rate a >= 0");
    c.number("b", cls_.b, "Off-diagonal rate b");
    c.number("omega", cls_.omega, "Frequency omega > |b| (default 1)");
    commands_["classify"].action = [this, &c](std::ostream& os, std::ostream&) {
      c.require("a");
      c.require("b");
      const Classification tag = classify(cls_.a, cls_.b, cls_.omega);
      emit_record(os, c,
                  Json{{"tag", std::string(to_string(tag))},
                       {"a", cls_.a},
                       {"b", cls_.b},
                       {"omega", cls_.omega},
                       {"a2_minus_b2", cls_.a * cls_.a - cls_.b * cls_.b}});
      return kOk;
    };
  }

  void add_derive_params() {
    Command& c = make("derive-params", "Model rates from stochastic-field constants", "json");
    c.number("g1", field_.G1, "Transverse field strength G1");
    c.number("g2", field_.G2, "Transverse field strength G2 < G1");
    c.number("g3", field_.G3, "Longitudinal field strength G3");
    c.number("lambda", field_.lambda, "Transverse correlation rate");
    c.number("lambda3", field_.lambda3, "Longitudinal correlation rate");
    c.number("omega-tilde", field_.omega_tilde, "Bare frequency");
    commands_["derive-params"].action = [this, &c](std::ostream& os, std::ostream&) {
      for (const char* name : {"g1", "g2", "g3", "lambda", "lambda3", "omega-tilde"}) c.require(name);
      const DerivedParams d = derive_params(field_);
      Json record{{"omega", d.omega}, {"alpha1", d.alpha1}, {"alpha2", d.alpha2},
                  {"a", d.a},         {"b_raw", d.b_raw},   {"b", std::abs(d.b_raw)}};
      record["tag"] = std::string(to_string(classify(d.a, d.b_raw, d.omega)));
      emit_record(os, c, record);
      return kOk;
    };
  }

  void add_eigs() {
    Command& c = make("eigs", "Spectrum and concurrence of the evolved isotropic state", "csv");
    eigs_model_.add(c);
    c.number("mu", eigs_mu_, "Isotropic weight mu in [0, 1]");
    c.number("t-max", eigs_t_max_, "Time horizon (default 5)");
    c.integer("steps", eigs_steps_, "Number of time steps (default 1000)");
    commands_["eigs"].action = [this, &c](std::ostream& os, std::ostream&) {
      const ModelParams p = eigs_model_.model(c);
      c.require("mu");
      isotropic(eigs_mu_);
      const double t_max = checked_time_span(eigs_t_max_);
      const long steps = checked_steps(eigs_steps_, 1);
      const bool always_valid = eigs_mu_ <= positivity_bound(p);
      Table t{{"t", "e1", "e2", "e3", "e4", "concurrence"}, {}};
      for (long k = 0; k <= steps; ++k) {
        const double time = t_max * static_cast<double>(k) / static_cast<double>(steps);
        const auto e = eigenvalues_closed_form(p, eigs_mu_, time);
        Cell conc;
        if (always_valid)
          conc = concurrence_closed_form(p, eigs_mu_, time);
        else if (std::min({e[0], e[1], e[2], e[3]}) >= -1e-12)
          conc = concurrence_wootters(evolve_isotropic(p, eigs_mu_, time));
        t.rows.push_back({time, e[0], e[1], e[2], e[3], conc});
      }
      emit_table(os, c, t);
      return kOk;
    };
  }

  void add_windows() {
    Command& c = make("windows", "Entanglement-creation window functions and report", "csv");
    win_model_.add(c);
    c.number("t-max", win_t_max_, "Offset horizon past t_bar (default pi/Omega)");
    c.integer("steps", win_steps_, "Number of grid points (default 4000)");
    commands_["windows"].action = [this, &c](std::ostream& os, std::ostream&) {
      const ModelParams p = win_model_.model(c);
      const double horizon = c.given("t-max") ? checked_time_span(win_t_max_) : std::numbers::pi / p.Omega();
      const long steps = checked_steps(win_steps_, 2);
      const double h = horizon / static_cast<double>(steps - 1);
      const WindowReport report = detect_windows(p, horizon, h);
      Table t{{"t_offset", "f", "g", "headroom"}, {}};
      for (long k = 0; k < steps; ++k) {
        const double offset = std::min(horizon, h * static_cast<double>(k));
        const WindowSample w = window_functions(p, offset);
        t.rows.push_back({offset, w.f, w.g, w.headroom});
      }
      if (c.format == "json") {
        Json body = table_json(t);
        body["report"] = window_report_json(report);
        os << with_schema(std::move(body)).dump(2) << '\n';
      } else {
        write_csv(os, t);
        os << "# report " << with_schema(window_report_json(report)).dump() << '\n';
      }
      return kOk;
    };
  }

  void add_bounds() {
    Command& c = make("bounds", "Norm bound, critical radius and corrected slippage bound", "json");
    bounds_model_.add(c);
    commands_["bounds"].action = [this, &c](std::ostream& os, std::ostream&) {
      const ModelParams p = bounds_model_.model(c);
      const NormBound nb = norm_bound_max(p);
      const R4Max r4 = r4_max(p);
      const RateFactorMax g = concurrence_rate_max(p);
      const WindowReport w = detect_windows(p);
      emit_record(os, c,
                  Json{{"tag", std::string(to_string(classify(p)))},
                       {"R", nb.R},
                       {"t_prime", nb.t_prime},
                       {"R4", r4.R4},
                       {"t_star", r4.t_star},
                       {"R4_inv", positivity_bound(p)},
                       {"G", g.G},
                       {"t_bar", g.t_bar},
                       {"can_create_entanglement", can_create_entanglement(p)},
                       {"mu_corrected", w.mu_upper_corrected},
                       {"kills_all_entanglement", w.kills_all_entanglement}});
      return kOk;
    };
  }

  void add_verify() {
    Command& c = make("verify", "Cross-check every closed form against the numerical references", "csv");
    verify_model_.add(c);
    c.number("mu", verify_mu_, "Isotropic weight mu in [0, 1]");
    c.number("tol", verify_tol_.algebraic, "Tolerance of the algebraic checks (default 1e-10)");
    c.number("ode-tol", verify_tol_.ode, "Tolerance of the RK4 checks (default 1e-8)");
    commands_["verify"].action = [this, &c](std::ostream& os, std::ostream& err) {
      const ModelParams p = verify_model_.model(c);
      c.require("mu");
      if (!(verify_tol_.algebraic > 0.0) || !(verify_tol_.ode > 0.0))
        throw ValidationError("tolerances must be > 0");
      const auto results = run_checks(p, verify_mu_, verify_tol_);
      Table t{{"check", "deviation", "tolerance", "result"}, {}};
      bool ok = true;
      for (const auto& r : results) {
        t.rows.push_back({r.name, r.deviation, r.tolerance, std::string(r.passed ? "PASS" : "FAIL")});
        if (!r.passed) {
          ok = false;
          err << "verify: check " << r.name << " failed (deviation " << format_number(r.deviation) << " > "
              << format_number(r.tolerance) << ")\n";
        }
      }
      emit_table(os, c, t);
      return ok ? kOk : kVerifyFailed;
    };
  }

  void add_evolve() {
    Command& c = make("evolve", "Bloch-vector trajectory under the semigroup", "csv");
    evolve_model_.add(c);
    c.number("r1", r0_.r1, "Initial Bloch component r1 (default 1)");
    c.number("r2", r0_.r2, "Initial Bloch component r2 (default 0)");
    c.number("r3", r0_.r3, "Initial Bloch component r3 (default 0)");
    c.number("t-max", evolve_t_max_, "Time horizon (default 5)");
    c.integer("steps", evolve_steps_, "Number of time steps (default 1000)");
    commands_["evolve"].action = [this, &c](std::ostream& os, std::ostream&) {
      const ModelParams p = evolve_model_.model(c);
      if (!r0_.is_state()) throw ValidationError("initial Bloch vector must satisfy |r| <= 1");
      const double t_max = checked_time_span(evolve_t_max_);
      const long steps = checked_steps(evolve_steps_, 1);
      Table t{{"t", "r1", "r2", "r3", "norm"}, {}};
      for (long k = 0; k <= steps; ++k) {
        const double time = t_max * static_cast<double>(k) / static_cast<double>(steps);
        const BlochVector r = propagate(p, r0_, time);
        t.rows.push_back({time, r.r1, r.r2, r.r3, r.norm()});
      }
      emit_table(os, c, t);
      return kOk;
    };
  }

  CLI::App app_;
  std::map<std::string, Entry> commands_;

  struct {
    double a = 0.0, b = 0.0, omega = 1.0;
  } cls_;
  StochasticFieldParams field_;
  ModelFlags eigs_model_;
  double eigs_mu_ = 0.0;
  double eigs_t_max_ = 5.0;
  long eigs_steps_ = 1000;
  ModelFlags win_model_;
  double win_t_max_ = 0.0;
  long win_steps_ = 4000;
  ModelFlags bounds_model_;
  ModelFlags verify_model_;
  double verify_mu_ = 0.0;
  VerifyTolerances verify_tol_;
  ModelFlags evolve_model_;
  BlochVector r0_{1.0, 0.0, 0.0};
  double evolve_t_max_ = 5.0;
  long evolve_steps_ = 1000;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    cli.app().parse(reversed);
  } catch (const CLI::CallForAllHelp& e) {
    return cli.app().exit(e, out, err);
  } catch (const CLI::CallForHelp& e) {
    return cli.app().exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    cli.app().exit(e, out, err);
    return kInvalidInput;
  }
  try {
    return cli.dispatch(out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace qslip::cli
