#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "aa/io.hpp"
#include "json.hpp"

namespace aa::cli {

namespace {

struct RunConfig {
  double theta = 0.25 * kPi;
  double omega_a = 500.0;
  double omega_b = 300.0;
  double j = 1.0;
  std::optional<double> frame;  // defaults to omega_a - j
  std::string pulse_model = "instant";
  double rf = 100.0;
  std::string accounting = "control-frame";
  int samples = 2000;
  long long seed = 0;
  std::string out;
  std::string format;
  std::string state = "plus";
  std::string control = "up";
  std::string param = "theta";
  std::string grid;
  std::string separations;
  bool degrees = false;
};

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    double v;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidParams, "cannot parse grid value '" + item + "'");
    }
    if (pos != item.size())
      fail(ErrorKind::InvalidParams, "cannot parse grid value '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) fail(ErrorKind::InvalidParams, "empty grid");
  return values;
}

SpinPairParams make_params(const RunConfig& cfg) {
  const double frame = cfg.frame ? *cfg.frame : cfg.omega_a - cfg.j;
  return SpinPairParams::make(cfg.omega_a, cfg.omega_b, cfg.j, frame);
}

PulseModel make_model(const RunConfig& cfg) {
  if (cfg.pulse_model == "instant") return PulseModel::instantaneous();
  if (cfg.pulse_model == "hard") return PulseModel::hard(cfg.rf);
  fail(ErrorKind::InvalidParams, "pulse-model must be instant or hard");
}

Accounting make_accounting(const RunConfig& cfg) {
  if (cfg.accounting == "control-frame") return Accounting::control_frame;
  if (cfg.accounting == "physical") return Accounting::physical;
  fail(ErrorKind::InvalidParams, "accounting must be control-frame or physical");
}

StateVector make_state(const std::string& name) {
  if (name == "plus") return StateVector::plus();
  if (name == "minus") return StateVector::minus();
  if (name == "up") return StateVector::up();
  if (name == "down") return StateVector::down();
  fail(ErrorKind::InvalidParams, "state must be plus, minus, up or down");
}

void check_format(const RunConfig& cfg, const char* expected) {
  if (!cfg.format.empty() && cfg.format != expected)
    fail(ErrorKind::InvalidParams,
         std::string("this command emits ") + expected + " output only");
}

// Reports are written whole: either to stdout or to a temp file renamed into
// place, so failures never leave partial files behind.
void emit(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.out.empty() || cfg.out == "-") {
    out << payload;
    return;
  }
  const std::filesystem::path target(cfg.out);
  const std::filesystem::path tmp(cfg.out + ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) fail(ErrorKind::InvalidParams, "cannot open output file " + tmp.string());
    f << payload;
    if (!f.good()) {
      f.close();
      std::filesystem::remove(tmp);
      fail(ErrorKind::InvalidParams, "failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target);
}

Schedule realize_branch(const PulseSequence& seq, const SpinPairParams& p, ControlState b,
                        Accounting acc) {
  return acc == Accounting::control_frame ? realize_control_frame(seq, p, b)
                                          : realize_rotating(seq, p, b);
}

int cmd_gate(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, "json");
  const SpinPairParams p = make_params(cfg);
  GateReport report = gate_propagator(cfg.theta, p, make_model(cfg), make_accounting(cfg));
  report = cnot_equivalence(report);
  if (unitarity_defect(report.propagator) > 1e-9)
    fail(ErrorKind::NonUnitaryInput, "propagator unitarity defect above threshold");
  emit(cfg, gate_report_json(report) + "\n", out);
  return 0;
}

int cmd_phases(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, "json");
  const SpinPairParams p = make_params(cfg);
  const PulseSequence seq = aa_cnot_sequence(cfg.theta, p, make_model(cfg));
  const Schedule sched = realize_branch(seq, p, ControlState::up, make_accounting(cfg));
  const Trajectory traj = propagate(sched, make_state(cfg.state), cfg.samples);
  const PhaseReport report = aa_phase(traj, sched);
  emit(cfg, phase_report_json(report) + "\n", out);
  return 0;
}

int cmd_trajectory(const RunConfig& cfg, std::ostream& out) {
  check_format(cfg, "csv");
  const SpinPairParams p = make_params(cfg);
  const ControlState b = cfg.control == "down" ? ControlState::down : ControlState::up;
  const PulseSequence seq = aa_cnot_sequence(cfg.theta, p, make_model(cfg));
  const Schedule sched = realize_branch(seq, p, b, make_accounting(cfg));
  const Trajectory traj = propagate(sched, make_state(cfg.state), cfg.samples);
  emit(cfg, trajectory_csv(traj), out);
  return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.format.empty() && cfg.format != "csv" && cfg.format != "json")
    fail(ErrorKind::InvalidParams, "format must be csv or json");
  const SpinPairParams p = make_params(cfg);
  SweepSpec spec;
  spec.perturbation_seed = cfg.seed;
  if (cfg.param == "theta")
    spec.parameter = SweepSpec::Parameter::theta;
  else if (cfg.param == "j")
    spec.parameter = SweepSpec::Parameter::j_coupling;
  else if (cfg.param == "tau_error")
    spec.parameter = SweepSpec::Parameter::tau_error;
  else if (cfg.param == "angle_error")
    spec.parameter = SweepSpec::Parameter::angle_error;
  else if (cfg.param == "rf")
    spec.parameter = SweepSpec::Parameter::rf_amplitude;
  else
    fail(ErrorKind::InvalidParams,
         "param must be one of theta, j, tau_error, angle_error, rf");
  spec.grid = parse_grid(cfg.grid);
  if (cfg.degrees &&
      (spec.parameter == SweepSpec::Parameter::theta ||
       spec.parameter == SweepSpec::Parameter::angle_error)) {
    for (double& v : spec.grid) v *= kPi / 180.0;
  }
  const auto rows = robustness_sweep(cfg.theta, p, spec);
  emit(cfg, cfg.format == "json" ? sweep_json(rows) + "\n" : sweep_csv(rows), out);
  return 0;
}

int cmd_selectivity(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.format.empty() && cfg.format != "csv" && cfg.format != "json")
    fail(ErrorKind::InvalidParams, "format must be csv or json");
  const SpinPairParams p = make_params(cfg);
  const std::vector<double> seps = parse_grid(cfg.separations);
  const auto rows = selectivity_experiment(p, cfg.rf, seps, cfg.theta);
  emit(cfg, cfg.format == "json" ? selectivity_json(rows) + "\n" : selectivity_csv(rows), out);
  return 0;
}

// Overlay config-file values (same keys as the long flags) before CLI11
// parses the command line, so flags override the file.
void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::InvalidParams, "cannot read config file " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidParams, std::string("config file: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorKind::InvalidParams, "config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "theta") cfg.theta = value.get<double>();
      else if (key == "omega-a") cfg.omega_a = value.get<double>();
      else if (key == "omega-b") cfg.omega_b = value.get<double>();
      else if (key == "j") cfg.j = value.get<double>();
      else if (key == "frame") cfg.frame = value.get<double>();
      else if (key == "pulse-model") cfg.pulse_model = value.get<std::string>();
      else if (key == "rf") cfg.rf = value.get<double>();
      else if (key == "accounting") cfg.accounting = value.get<std::string>();
      else if (key == "samples") cfg.samples = value.get<int>();
      else if (key == "seed") cfg.seed = value.get<long long>();
      else if (key == "out") cfg.out = value.get<std::string>();
      else if (key == "format") cfg.format = value.get<std::string>();
      else if (key == "state") cfg.state = value.get<std::string>();
      else if (key == "control") cfg.control = value.get<std::string>();
      else if (key == "param") cfg.param = value.get<std::string>();
      else if (key == "grid") cfg.grid = value.get<std::string>();
      else if (key == "separations") cfg.separations = value.get<std::string>();
      else if (key == "degrees") cfg.degrees = value.get<bool>();
      else fail(ErrorKind::InvalidParams, "unknown config key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::InvalidParams, "config key '" + key + "': " + e.what());
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;

  try {
    // --config applies first so every flag can override it.
    for (size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config") {
        if (i + 1 >= args.size())
          fail(ErrorKind::InvalidParams, "--config needs a file argument");
        apply_config_file(cfg, args[i + 1]);
      }
    }

    CLI::App app{"Conditional geometric-phase gate simulator for a coupled spin pair"};
    app.require_subcommand(1);
    std::string config_path;  // consumed above; registered so CLI11 accepts it

    const auto add_shared = [&](CLI::App* sub) {
      sub->add_option("--theta", cfg.theta, "Scheme angle theta (radians, [0, pi/2))");
      sub->add_option("--j", cfg.j, "Scalar coupling J (rad/s)");
      sub->add_option("--omega-a", cfg.omega_a, "Resonance frequency of spin a (rad/s)");
      sub->add_option("--omega-b", cfg.omega_b, "Resonance frequency of spin b (rad/s)");
      sub->add_option("--frame", cfg.frame, "Rotating-frame frequency (default omega_a - J)");
      sub->add_option("--pulse-model", cfg.pulse_model, "instant | hard");
      sub->add_option("--rf", cfg.rf, "Hard-pulse rf amplitude (rad/s)");
      sub->add_option("--accounting", cfg.accounting, "control-frame | physical");
      sub->add_option("--samples", cfg.samples, "Samples per schedule segment")
          ->check(CLI::Range(2, 100000000));
      sub->add_option("--seed", cfg.seed, "Perturbation seed for sweeps");
      sub->add_option("--out", cfg.out, "Output file (default stdout)");
      sub->add_option("--format", cfg.format, "json | csv (per-command default)");
      sub->add_option("--config", config_path, "JSON config file, same keys as flags");
      sub->add_flag("--degrees", cfg.degrees, "Interpret theta and angle grids in degrees");
    };

    CLI::App* gate = app.add_subcommand("gate", "Conditional gate report (JSON)");
    add_shared(gate);
    CLI::App* phases = app.add_subcommand("phases", "Phase decomposition of one input state (JSON)");
    add_shared(phases);
    phases->add_option("--state", cfg.state, "plus | minus | up | down");
    CLI::App* trajectory =
        app.add_subcommand("trajectory", "Time-sampled Bloch trajectory (CSV)");
    add_shared(trajectory);
    trajectory->add_option("--state", cfg.state, "plus | minus | up | down");
    trajectory->add_option("--control", cfg.control, "Control branch: up | down");
    CLI::App* sweep = app.add_subcommand("sweep", "Perturbation sweep table (CSV)");
    add_shared(sweep);
    sweep->add_option("--param", cfg.param, "theta | j | tau_error | angle_error | rf");
    sweep->add_option("--grid", cfg.grid, "Comma-separated grid values");
    CLI::App* selectivity =
        app.add_subcommand("selectivity", "Control-disturbance vs frequency separation (CSV)");
    add_shared(selectivity);
    selectivity->add_option("--separations", cfg.separations,
                            "Comma-separated omega_b - frame offsets (rad/s)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }

    if (cfg.degrees) cfg.theta *= kPi / 180.0;

    if (gate->parsed()) return cmd_gate(cfg, out);
    if (phases->parsed()) return cmd_phases(cfg, out);
    if (trajectory->parsed()) return cmd_trajectory(cfg, out);
    if (sweep->parsed()) return cmd_sweep(cfg, out);
    if (selectivity->parsed()) return cmd_selectivity(cfg, out);
    err << "error: no subcommand\n";
    return 1;
  } catch (const SimError& e) {
    err << "error: " << e.what() << "\n";
    return is_validation_error(e.kind()) ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace aa::cli
