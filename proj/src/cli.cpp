#include "selfenergy/cli.hpp"
#include "selfenergy/config.hpp"
#include "selfenergy/error.hpp"
#include "selfenergy/format.hpp"
#include "selfenergy/report.hpp"
#include "selfenergy/validation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <memory>
#include <sstream>

namespace selfenergy::cli {

namespace {

struct FlagInfo {
  std::string flag; // without dashes
  std::string key;  // config key
  std::string help;
};

const std::vector<FlagInfo> value_flags = {
    {"model", "model", "mirror | nondisp | plasma | lorentz | damped_drude"},
    {"n", "n", "refractive index (> 1)"},
    {"omega-p", "omega_p", "plasma frequency (1/length)"},
    {"omega-t", "omega_t", "restoring frequency (1/length)"},
    {"gamma", "gamma", "damping rate (1/length)"},
    {"d", "d", "electron-surface distance (default 1)"},
    {"p2-par", "p2_par", "<p_x^2 + p_y^2> (default 1)"},
    {"p2-perp", "p2_perp", "<p_z^2> (default 1)"},
    {"e2", "e2", "squared charge (default 1)"},
    {"mass", "mass", "electron mass (default 1)"},
    {"tol", "tol", "relative quadrature tolerance in (0, 1e-3], default 1e-10"},
    {"out", "out", "write CSV here instead of stdout"},
    {"grid", "grid", "min:max:count[:log|lin]"},
    {"param", "param", "swept parameter: d | n | omega_p | omega_t | gamma"}};

struct Flags {
  std::map<std::string, std::string> values;
  std::string config_path;
};

void add_flags(CLI::App &cmd, Flags &flags) {
  for (const auto &[flag, key, help] : value_flags) {
    const std::string name = (flag.size() == 1 ? "-" : "--") + flag;
    cmd.add_option(name == "-n" ? "-n,--n" : name == "-d" ? "-d,--d" : name,
                   flags.values[key], help);
  }
  cmd.add_option("--config", flags.config_path, "key=value file; flags override it");
}

KeyValues collect(const CLI::App &cmd, const Flags &flags) {
  KeyValues kv;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in)
      throw Error(ErrorKind::ParseError, "cannot read config " + flags.config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    kv = parse_key_values(buf.str());
  }
  KeyValues overrides;
  for (const auto &[flag, key, help] : value_flags) {
    const std::string name = (flag.size() == 1 ? "-" : "--") + flag;
    if (cmd.count(name) > 0)
      overrides[key] = flags.values.at(key);
  }
  return merge(std::move(kv), overrides);
}

void emit(const RunConfig &cfg, const std::string &text, std::ostream &out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f)
    throw Error(ErrorKind::ParseError, "cannot write " + cfg.out);
  f << text;
}

report::Metadata shift_metadata(const RunConfig &cfg) {
  const DielectricModel &m = *cfg.model;
  return {{"model=" + m.name() + (m.params_string().empty() ? "" : " ") +
               m.params_string(),
           "tol=" + format_double(cfg.tol),
           "p2_par=" + format_double(cfg.moments.p2_par) +
               " p2_perp=" + format_double(cfg.moments.p2_perp) +
               " e2=" + format_double(cfg.coupling.e2) +
               " mass=" + format_double(cfg.coupling.m)}};
}

RunConfig require_model(const KeyValues &kv) {
  RunConfig cfg = to_run_config(kv);
  if (!cfg.model)
    throw Error(ErrorKind::ParseError, "--model is required");
  return cfg;
}

int cmd_compute(const KeyValues &kv, std::ostream &out) {
  const RunConfig cfg = require_model(kv);
  const Geometry geometry(cfg.d);
  const ShiftResult r =
      energy_shift(*cfg.model, geometry, cfg.moments, cfg.coupling, cfg.tol);
  emit(cfg, report::compute_csv(shift_metadata(cfg), *cfg.model, geometry, r), out);
  return Ok;
}

int cmd_sweep(const KeyValues &kv, std::ostream &out) {
  const RunConfig cfg = require_model(kv);
  if (!cfg.grid)
    throw Error(ErrorKind::ParseError, "sweep needs --grid min:max:count[:log]");
  const auto param = sweep::parse_parameter(cfg.param.value_or("d"));
  const auto xs = sweep::parse_grid(*cfg.grid).points();
  const sweep::ShiftSpec base{*cfg.model, Geometry(cfg.d), cfg.moments,
                              cfg.coupling, cfg.tol, MethodRequest::Auto};
  const auto rows = sweep::shifts_parallel(base, param, xs);
  auto meta = shift_metadata(cfg);
  meta.lines.push_back("sweep " + sweep::to_string(param) + " over " + *cfg.grid);
  emit(cfg, report::sweep_csv(meta, base, param, xs, rows), out);
  return Ok;
}

int cmd_figure1(const KeyValues &kv, std::ostream &out) {
  const RunConfig cfg = to_run_config(kv);
  const double omega_t_d = cfg.omega_t.value_or(0.2) * cfg.d;
  const auto chi0 =
      sweep::parse_grid(cfg.grid.value_or(report::figure1_default_grid)).points();
  emit(cfg, report::figure1_csv(omega_t_d, chi0), out);
  return Ok;
}

int cmd_figure2(const KeyValues &kv, std::ostream &out) {
  const RunConfig cfg = to_run_config(kv);
  const auto wpd =
      sweep::parse_grid(cfg.grid.value_or(report::figure2_default_grid)).points();
  emit(cfg, report::figure2_csv(wpd, cfg.tol), out);
  return Ok;
}

int cmd_validate(const KeyValues &kv, double mode_sum_tol, std::ostream &out) {
  const RunConfig cfg = to_run_config(kv);
  validation::Options opts;
  opts.quad_tol = cfg.tol;
  opts.mode_sum_tol = mode_sum_tol;
  const auto results = validation::run_all(opts);
  std::ostringstream os;
  bool ok = true;
  for (const auto &r : results) {
    os << validation::format_line(r) << '\n';
    ok = ok && r.status == validation::Status::Pass;
  }
  os << "criterion,status,deviation,threshold,seconds\n";
  for (const auto &r : results)
    os << r.id << ',' << validation::to_string(r.status) << ','
       << format_double(r.deviation) << ',' << format_double(r.threshold) << ','
       << format_double(r.seconds) << '\n';
  emit(cfg, os.str(), out);
  return ok ? Ok : ValidationFailure;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Boundary-dependent self-energy of a free electron near a "
               "dielectric or conducting half-space",
               "selfenergy"};
  app.require_subcommand(1);

  Flags compute_f, sweep_f, fig1_f, fig2_f, validate_f;
  double mode_sum_tol = 1e-4;
  auto *compute = app.add_subcommand("compute", "geometry factors and shift for one model");
  auto *sweep = app.add_subcommand("sweep", "shift over a grid of one parameter");
  auto *fig1 = app.add_subcommand("figure1", "ratio curves vs static susceptibility");
  auto *fig2 = app.add_subcommand("figure2", "ratio curves vs omega_p d");
  auto *validate = app.add_subcommand("validate", "run the acceptance checks");
  add_flags(*compute, compute_f);
  add_flags(*sweep, sweep_f);
  add_flags(*fig1, fig1_f);
  add_flags(*fig2, fig2_f);
  add_flags(*validate, validate_f);
  validate->add_option("--mode-sum-tol", mode_sum_tol, "mode-sum tolerance (default 1e-4)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return ParseFailure;
  }

  try {
    if (compute->parsed()) return cmd_compute(collect(*compute, compute_f), out);
    if (sweep->parsed()) return cmd_sweep(collect(*sweep, sweep_f), out);
    if (fig1->parsed()) return cmd_figure1(collect(*fig1, fig1_f), out);
    if (fig2->parsed()) return cmd_figure2(collect(*fig2, fig2_f), out);
    return cmd_validate(collect(*validate, validate_f), mode_sum_tol, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
    case ErrorKind::IllDefinedModel: return IllDefined;
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument: return ParseFailure;
    default: return ComputationFailure;
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return ComputationFailure;
  }
}

} // namespace selfenergy::cli
