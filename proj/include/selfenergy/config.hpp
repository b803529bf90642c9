#pragma once

// key=value run configuration shared by the CLI flags and config files.

#include "selfenergy/dielectric.hpp"
#include "selfenergy/shift_engine.hpp"

#include <map>
#include <optional>
#include <string>

namespace selfenergy {

/// Raw key/value pairs; keys use underscores (omega_p, p2_par, ...).
using KeyValues = std::map<std::string, std::string>;

/// Parse whitespace/newline separated key=value tokens. Blank lines and
/// '#' comments are ignored. Throws ParseError.
KeyValues parse_key_values(const std::string &text);

/// Later entries override earlier ones.
KeyValues merge(KeyValues base, const KeyValues &overrides);

struct RunConfig {
  std::optional<DielectricModel> model;
  double d = 1.0;
  MomentumMoments moments{1.0, 1.0};
  Coupling coupling{};
  double tol = default_tolerance;
  std::string out;
  std::optional<std::string> grid;
  std::optional<std::string> param;
  std::optional<double> n, omega_p, omega_t, gamma;
};

/// Validates ranges and builds the model. Throws ParseError (bad syntax,
/// unknown key, missing parameter) or InvalidArgument (out of range).
RunConfig to_run_config(const KeyValues &kv);

DielectricModel parse_model(const std::string &spec);

} // namespace selfenergy
