#include "selfenergy/config.hpp"
#include "selfenergy/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace selfenergy {

namespace {

const std::set<std::string> known_keys = {
    "model", "n",    "omega_p", "omega_t", "gamma", "d",    "p2_par",
    "p2_perp", "e2", "mass",    "tol",     "out",   "grid", "param"};

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

double to_number(const std::string &key, const std::string &value) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(value, &used);
  } catch (const std::logic_error &) {
    used = 0;
  }
  if (used == 0 || used != value.size())
    throw Error(ErrorKind::ParseError,
                "value of '" + key + "' is not a number: '" + value + "'");
  return x;
}

std::optional<double> number(const KeyValues &kv, const std::string &key) {
  const auto it = kv.find(key);
  if (it == kv.end())
    return std::nullopt;
  return to_number(key, it->second);
}

double need(const std::optional<double> &v, const std::string &model,
            const std::string &key) {
  if (!v)
    throw Error(ErrorKind::ParseError, "model " + model + " needs " + key);
  return *v;
}

} // namespace

KeyValues parse_key_values(const std::string &text) {
  KeyValues kv;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream tokens(line);
    for (std::string tok; tokens >> tok;) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
        throw Error(ErrorKind::ParseError, "expected key=value, got '" + tok + "'");
      const std::string key = normalize_key(tok.substr(0, eq));
      if (!known_keys.count(key))
        throw Error(ErrorKind::ParseError, "unknown key '" + key + "'");
      kv[key] = tok.substr(eq + 1);
    }
  }
  return kv;
}

KeyValues merge(KeyValues base, const KeyValues &overrides) {
  for (const auto &[k, v] : overrides)
    base[k] = v;
  return base;
}

RunConfig to_run_config(const KeyValues &kv) {
  RunConfig cfg;
  cfg.n = number(kv, "n");
  cfg.omega_p = number(kv, "omega_p");
  cfg.omega_t = number(kv, "omega_t");
  cfg.gamma = number(kv, "gamma");
  if (auto v = number(kv, "d")) cfg.d = *v;
  if (auto v = number(kv, "p2_par")) cfg.moments.p2_par = *v;
  if (auto v = number(kv, "p2_perp")) cfg.moments.p2_perp = *v;
  if (auto v = number(kv, "e2")) cfg.coupling.e2 = *v;
  if (auto v = number(kv, "mass")) cfg.coupling.m = *v;
  if (auto v = number(kv, "tol")) cfg.tol = *v;
  if (auto it = kv.find("out"); it != kv.end()) cfg.out = it->second;
  if (auto it = kv.find("grid"); it != kv.end()) cfg.grid = it->second;
  if (auto it = kv.find("param"); it != kv.end()) cfg.param = it->second;

  if (!(cfg.tol > 0.0 && cfg.tol <= 1e-3))
    throw Error(ErrorKind::InvalidArgument, "tol must lie in (0, 1e-3]");
  if (!(cfg.d > 0.0))
    throw Error(ErrorKind::InvalidArgument, "d must be positive");
  if (!(cfg.moments.p2_par >= 0.0) || !(cfg.moments.p2_perp >= 0.0))
    throw Error(ErrorKind::InvalidArgument, "momentum moments must be >= 0");
  if (!(cfg.coupling.e2 > 0.0) || !(cfg.coupling.m > 0.0))
    throw Error(ErrorKind::InvalidArgument, "e2 and mass must be positive");

  if (auto it = kv.find("model"); it != kv.end()) {
    const std::string &name = it->second;
    if (name == "mirror")
      cfg.model = DielectricModel::perfect_mirror();
    else if (name == "nondisp")
      cfg.model = DielectricModel::nondispersive(need(cfg.n, name, "n"));
    else if (name == "plasma")
      cfg.model = DielectricModel::plasma(need(cfg.omega_p, name, "omega_p"));
    else if (name == "lorentz")
      cfg.model = DielectricModel::lorentz(need(cfg.omega_p, name, "omega_p"),
                                           need(cfg.omega_t, name, "omega_t"));
    else if (name == "damped_drude")
      cfg.model = DielectricModel::damped_drude(need(cfg.omega_p, name, "omega_p"),
                                                need(cfg.gamma, name, "gamma"));
    else
      throw Error(ErrorKind::ParseError, "unknown model '" + name + "'");
  }
  return cfg;
}

DielectricModel parse_model(const std::string &spec) {
  const RunConfig cfg = to_run_config(parse_key_values(spec));
  if (!cfg.model)
    throw Error(ErrorKind::ParseError, "model= missing in '" + spec + "'");
  return *cfg.model;
}

} // namespace selfenergy
