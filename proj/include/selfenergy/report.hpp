#pragma once

// CSV rendering: '#' metadata lines, one header line, fixed column order,
// shortest round-trip floats.

#include "selfenergy/shift_engine.hpp"
#include "selfenergy/sweep.hpp"

#include <string>
#include <vector>

namespace selfenergy::report {

inline const std::vector<double> figure2_omega_t_d = {0.2, 0.4, 0.6};
inline constexpr const char *figure1_default_grid = "0.01:1e8:201:log";
inline constexpr const char *figure2_default_grid = "0.05:1000:121:log";

struct Metadata {
  std::vector<std::string> lines;
};

std::string compute_csv(const Metadata &meta, const DielectricModel &model,
                        const Geometry &geometry, const ShiftResult &r);

std::string sweep_csv(const Metadata &meta, const sweep::ShiftSpec &base,
                      sweep::Parameter param, const std::vector<double> &xs,
                      const std::vector<ShiftResult> &rows);

enum class Kernel { Serial, Parallel };

std::string figure1_csv(double omega_t_d, const std::vector<double> &chi0,
                        Kernel kernel = Kernel::Parallel);
std::string figure2_csv(const std::vector<double> &omega_p_d, double tol,
                        Kernel kernel = Kernel::Parallel);

} // namespace selfenergy::report
