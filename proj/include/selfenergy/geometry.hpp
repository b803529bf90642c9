#pragma once

namespace selfenergy {

/// Electron-surface distance d > 0. Closed forms use z = -d internally.
class Geometry {
public:
  explicit Geometry(double d);
  double d() const noexcept { return m_d; }
  double z() const noexcept { return -m_d; }

private:
  double m_d;
};

/// <p_par^2> is the full in-plane moment <p_x^2 + p_y^2>.
struct MomentumMoments {
  double p2_par = 0.0;
  double p2_perp = 0.0;
};

struct Coupling {
  double e2 = 1.0;
  double m = 1.0;
};

/// dE = e^2 <p_par^2> g_par / (32 pi m^2) + e^2 <p_z^2> g_perp / (16 pi m^2)
struct GeometryFactors {
  double g_par = 0.0;
  double g_perp = 0.0;
};

} // namespace selfenergy
