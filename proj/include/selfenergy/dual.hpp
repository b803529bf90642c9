#pragma once

#include <complex>

namespace selfenergy {

/// Forward-mode dual scalar v + d*eps, eps^2 = 0, over a complex base.
template <class T> struct Dual {
  T v{};
  T d{};

  constexpr Dual() = default;
  constexpr Dual(T value, T deriv) : v(value), d(deriv) {}
  constexpr Dual(T value) : v(value), d(T(0)) {}
  constexpr Dual(double value) : v(T(value)), d(T(0)) {}

  static constexpr Dual variable(T value) { return Dual(value, T(1)); }

  Dual &operator+=(const Dual &o) { v += o.v; d += o.d; return *this; }
  Dual &operator-=(const Dual &o) { v -= o.v; d -= o.d; return *this; }
  Dual &operator*=(const Dual &o) {
    d = d * o.v + v * o.d;
    v *= o.v;
    return *this;
  }
  Dual &operator/=(const Dual &o) {
    d = (d * o.v - v * o.d) / (o.v * o.v);
    v /= o.v;
    return *this;
  }
};

template <class T> Dual<T> operator+(Dual<T> a, const Dual<T> &b) { return a += b; }
template <class T> Dual<T> operator-(Dual<T> a, const Dual<T> &b) { return a -= b; }
template <class T> Dual<T> operator*(Dual<T> a, const Dual<T> &b) { return a *= b; }
template <class T> Dual<T> operator/(Dual<T> a, const Dual<T> &b) { return a /= b; }
template <class T> Dual<T> operator-(const Dual<T> &a) { return {-a.v, -a.d}; }

/// Square root with the branch fixed by the caller through `root`, which
/// must satisfy root^2 == a.v.
template <class T> Dual<T> sqrt_with_root(const Dual<T> &a, const T &root) {
  return {root, a.d / (T(2) * root)};
}

} // namespace selfenergy
