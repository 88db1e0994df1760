#pragma once

#include <cmath>
#include <type_traits>

namespace mdrk {

/// First-order forward-mode dual number over an arbitrary scalar base.
///
/// Nesting (Dual<Dual<double>>, ...) yields exact higher-order directional
/// derivatives: every arithmetic level carries one perturbation.
template <class T>
struct Dual {
  T v{};  ///< value part
  T d{};  ///< perturbation part

  constexpr Dual() = default;
  constexpr Dual(double x) : v(x), d() {}  // NOLINT: implicit by design
  constexpr Dual(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}
};

using D1 = Dual<double>;
using D2 = Dual<D1>;
using D3 = Dual<D2>;
using D4 = Dual<D3>;

// --- leading-value extraction -------------------------------------------

constexpr double value(double x) { return x; }
template <class T>
constexpr double value(const Dual<T>& x) {
  return value(x.v);
}

template <class T>
struct dual_depth : std::integral_constant<int, 0> {};
template <class T>
struct dual_depth<Dual<T>> : std::integral_constant<int, dual_depth<T>::value + 1> {};

// --- arithmetic -----------------------------------------------------------

template <class T>
constexpr Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) {
  return {a.v + b.v, a.d + b.d};
}
template <class T>
constexpr Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) {
  return {a.v - b.v, a.d - b.d};
}
template <class T>
constexpr Dual<T> operator-(const Dual<T>& a) {
  return {-a.v, -a.d};
}
template <class T>
constexpr Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  return {a.v * b.v, a.d * b.v + a.v * b.d};
}
template <class T>
constexpr Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}

template <class T>
constexpr Dual<T> operator+(const Dual<T>& a, double b) {
  return {a.v + b, a.d};
}
template <class T>
constexpr Dual<T> operator+(double a, const Dual<T>& b) {
  return {a + b.v, b.d};
}
template <class T>
constexpr Dual<T> operator-(const Dual<T>& a, double b) {
  return {a.v - b, a.d};
}
template <class T>
constexpr Dual<T> operator-(double a, const Dual<T>& b) {
  return {a - b.v, -b.d};
}
template <class T>
constexpr Dual<T> operator*(const Dual<T>& a, double b) {
  return {a.v * b, a.d * b};
}
template <class T>
constexpr Dual<T> operator*(double a, const Dual<T>& b) {
  return {b.v * a, b.d * a};
}
template <class T>
constexpr Dual<T> operator/(const Dual<T>& a, double b) {
  return {a.v / b, a.d / b};
}
template <class T>
constexpr Dual<T> operator/(double a, const Dual<T>& b) {
  return {a / b.v, (-a / (b.v * b.v)) * b.d};
}

template <class T>
constexpr Dual<T>& operator+=(Dual<T>& a, const Dual<T>& b) {
  a.v += b.v;
  a.d += b.d;
  return a;
}
template <class T>
constexpr Dual<T>& operator-=(Dual<T>& a, const Dual<T>& b) {
  a.v -= b.v;
  a.d -= b.d;
  return a;
}
template <class T>
constexpr Dual<T>& operator*=(Dual<T>& a, const Dual<T>& b) {
  a = a * b;
  return a;
}
template <class T>
constexpr Dual<T>& operator*=(Dual<T>& a, double b) {
  a.v *= b;
  a.d *= b;
  return a;
}

// comparisons act on the leading value, so generic numeric code can branch
template <class T>
constexpr bool operator<(const Dual<T>& a, const Dual<T>& b) {
  return value(a) < value(b);
}
template <class T>
constexpr bool operator<(const Dual<T>& a, double b) {
  return value(a) < b;
}
template <class T>
constexpr bool operator>(const Dual<T>& a, double b) {
  return value(a) > b;
}

// --- elementary functions -------------------------------------------------

using std::cos;
using std::cosh;
using std::exp;
using std::log;
using std::sin;
using std::sinh;
using std::sqrt;
using std::tanh;

template <class T>
Dual<T> exp(const Dual<T>& x) {
  T e = exp(x.v);
  return {e, x.d * e};
}
template <class T>
Dual<T> log(const Dual<T>& x) {
  return {log(x.v), x.d / x.v};
}
template <class T>
Dual<T> sin(const Dual<T>& x) {
  return {sin(x.v), x.d * cos(x.v)};
}
template <class T>
Dual<T> cos(const Dual<T>& x) {
  return {cos(x.v), -x.d * sin(x.v)};
}
template <class T>
Dual<T> sqrt(const Dual<T>& x) {
  T r = sqrt(x.v);
  return {r, x.d / (2.0 * r)};
}
template <class T>
Dual<T> sinh(const Dual<T>& x) {
  return {sinh(x.v), x.d * cosh(x.v)};
}
template <class T>
Dual<T> cosh(const Dual<T>& x) {
  return {cosh(x.v), x.d * sinh(x.v)};
}
template <class T>
Dual<T> tanh(const Dual<T>& x) {
  T t = tanh(x.v);
  return {t, x.d * (1.0 - t * t)};
}
template <class T>
Dual<T> pow(const Dual<T>& x, double p) {
  using std::pow;
  T xp = pow(x.v, p - 1.0);
  return {xp * x.v, x.d * (p * xp)};
}

}  // namespace mdrk
