#pragma once

#include <cmath>
#include <type_traits>

namespace cohom1 {

// Forward-mode dual number.  Nest as Dual<Dual<double>> for second
// derivatives; rational expressions evaluated on duals avoid the
// subtractive cancellation of difference quotients near collapse points.
template <class T>
struct Dual {
  T v{}, d{};

  Dual() = default;
  Dual(double c) : v(c), d() {}
  Dual(const T& value, const T& deriv) : v(value), d(deriv) {}

  Dual operator-() const { return {-v, -d}; }

  Dual& operator+=(const Dual& o) {
    v += o.v;
    d += o.d;
    return *this;
  }
};

template <class T>
Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) {
  return {a.v + b.v, a.d + b.d};
}
template <class T>
Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) {
  return {a.v - b.v, a.d - b.d};
}
template <class T>
Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  return {a.v * b.v, a.v * b.d + a.d * b.v};
}
template <class T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  const T q = a.v / b.v;
  return {q, (a.d - q * b.d) / b.v};
}

template <class T> Dual<T> operator+(const Dual<T>& a, double b) { return a + Dual<T>(b); }
template <class T> Dual<T> operator+(double a, const Dual<T>& b) { return Dual<T>(a) + b; }
template <class T> Dual<T> operator-(const Dual<T>& a, double b) { return a - Dual<T>(b); }
template <class T> Dual<T> operator-(double a, const Dual<T>& b) { return Dual<T>(a) - b; }
template <class T> Dual<T> operator*(const Dual<T>& a, double b) { return a * Dual<T>(b); }
template <class T> Dual<T> operator*(double a, const Dual<T>& b) { return Dual<T>(a) * b; }
template <class T> Dual<T> operator/(const Dual<T>& a, double b) { return a / Dual<T>(b); }
template <class T> Dual<T> operator/(double a, const Dual<T>& b) { return Dual<T>(a) / b; }

using std::cos;
using std::sin;
using std::sqrt;

template <class T>
Dual<T> sqrt(const Dual<T>& a) {
  const T s = sqrt(a.v);
  return {s, a.d / (2.0 * s)};
}
template <class T>
Dual<T> sin(const Dual<T>& a) {
  return {sin(a.v), a.d * cos(a.v)};
}
template <class T>
Dual<T> cos(const Dual<T>& a) {
  return {cos(a.v), -a.d * sin(a.v)};
}

using D1 = Dual<double>;
using D2 = Dual<Dual<double>>;

inline D1 seed1(double x) { return {x, 1.0}; }
inline D2 seed2(double x) { return {D1{x, 1.0}, D1{1.0, 0.0}}; }

inline double value(const D1& a) { return a.v; }
inline double value(const D2& a) { return a.v.v; }
inline double deriv1(const D1& a) { return a.d; }
inline double deriv1(const D2& a) { return a.v.d; }
inline double deriv2(const D2& a) { return a.d.d; }

}  // namespace cohom1
