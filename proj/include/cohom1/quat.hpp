#pragma once

#include <cmath>
#include <stdexcept>

namespace cohom1 {

// Quaternion w + x i + y j + z k.
//
// Every group element the Weyl machinery produces has components on the
// grid {0, +-1/2, +-1/sqrt2, +-sqrt3/2, +-1}; snap() pulls nearly-grid
// values exactly onto it so finite-subgroup membership can be decided
// with tight tolerances instead of exact cyclotomic arithmetic.
struct Quat {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  static Quat one() { return {1, 0, 0, 0}; }
  static Quat i() { return {0, 1, 0, 0}; }
  static Quat j() { return {0, 0, 1, 0}; }
  static Quat k() { return {0, 0, 0, 1}; }

  Quat operator*(const Quat& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }
  Quat operator-() const { return {-w, -x, -y, -z}; }
  Quat conj() const { return {w, -x, -y, -z}; }

  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  bool is_unit(double tol = 1e-12) const { return std::abs(norm2() - 1.0) <= tol; }
  bool is_imaginary(double tol = 1e-12) const { return std::abs(w) <= tol; }
};

inline double quat_dist(const Quat& a, const Quat& b) {
  double d = std::abs(a.w - b.w);
  d = std::max(d, std::abs(a.x - b.x));
  d = std::max(d, std::abs(a.y - b.y));
  d = std::max(d, std::abs(a.z - b.z));
  return d;
}

double snap_component(double v, double tol = 1e-9);
Quat snap(const Quat& q, double tol = 1e-9);

// cos(angle) + sin(angle) * axis.  The axis must be a unit imaginary
// quaternion; anything else is a domain error.
Quat quat_exp(const Quat& axis, double angle);

// Element (l, r) of S^3 x S^3.  Single-S^3 diagrams are embedded with a
// trivial right component.
struct GElem {
  Quat l, r;
  GElem operator*(const GElem& o) const { return {l * o.l, r * o.r}; }
  GElem inverse() const { return {l.conj(), r.conj()}; }
  GElem operator-() const { return {-l, -r}; }
};

inline GElem gelem_one() { return {Quat::one(), Quat::one()}; }

inline double gelem_dist(const GElem& a, const GElem& b) {
  return std::max(quat_dist(a.l, b.l), quat_dist(a.r, b.r));
}

inline GElem snap(const GElem& g, double tol = 1e-9) {
  return {snap(g.l, tol), snap(g.r, tol)};
}

}  // namespace cohom1
