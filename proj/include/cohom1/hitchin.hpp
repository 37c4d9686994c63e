#pragma once

#include <array>
#include <functional>
#include <vector>

#include "cohom1/dual.hpp"

namespace cohom1 {

// Explicit self-dual Einstein orbifold metrics on the 4-sphere with cone
// angle 2 pi / k along one singular orbit, k in {3, 4, 6}:
//
//     g = f(r) dr^2 + T1(r) dtheta1^2 + T2(r) dtheta2^2 + T3(r) dtheta3^2
//
// with rational T_i, f of the transverse coordinate r.  T1 collapses at
// the smooth end (r_lo for k = 3, 6; r = 1 for k = 4) and exactly one of
// T2 / T3 collapses at the other end.

struct HitchinDomain {
  double r_lo = 0, r_hi = 0;
  bool infinite_hi = false;
};

HitchinDomain hitchin_domain(int k);

template <class T>
struct HitchinRaw {
  T T1, T2, T3, f;
};

// Printed rational forms, evaluated by Horner scheme; template so the
// same expressions run on dual numbers for derivatives.
template <class T>
HitchinRaw<T> hitchin_raw(int k, const T& r);

struct HitchinValues {
  double T1 = 0, T2 = 0, T3 = 0, f = 0;
};

// Domain-checked evaluation (k = 4 accepts any r >= 1).
HitchinValues eval_hitchin(int k, double r);

// Common limits T2, T3 -> at r_lo for k = 3 (0/0 through beta -> 0),
// resolved by offset evaluation at r_lo + 1e-7 with one Richardson step
// on the sqrt ladder; accuracy about 1e-6.
std::array<double, 2> hitchin_t23_limit_rlo(int k);

struct ArclengthTable {
  std::vector<double> r, t;
  double L_total = 0;
};

struct SignInterval {
  double lo = 0, hi = 0;
};

struct CurvatureReport {
  std::vector<double> t;                                  // grid on [0, 3L]
  std::array<std::vector<double>, 3> sec;                 // sec(gamma', X_i*)
  std::array<std::vector<SignInterval>, 3> negative_intervals;
  double all_positive_fraction = 0;  // fraction of the grid with all three > 0
};

struct SphereProfile {
  std::vector<double> t, h;
  double L = 0;  // h lives on [0, 3L]
};

struct RevolutionProfile {
  std::vector<double> t, rho, z;
  std::vector<double> rho_prime, z_prime;
};

// Isometric embedding of dt^2 + h(t)^2 dtheta^2 as a surface of
// revolution: rho = h, z' = sqrt(1 - h'^2).  Throws when |h'| > 1 + 1e-9
// anywhere on the grid (embedding obstruction).
RevolutionProfile embed_revolution(const std::function<double(double)>& h,
                                   const std::function<double(double)>& h_prime,
                                   double t_end, int grid_n);

class HitchinAnalysis {
 public:
  explicit HitchinAnalysis(int k, int points_per_chart = 512);

  int k() const { return k_; }
  double L() const { return L_total_; }
  ArclengthTable table() const;

  double r_of_t(double t) const;

  // sec(gamma', X_i*) = -(sqrt T_i)'' / sqrt T_i in arc length, via
  // second-order duals through the rational forms and the chain rule
  // d/dt = (1/sqrt f) d/dr.  t in the open interval (0, L).
  double sec(int index, double t) const;

  // Weyl-symmetric continuation over [0, 3L]: on [L, 2L] indices 1 and 3
  // swap across the reflection at L, on [2L, 3L] indices cycle 1->2->3->1.
  double sec_extended(int index, double t) const;

  // Length profile h = sqrt(T)/2 of the circle action on the fixed-point
  // 2-sphere, on [0, 3L]: T1, then T3 mirrored, then T2.  Construction
  // verifies one-sided limits agree at the seams to 1e-8.
  double sphere_h(double t) const;
  double sphere_h_prime(double t) const;
  double sphere_h_second(double t) const;
  SphereProfile sphere_profile(int grid_n) const;
  void check_seams() const;  // throws on seam mismatch

  CurvatureReport curvature_report(int grid_n) const;
  RevolutionProfile embed(int grid_n) const;

  // integral of the Gauss curvature over the 2-sphere, quadrature of
  // (-h''/h) * 2 pi h between the poles
  double total_curvature() const;

 private:
  struct Chart {
    double x0 = 0, x1 = 0;        // chart coordinate range, t ascending
    double t0 = 0, t1 = 0;        // arc length at x0 / x1
    std::function<double(double)> r_of_x;
    std::function<double(double)> dtdx;
    std::vector<double> xs, ts;
  };

  double x_of_t(const Chart& c, double t) const;
  double sec_at_r(int index, double r) const;
  double phi_parts(int index, double r, double* dphi, double* ddphi) const;

  int k_ = 4;
  HitchinDomain dom_;
  std::array<Chart, 2> charts_;
  double L_total_ = 0;
};

}  // namespace cohom1
