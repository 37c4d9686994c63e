#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cohom1 {

// 15-point Gauss-Kronrod rule with embedded 7-point Gauss error estimate.
template <class Func>
double gauss_kronrod_15(const Func& f, double a, double b, double* err = nullptr) {
  // node, Gauss weight (0 on Kronrod-only nodes), Kronrod weight
  static const double nw[8][3] = {
      {0.000000000000000, 0.417959183673469, 0.209482141084728},
      {0.405845151377397, 0.381830050505119, 0.190350578064785},
      {0.741531185599394, 0.279705391489277, 0.140653259715525},
      {0.949107912342759, 0.129484966168870, 0.063092092629979},
      {0.207784955007898, 0.0, 0.204432940075298},
      {0.586087235467691, 0.0, 0.169004726639267},
      {0.864864423359769, 0.0, 0.104790010322250},
      {0.991455371120813, 0.0, 0.022935322010529}};
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(mid);
  double g7 = nw[0][1] * f0;
  double k15 = nw[0][2] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * nw[i][0];
    const double fi = f(mid + dx) + f(mid - dx);
    g7 += nw[i][1] * fi;
    k15 += nw[i][2] * fi;
  }
  g7 *= half;
  k15 *= half;
  if (err) *err = std::abs(k15 - g7);
  return k15;
}

// Adaptive bisection on top of GK15.
template <class Func>
double integrate_adaptive(const Func& f, double a, double b, double abs_tol = 1e-12,
                          double rel_tol = 1e-12, int max_intervals = 4000) {
  struct Seg {
    double a, b;
  };
  std::vector<Seg> stack{{a, b}};
  double total = 0;
  int used = 1;
  while (!stack.empty()) {
    const Seg s = stack.back();
    stack.pop_back();
    double err = 0;
    const double val = gauss_kronrod_15(f, s.a, s.b, &err);
    if (err <= abs_tol || err <= rel_tol * std::abs(val)) {
      total += val;
      continue;
    }
    if (used + 2 > max_intervals)
      throw std::runtime_error("integrate_adaptive: did not converge");
    const double mid = 0.5 * (s.a + s.b);
    stack.push_back({s.a, mid});
    stack.push_back({mid, s.b});
    used += 2;
  }
  return total;
}

}  // namespace cohom1
