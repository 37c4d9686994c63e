#include "cohom1/hitchin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cohom1/quadrature.hpp"

namespace cohom1 {

namespace {

const double kSqrt5 = std::sqrt(5.0);
const double kRlo3 = (kSqrt5 - 1.0) / 2.0;
const double kRlo6 = std::numbers::sqrt2 - 1.0;

template <class T>
T sq(const T& v) {
  return v * v;
}

}  // namespace

HitchinDomain hitchin_domain(int k) {
  switch (k) {
    case 3: return {kRlo3, 1.0, false};
    case 4: return {1.0, std::numeric_limits<double>::infinity(), true};
    case 6: return {kRlo6, 1.0, false};
    default: throw std::invalid_argument("hitchin: k must be 3, 4 or 6");
  }
}

// Printed rational forms.  For k = 3 the caller must stay strictly above
// r_lo: T2 and T3 are 0/0 there (resolve through hitchin_t23_limit_rlo).
template <class T>
HitchinRaw<T> hitchin_raw(int k, const T& r) {
  HitchinRaw<T> o;
  if (k == 3) {
    const T w = r * r + r - 1.0;
    const T beta = sqrt(w / r);
    const T D1 = ((3.0 * r + 7.0) * r + 1.0) * r + 1.0;
    const T p6 = (((((r - 2.0) * r - 5.0) * r - 15.0) * r - 20.0) * r + 13.0) * r + 4.0;
    const T den1 = ((3.0 * r - 13.0) * r + 1.0) * r + 1.0;
    const T s4c = r * r + r + 4.0;
    const T P = ((r - 1.0) * r - 3.0) * r + 2.0;  // 2 - 3r - r^2 + r^3
    o.T1 = 80.0 * r * r * p6 / (sq(D1) * den1);
    o.T2 = 5.0 * r * (3.0 * r - 1.0) * (r - beta) * (r + beta + 2.0) * sq(P + 5.0 * beta * r) /
           (sq(D1) * w * s4c);
    o.T3 = 5.0 * r * (3.0 * r - 1.0) * (r + beta) * (r - beta + 2.0) * sq(P - 5.0 * beta * r) /
           (sq(D1) * w * s4c);
    o.f = 5.0 * (3.0 * r - 1.0) * s4c * sq(r + 1.0) / (w * sq(D1));
  } else if (k == 4) {
    const T c = 1.0 + r + r * r;
    o.T1 = sq(1.0 - r * r) / (c * (r + 2.0) * (2.0 * r + 1.0));
    o.T2 = c / ((r + 2.0) * sq(2.0 * r + 1.0));
    o.T3 = r * c / (sq(r + 2.0) * (2.0 * r + 1.0));
    o.f = c / (r * sq(r + 2.0) * sq(2.0 * r + 1.0));
  } else if (k == 6) {
    const T A1 = (3.0 * r + 2.0) * r + 1.0;
    const T A2 = (r + 2.0) * r - 1.0;
    const T A3 = (r - 2.0) * r + 3.0;
    const T A4 = r * r + 1.0;
    const T B1 = (3.0 * r - 2.0) * r + 1.0;
    const T B2 = (r - 2.0) * r - 1.0;
    const T B3 = (r + 2.0) * r + 3.0;
    o.T1 = A1 * sq(A2) * A3 * A4 / (B1 * sq(B2) * sq(B3));
    o.T2 = B1 * A3 * sq(r + 1.0) * (r + 1.0) * (r - 1.0) / (A1 * sq(B3) * B2);
    o.T3 = -4.0 * B1 * A1 * r / (sq(B3) * B2 * A3);
    o.f = (r + 1.0) * A3 * A1 * B1 / (r * (1.0 - r) * sq(B2) * A4 * sq(B3));
  } else {
    throw std::invalid_argument("hitchin: k must be 3, 4 or 6");
  }
  return o;
}

template HitchinRaw<double> hitchin_raw<double>(int, const double&);
template HitchinRaw<D1> hitchin_raw<D1>(int, const D1&);
template HitchinRaw<D2> hitchin_raw<D2>(int, const D2&);

HitchinValues eval_hitchin(int k, double r) {
  const HitchinDomain dom = hitchin_domain(k);
  const double hi = dom.infinite_hi ? std::numeric_limits<double>::max() : dom.r_hi;
  if (r < dom.r_lo - 1e-12 || r > hi + 1e-12)
    throw std::domain_error("eval_hitchin: r outside the metric domain");
  HitchinValues v;
  if (k == 3 && r < dom.r_lo + 1e-9) {
    // T2, T3 are 0/0 at r_lo; T1 and f come from the printed forms with
    // the vanishing factor r^2 + r - 1 evaluated exactly at zero.
    const auto lim = hitchin_t23_limit_rlo(3);
    v.T1 = 0.0;
    v.T2 = lim[0];
    v.T3 = lim[1];
    v.f = std::numeric_limits<double>::infinity();
    return v;
  }
  const auto o = hitchin_raw<double>(k, r);
  v.T1 = o.T1;
  v.T2 = o.T2;
  v.T3 = o.T3;
  v.f = o.f;
  return v;
}

std::array<double, 2> hitchin_t23_limit_rlo(int k) {
  const HitchinDomain dom = hitchin_domain(k);
  if (k != 3) {
    const auto o = hitchin_raw<double>(k, dom.r_lo);
    return {o.T2, o.T3};
  }
  // offset evaluation with one Richardson step on the sqrt(delta) ladder
  const double d = 1e-7;
  const auto a = hitchin_raw<double>(3, dom.r_lo + d);
  const auto b = hitchin_raw<double>(3, dom.r_lo + d / 4);
  return {2 * b.T2 - a.T2, 2 * b.T3 - a.T3};
}

// ---------------------------------------------------------------------------
// chart-coordinate evaluators: the singular factor of f (and the collapse
// factor of the vanishing T) is cancelled analytically, so every chart
// function below is smooth on the closed chart including the end points.

namespace {

constexpr int kChartA = 0, kChartB = 1;
const double kUcap = 1e-7;  // caps r = 1/u^2 at ~1e14 for table output only

template <class T>
T chart_r(int k, int chart, const T& x) {
  if (k == 3) return chart == kChartA ? T(kRlo3) + x * x : x;
  if (k == 4) {
    if (chart == kChartA) return x;
    const T u = T(1.0 / std::numbers::sqrt2) - x;
    return 1.0 / (u * u);
  }
  if (chart == kChartA) return x;
  const T u = T(std::sqrt(1.0 - (kRlo6 + 1.0) / 2.0)) - x;
  return 1.0 - u * u;
}

// dt/dx > 0 on the closed chart
template <class T>
T chart_q(int k, int chart, const T& x) {
  if (k == 3) {
    if (chart == kChartA) {
      const T r = T(kRlo3) + x * x;
      const T D1 = ((3.0 * r + 7.0) * r + 1.0) * r + 1.0;
      const T nf = 5.0 * (3.0 * r - 1.0) * (r * r + r + 4.0) * sq(r + 1.0);
      return 2.0 * sqrt(nf / (x * x + kSqrt5)) / D1;
    }
    const T r = x;
    const T w = r * r + r - 1.0;
    const T D1 = ((3.0 * r + 7.0) * r + 1.0) * r + 1.0;
    return sqrt(5.0 * (3.0 * r - 1.0) * (r * r + r + 4.0)) * (r + 1.0) / (sqrt(w) * D1);
  }
  if (k == 4) {
    if (chart == kChartA) {
      const T r = x;
      return sqrt((1.0 + r + r * r) / r) / ((r + 2.0) * (2.0 * r + 1.0));
    }
    const T u = T(1.0 / std::numbers::sqrt2) - x;
    const T u2 = u * u;
    return 2.0 * sqrt(u2 * u2 + u2 + 1.0) / ((1.0 + 2.0 * u2) * (2.0 + u2));
  }
  // k == 6
  const T r = (chart == kChartA)
                  ? x
                  : T(1.0) - sq(T(std::sqrt(1.0 - (kRlo6 + 1.0) / 2.0)) - x);
  const T A1 = (3.0 * r + 2.0) * r + 1.0;
  const T A3 = (r - 2.0) * r + 3.0;
  const T A4 = r * r + 1.0;
  const T B1 = (3.0 * r - 2.0) * r + 1.0;
  const T B2m = (2.0 - r) * r + 1.0;  // -(r^2 - 2r - 1) > 0 on the domain
  const T B3 = (r + 2.0) * r + 3.0;
  if (chart == kChartA)
    return sqrt((r + 1.0) * A3 * A1 * B1 / (r * (1.0 - r) * A4)) / (B2m * B3);
  return 2.0 * sqrt((r + 1.0) * A3 * A1 * B1 / (r * A4)) / (B2m * B3);
}

// sqrt(T_slot)/2 with collapse factors pulled out of the square root
template <class T>
T phi_slot(int k, int chart, int slot, const T& x) {
  if (k == 3) {
    const T r = chart_r(k, chart, x);
    const T D1 = ((3.0 * r + 7.0) * r + 1.0) * r + 1.0;
    const T s4c = r * r + r + 4.0;
    if (chart == kChartA) {
      const T c = sqrt(x * x + kSqrt5);
      const T beta = x * c / sqrt(r);
      if (slot == 1) {
        const T quartic_m = ((((-1.0) * r + 3.0) * r + 1.0) * r + 17.0) * r + 4.0;
        const T den1_m = ((-3.0 * r + 13.0) * r - 1.0) * r - 1.0;
        return x * r * c * sqrt(80.0 * quartic_m / den1_m) / (2.0 * D1);
      }
      const T base = x * c * (r - 2.0);
      if (slot == 2) {
        const T t2 = 5.0 * r * (3.0 * r - 1.0) * (r - beta) * (r + beta + 2.0) *
                     sq(base + 5.0 * sqrt(r)) / (sq(D1) * s4c);
        return sqrt(t2) / 2.0;
      }
      const T t3 = 5.0 * r * (3.0 * r - 1.0) * (r + beta) * (r - beta + 2.0) *
                   sq(base - 5.0 * sqrt(r)) / (sq(D1) * s4c);
      return sqrt(t3) / 2.0;
    }
    // chart B, x = r in [r_mid, 1]
    const T w = r * r + r - 1.0;
    if (slot == 1) {
      const auto o = hitchin_raw<T>(3, r);
      return sqrt(o.T1) / 2.0;
    }
    if (slot == 3) {
      const auto o = hitchin_raw<T>(3, r);
      return sqrt(o.T3) / 2.0;
    }
    const T beta = sqrt(w / r);
    const T P = ((r - 1.0) * r - 3.0) * r + 2.0;
    // r - beta = (1-r)^2 (r+1) / (r (r+beta)) pulls the double zero at r = 1
    return (1.0 - r) * (P + 5.0 * beta * r) *
           sqrt(5.0 * r * (3.0 * r - 1.0) * (r + beta + 2.0) * (r + 1.0) /
                (r * (r + beta) * w * s4c)) /
           (2.0 * D1);
  }
  if (k == 4) {
    if (chart == kChartA) {
      const T r = x;
      if (slot == 1)
        return (r * r - 1.0) / (2.0 * sqrt((1.0 + r + r * r) * (r + 2.0) * (2.0 * r + 1.0)));
      const auto o = hitchin_raw<T>(4, r);
      return slot == 2 ? sqrt(o.T2) / 2.0 : sqrt(o.T3) / 2.0;
    }
    const T u = T(1.0 / std::numbers::sqrt2) - x;
    const T u2 = u * u;
    const T pol = u2 * u2 + u2 + 1.0;
    if (slot == 1) return (1.0 - u2 * u2) / (2.0 * sqrt(pol * (1.0 + 2.0 * u2) * (2.0 + u2)));
    if (slot == 2) return u * sqrt(pol) / (2.0 * (2.0 + u2) * sqrt(1.0 + 2.0 * u2));
    return sqrt(pol) / (2.0 * (1.0 + 2.0 * u2) * sqrt(2.0 + u2));
  }
  // k == 6
  const T r = chart_r(k, chart, x);
  const T A1 = (3.0 * r + 2.0) * r + 1.0;
  const T A3 = (r - 2.0) * r + 3.0;
  const T B1 = (3.0 * r - 2.0) * r + 1.0;
  const T B2m = (2.0 - r) * r + 1.0;
  const T B3 = (r + 2.0) * r + 3.0;
  if (slot == 1) {
    const T A2 = (r + 2.0) * r - 1.0;
    const T A4 = r * r + 1.0;
    return A2 * sqrt(A1 * A3 * A4 / B1) / (2.0 * B2m * B3);
  }
  if (slot == 2) {
    if (chart == kChartB) {
      const T u = T(std::sqrt(1.0 - (kRlo6 + 1.0) / 2.0)) - x;
      return u * sqrt(B1 * A3 * sq(r + 1.0) * (r + 1.0) / (A1 * B2m)) / (2.0 * B3);
    }
    const auto o = hitchin_raw<T>(6, r);
    return sqrt(o.T2) / 2.0;
  }
  return sqrt(4.0 * B1 * A1 * r / (sq(B3) * B2m * A3)) / 2.0;
}

int mirror13(int i) { return i == 1 ? 3 : (i == 3 ? 1 : 2); }
int cycle123(int i) { return i == 1 ? 2 : (i == 2 ? 3 : 1); }

}  // namespace

// ---------------------------------------------------------------------------

HitchinAnalysis::HitchinAnalysis(int k, int points_per_chart) : k_(k) {
  dom_ = hitchin_domain(k);
  if (points_per_chart < 64) throw std::invalid_argument("points_per_chart >= 64");

  const double r_mid = dom_.infinite_hi ? 2.0 : (dom_.r_lo + dom_.r_hi) / 2.0;
  if (k == 3) {
    charts_[0].x0 = 0.0;
    charts_[0].x1 = std::sqrt(r_mid - dom_.r_lo);
    charts_[1].x0 = r_mid;
    charts_[1].x1 = 1.0;
  } else if (k == 4) {
    charts_[0].x0 = 1.0;
    charts_[0].x1 = 2.0;
    charts_[1].x0 = 0.0;
    charts_[1].x1 = 1.0 / std::numbers::sqrt2;
  } else {
    charts_[0].x0 = dom_.r_lo;
    charts_[0].x1 = r_mid;
    charts_[1].x0 = 0.0;
    charts_[1].x1 = std::sqrt(1.0 - r_mid);
  }

  double t_acc = 0;
  for (int c = 0; c < 2; ++c) {
    Chart& ch = charts_[c];
    const int kk = k_;
    ch.r_of_x = [kk, c](double x) { return chart_r<double>(kk, c, x); };
    ch.dtdx = [kk, c](double x) { return chart_q<double>(kk, c, x); };
    ch.t0 = t_acc;
    const int n = points_per_chart;
    ch.xs.resize(n + 1);
    ch.ts.resize(n + 1);
    for (int j = 0; j <= n; ++j) ch.xs[j] = ch.x0 + (ch.x1 - ch.x0) * j / n;
    ch.ts[0] = t_acc;
    for (int j = 0; j < n; ++j)
      ch.ts[j + 1] = ch.ts[j] + gauss_kronrod_15(ch.dtdx, ch.xs[j], ch.xs[j + 1]);
    t_acc = ch.ts[n];
    ch.t1 = t_acc;
  }
  L_total_ = t_acc;
}

ArclengthTable HitchinAnalysis::table() const {
  ArclengthTable tab;
  for (const Chart& ch : charts_) {
    for (size_t j = 0; j < ch.xs.size(); ++j) {
      if (!tab.t.empty() && std::abs(ch.ts[j] - tab.t.back()) < 1e-15) continue;
      double x = ch.xs[j];
      if (k_ == 4 && &ch == &charts_[1]) x = std::min(x, charts_[1].x1 - kUcap);
      tab.t.push_back(ch.ts[j]);
      tab.r.push_back(ch.r_of_x(x));
    }
  }
  tab.L_total = L_total_;
  return tab;
}

double HitchinAnalysis::x_of_t(const Chart& c, double t) const {
  if (t <= c.t0) return c.x0;
  if (t >= c.t1) return c.x1;
  size_t lo = 0, hi = c.ts.size() - 1;
  while (hi - lo > 1) {
    const size_t mid = (lo + hi) / 2;
    (c.ts[mid] <= t ? lo : hi) = mid;
  }
  const double ttarget = t - c.ts[lo];
  double a = c.xs[lo], b = c.xs[hi];
  double x = a + (b - a) * ttarget / std::max(c.ts[hi] - c.ts[lo], 1e-300);
  for (int it = 0; it < 40; ++it) {
    const double g = gauss_kronrod_15(c.dtdx, c.xs[lo], x) - ttarget;
    const double slope = std::max(c.dtdx(x), 1e-300);
    if (g > 0)
      b = x;
    else
      a = x;
    double xn = x - g / slope;
    if (xn <= a || xn >= b) xn = 0.5 * (a + b);
    if (std::abs(xn - x) < 1e-15 * (1.0 + std::abs(x))) {
      x = xn;
      break;
    }
    x = xn;
  }
  return x;
}

double HitchinAnalysis::r_of_t(double t) const {
  t = std::clamp(t, 0.0, L_total_);
  const Chart& c = (t <= charts_[0].t1) ? charts_[0] : charts_[1];
  double x = x_of_t(c, t);
  if (k_ == 4 && &c == &charts_[1]) x = std::min(x, c.x1 - kUcap);
  return c.r_of_x(x);
}

double HitchinAnalysis::sec_at_r(int index, double r) const {
  const auto o = hitchin_raw<D2>(k_, seed2(r));
  const D2* T = index == 1 ? &o.T1 : (index == 2 ? &o.T2 : &o.T3);
  const double Tv = value(*T), Td = deriv1(*T), Tdd = deriv2(*T);
  const double fv = value(o.f), fd = deriv1(o.f);
  if (Tv < 1e-13) throw std::domain_error("hitchin curvature: T_i collapses here");
  return -(Tdd / (2 * Tv) - Td * Td / (4 * Tv * Tv)) / fv + (fd / (2 * fv * fv)) * (Td / (2 * Tv));
}

double HitchinAnalysis::sec(int index, double t) const {
  if (index < 1 || index > 3) throw std::invalid_argument("sec: index in 1..3");
  if (t <= 0 || t >= L_total_) throw std::domain_error("sec: t inside (0, L)");
  return sec_at_r(index, r_of_t(t));
}

double HitchinAnalysis::sec_extended(int index, double t) const {
  const double L = L_total_;
  if (t < 0 || t > 3 * L) throw std::domain_error("sec_extended: t in [0, 3L]");
  if (t <= L) return sec(index, t);
  if (t <= 2 * L) return sec(mirror13(index), 2 * L - t);
  return sec(cycle123(index), t - 2 * L);
}

namespace {

struct SegmentEval {
  int chart;
  double x;
  int slot;
  double mirror;  // dt_base/dt_extended = +-1
};

}  // namespace

// segment decomposition of the [0, 3L] profile: slot 1, then 3 mirrored,
// then 2, matching one full sweep of the geodesic between poles
double HitchinAnalysis::sphere_h(double t) const {
  const double L = L_total_;
  if (t <= 0 || t >= 3 * L) return 0.0;
  int slot;
  double s;
  if (t <= L) {
    slot = 1;
    s = t;
  } else if (t <= 2 * L) {
    slot = 3;
    s = 2 * L - t;
  } else {
    slot = 2;
    s = t - 2 * L;
  }
  const Chart& c = (s <= charts_[0].t1) ? charts_[0] : charts_[1];
  const int ci = (&c == &charts_[0]) ? kChartA : kChartB;
  const double x = x_of_t(c, s);
  return phi_slot<double>(k_, ci, slot, x);
}

namespace {

struct PhiParts {
  double phi, dphi, ddphi;  // value and arc-length derivatives
};

PhiParts phi_parts_chart(int k, int chart, int slot, double x) {
  const D2 X = seed2(x);
  const D2 P = phi_slot<D2>(k, chart, slot, X);
  const D2 Q = chart_q<D2>(k, chart, X);
  const double q = value(Q), qx = deriv1(Q);
  const double phi = value(P), px = deriv1(P), pxx = deriv2(P);
  PhiParts out;
  out.phi = phi;
  out.dphi = px / q;
  out.ddphi = (pxx * q - px * qx) / (q * q * q);
  return out;
}

}  // namespace

double HitchinAnalysis::sphere_h_prime(double t) const {
  const double L = L_total_;
  t = std::clamp(t, 0.0, 3 * L);
  int slot;
  double s, mirror = 1.0;
  if (t <= L) {
    slot = 1;
    s = t;
  } else if (t <= 2 * L) {
    slot = 3;
    s = 2 * L - t;
    mirror = -1.0;
  } else {
    slot = 2;
    s = t - 2 * L;
  }
  const Chart& c = (s <= charts_[0].t1) ? charts_[0] : charts_[1];
  const int ci = (&c == &charts_[0]) ? kChartA : kChartB;
  const double x = x_of_t(c, s);
  return mirror * phi_parts_chart(k_, ci, slot, x).dphi;
}

double HitchinAnalysis::sphere_h_second(double t) const {
  const double L = L_total_;
  t = std::clamp(t, 0.0, 3 * L);
  int slot;
  double s;
  if (t <= L) {
    slot = 1;
    s = t;
  } else if (t <= 2 * L) {
    slot = 3;
    s = 2 * L - t;
  } else {
    slot = 2;
    s = t - 2 * L;
  }
  const Chart& c = (s <= charts_[0].t1) ? charts_[0] : charts_[1];
  const int ci = (&c == &charts_[0]) ? kChartA : kChartB;
  const double x = x_of_t(c, s);
  return phi_parts_chart(k_, ci, slot, x).ddphi;
}

void HitchinAnalysis::check_seams() const {
  // one-sided limits, evaluated exactly at the chart end points
  const double hL_left = phi_slot<double>(k_, kChartB, 1, charts_[1].x1);
  const double hL_right = phi_slot<double>(k_, kChartB, 3, charts_[1].x1);
  const double h2L_left = phi_slot<double>(k_, kChartA, 3, charts_[0].x0);
  const double h2L_right = phi_slot<double>(k_, kChartA, 2, charts_[0].x0);
  const double scale = std::max(1.0, std::abs(hL_left) + std::abs(h2L_left));
  if (std::abs(hL_left - hL_right) > 1e-8 * scale ||
      std::abs(h2L_left - h2L_right) > 1e-8 * scale)
    throw std::runtime_error("hitchin sphere profile: seam mismatch exceeds 1e-8");
}

SphereProfile HitchinAnalysis::sphere_profile(int grid_n) const {
  if (grid_n < 65) throw std::invalid_argument("sphere_profile: grid_n >= 65");
  check_seams();
  SphereProfile sp;
  sp.L = L_total_;
  sp.t.resize(grid_n);
  sp.h.resize(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    const double t = 3 * L_total_ * i / (grid_n - 1);
    sp.t[i] = t;
    sp.h[i] = sphere_h(t);
  }
  return sp;
}

CurvatureReport HitchinAnalysis::curvature_report(int grid_n) const {
  if (grid_n < 65) throw std::invalid_argument("curvature_report: grid_n >= 65");
  CurvatureReport rep;
  const double L = L_total_;
  const double margin = 3e-3 * L;
  rep.t.resize(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    double t = margin + (3 * L - 2 * margin) * i / (grid_n - 1);
    // keep clear of the seams where a collapsing slot makes sec 0/0
    for (double seam : {L, 2 * L}) {
      if (std::abs(t - seam) < 1e-5 * L) t = seam + (t >= seam ? 1e-5 : -1e-5) * L;
    }
    rep.t[i] = t;
  }
  int all_pos = 0;
  std::array<std::vector<double>, 3>& s = rep.sec;
  for (int m = 0; m < 3; ++m) s[m].resize(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    bool pos = true;
    for (int m = 0; m < 3; ++m) {
      s[m][i] = sec_extended(m + 1, rep.t[i]);
      pos = pos && s[m][i] > 0;
    }
    if (pos) ++all_pos;
  }
  rep.all_positive_fraction = double(all_pos) / grid_n;
  for (int m = 0; m < 3; ++m) {
    bool in_run = false;
    SignInterval cur;
    for (int i = 0; i < grid_n; ++i) {
      if (s[m][i] < 0) {
        if (!in_run) {
          cur.lo = rep.t[i];
          in_run = true;
        }
        cur.hi = rep.t[i];
      } else if (in_run) {
        rep.negative_intervals[m].push_back(cur);
        in_run = false;
      }
    }
    if (in_run) rep.negative_intervals[m].push_back(cur);
  }
  return rep;
}

RevolutionProfile embed_revolution(const std::function<double(double)>& h,
                                   const std::function<double(double)>& h_prime,
                                   double t_end, int grid_n) {
  if (grid_n < 65) throw std::invalid_argument("embed_revolution: grid_n >= 65");
  RevolutionProfile out;
  out.t.resize(grid_n);
  out.rho.resize(grid_n);
  out.z.resize(grid_n);
  out.rho_prime.resize(grid_n);
  out.z_prime.resize(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    const double t = t_end * i / (grid_n - 1);
    const double hp = h_prime(t);
    if (std::abs(hp) > 1.0 + 1e-9) {
      throw std::runtime_error("embed_revolution: |h'| > 1 near t = " + std::to_string(t) +
                               ", no isometric embedding");
    }
    out.t[i] = t;
    out.rho[i] = h(t);
    out.rho_prime[i] = hp;
    out.z_prime[i] = std::sqrt(std::max(0.0, 1.0 - hp * hp));
  }
  auto zp = [&](double t) {
    const double hp = h_prime(t);
    return std::sqrt(std::max(0.0, 1.0 - hp * hp));
  };
  out.z[0] = 0;
  for (int i = 0; i + 1 < grid_n; ++i)
    out.z[i + 1] = out.z[i] + gauss_kronrod_15(zp, out.t[i], out.t[i + 1]);
  return out;
}

RevolutionProfile HitchinAnalysis::embed(int grid_n) const {
  check_seams();
  return embed_revolution([this](double t) { return sphere_h(t); },
                          [this](double t) { return sphere_h_prime(t); }, 3 * L_total_, grid_n);
}

double HitchinAnalysis::total_curvature() const {
  const double L = L_total_;
  const double d = 1e-5 * L;
  auto integrand = [this](double t) {
    const double h = sphere_h(t);
    const double K = -sphere_h_second(t) / h;
    return K * 2 * std::numbers::pi * h;
  };
  double total = 0;
  total += integrate_adaptive(integrand, d, L, 1e-10, 1e-10);
  total += integrate_adaptive(integrand, L, 2 * L, 1e-10, 1e-10);
  total += integrate_adaptive(integrand, 2 * L, 3 * L - d, 1e-10, 1e-10);
  return total;
}

}  // namespace cohom1
