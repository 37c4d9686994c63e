#include "cohom1/profiles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cohom1 {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

double sq(double v) { return v * v; }

}  // namespace

Space parse_space(const std::string& name) {
  if (name == "S4") return Space::S4;
  if (name == "CP2") return Space::CP2;
  if (name == "S7") return Space::S7;
  if (name == "B7") return Space::B7;
  if (name == "E_p" || name == "Ep") return Space::Ep;
  if (name == "W1") return Space::W1;
  if (name == "W2") return Space::W2;
  throw std::invalid_argument("unknown space: " + name);
}

std::string space_name(Space s) {
  switch (s) {
    case Space::S4: return "S4";
    case Space::CP2: return "CP2";
    case Space::S7: return "S7";
    case Space::B7: return "B7";
    case Space::Ep: return "E_p";
    case Space::W1: return "W1";
    case Space::W2: return "W2";
  }
  return "?";
}

bool space_needs_p(Space s) { return s == Space::Ep; }
bool space_needs_eps(Space s) { return s == Space::Ep || s == Space::W1 || s == Space::W2; }
bool space_is_diagonal(Space s) { return s == Space::S4 || s == Space::CP2; }

MetricProfile make_profile(Space space, const ProfileParams& params) {
  MetricProfile pr;
  pr.space = space;
  pr.params = params;
  switch (space) {
    case Space::S4:
      pr.L = kPi / 3;
      pr.rule = SymmetryRule::Cyclic3;
      break;
    case Space::CP2:
      pr.L = kPi / 4;
      pr.rule = SymmetryRule::Reflect2;
      break;
    case Space::S7:
      pr.L = kPi / 6;
      pr.rule = SymmetryRule::Cyclic3;
      break;
    case Space::B7:
      pr.L = kPi / 3;
      pr.rule = SymmetryRule::Cyclic3;
      break;
    case Space::Ep:
      if (params.p < 1) throw std::invalid_argument("E_p needs p >= 1");
      [[fallthrough]];
    case Space::W1:
      if (params.eps <= 0) throw std::invalid_argument("eps must be positive");
      pr.L = kPi / 2;
      pr.rule = SymmetryRule::Even2;
      break;
    case Space::W2:
      if (params.eps <= 0) throw std::invalid_argument("eps must be positive");
      pr.L = kPi / 4;
      pr.rule = SymmetryRule::Modified4;
      break;
  }
  return pr;
}

double extend_range(const MetricProfile& pr) {
  switch (pr.rule) {
    case SymmetryRule::Cyclic3: return 3 * pr.L;
    case SymmetryRule::Reflect2: return 2 * pr.L;
    case SymmetryRule::Modified4:
    case SymmetryRule::Even2: return 4 * pr.L;
  }
  return 0;
}

namespace {

void ep_index1(int p, double eps, double t, double* f1, double* g1, double* h1) {
  const double c2 = sq(std::cos(t));
  const double c4 = c2 * c2;
  const double pm1 = p - 1.0;
  const double alpha = pm1 * pm1 * (eps - 1) * c4 +
                       pm1 * (pm1 - eps * (2.0 * p + 1)) * c2 +
                       eps * (double(p) * p + p + 1);
  if (alpha <= 0) throw std::domain_error("E_p: alpha(t) <= 0");
  const double pref = eps / (4 * alpha);
  *f1 = pref * ((3 * eps * sq(p - 2.0) - 4.0 * p * p + 8.0 * p - 16) * c4 +
                (4.0 * p * p - 8.0 * p + 16 - 6 * eps * p * (p - 2.0)) * c2 +
                3 * eps * double(p) * p);
  *g1 = pref * (sq(pm1) * (3 * eps - 4) * c4 +
                (2 * pm1) * (2 * pm1 - 3 * eps * (p + 1.0)) * c2 +
                3 * eps * sq(p + 1.0));
  *h1 = -pref * (pm1 * (3 * eps * (p - 2.0) - 4 * pm1) * c4 +
                 (4 * sq(pm1) - 6 * eps * (double(p) * p - p - 1)) * c2 +
                 3 * eps * p * (p + 1.0));
}

}  // namespace

MetricBlocks eval_raw(const MetricProfile& pr, double t) {
  MetricBlocks b;
  const double eps = pr.params.eps;
  switch (pr.space) {
    case Space::S4: {
      const double c = std::cos(t), s = std::sin(t);
      b.f = {4 * s * s, sq(kSqrt3 * c - s), sq(kSqrt3 * c + s)};
      break;
    }
    case Space::CP2: {
      b.f = {sq(std::sin(t)), sq(std::cos(2 * t)), sq(std::cos(t))};
      break;
    }
    case Space::S7: {
      // printed index-1 functions; indices 2, 3 via the Cyclic3 rule
      for (int m = 0; m < 3; ++m) {
        const double c2 = sq(std::cos(t + 2.0 * pr.L * m));
        b.f[m] = 1.0;
        b.g[m] = 8 * c2 + 1;
        b.h[m] = 4 * c2 - 1;
      }
      break;
    }
    case Space::B7: {
      for (int m = 0; m < 3; ++m) {
        const double u = t + 2.0 * pr.L * m;
        const double c = std::cos(u), s2 = sq(std::sin(u));
        b.f[m] = (5 + 4 * s2 - 4 * c) / 5;
        b.g[m] = (5 + 4 * s2 + 4 * c) / 5;
        b.h[m] = -(1 - 4 * c * c) / 5;
      }
      break;
    }
    case Space::Ep: {
      ep_index1(pr.params.p, eps, t, &b.f[0], &b.g[0], &b.h[0]);
      const double c = std::cos(t), c2 = c * c;
      b.f[1] = b.f[2] = 1 + (eps - 1) * c2;
      b.g[1] = b.g[2] = eps;
      b.h[1] = b.h[2] = -eps * c;
      break;
    }
    case Space::W1: {
      const double c = std::cos(t), c2 = c * c, c4 = c2 * c2;
      b.f[0] = 0.25 * ((eps - 4) * c4 + 2 * (eps + 2) * c2 + eps);
      b.f[1] = b.f[2] = 1 + (eps - 1) * c2;
      b.g = {eps, eps, eps};
      b.h[0] = -0.5 * eps * (c2 + 1);
      b.h[1] = b.h[2] = -eps * c;
      break;
    }
    case Space::W2: {
      const double c = std::cos(t), s = std::sin(t);
      const double c2d = std::cos(2 * t), s2d = std::sin(2 * t);
      b.f = {4 * s * s + 4 * eps * c * c, 4 * c2d * c2d + eps * s2d * s2d,
             4 * c * c + 4 * eps * s * s};
      b.g = {eps, eps, eps};
      b.h = {2 * eps * c, -eps * s2d, -2 * eps * s};
      break;
    }
  }
  return b;
}

MetricBlocks eval_profile(const MetricProfile& pr, double t) {
  if (t < -1e-12 || t > pr.L + 1e-12)
    throw std::domain_error("eval_profile: t outside [0, L]");
  return eval_raw(pr, t);
}

MetricBlocks extend_profile(const MetricProfile& pr, double t) {
  if (t < -1e-12 || t > extend_range(pr) + 1e-12)
    throw std::domain_error("extend_profile: t outside extension range");
  return eval_raw(pr, t);
}

InverseBlock inverse_block(const MetricProfile& pr, int index, double t) {
  if (index < 1 || index > 3) throw std::invalid_argument("inverse_block: index in 1..3");
  const MetricBlocks b = eval_raw(pr, t);
  const int m = index - 1;
  InverseBlock inv;
  if (space_is_diagonal(pr.space)) {
    if (b.f[m] <= 1e-14) throw std::domain_error("inverse_block: singular block");
    inv.F = 1.0 / b.f[m];
    return inv;
  }
  const double det = b.f[m] * b.g[m] - b.h[m] * b.h[m];
  if (det <= 1e-14) throw std::domain_error("inverse_block: singular block");
  inv.F = b.g[m] / det;
  inv.G = b.f[m] / det;
  inv.H = -b.h[m] / det;
  return inv;
}

GroupDiagram profile_diagram(const MetricProfile& pr) {
  DiagramParams dp;
  if (pr.space == Space::Ep) dp.p = pr.params.p;
  return catalog(space_name(pr.space), dp);
}

namespace {

int axis_index(const Quat& axis) {
  if (std::abs(axis.x) > 0.5) return 1;
  if (std::abs(axis.y) > 0.5) return 2;
  return 3;
}

}  // namespace

std::vector<CollapseDirection> collapse_directions(const MetricProfile& pr, OrbitEnd end) {
  const GroupDiagram d = profile_diagram(pr);
  const IsotropyGroup& K = (end == OrbitEnd::Minus) ? d.Kminus : d.Kplus;
  const double t_end = (end == OrbitEnd::Minus) ? 0.0 : pr.L;
  const MetricBlocks b = eval_raw(pr, t_end);
  std::vector<CollapseDirection> out;
  if (K.kind == ComponentKind::DiagonalSphere) {
    for (int idx = 1; idx <= 3; ++idx) {
      CollapseDirection c{idx, 1, 1, 0};
      const int m = idx - 1;
      c.residual = std::abs(b.f[m] + 2 * b.h[m] + b.g[m]);
      out.push_back(c);
    }
    return out;
  }
  CollapseDirection c;
  c.index = axis_index(K.circle.axis_l);
  c.a = K.circle.p;
  c.b = K.circle.q;
  const int m = c.index - 1;
  c.residual = std::abs(double(c.a) * c.a * b.f[m] + 2.0 * c.a * c.b * b.h[m] +
                        double(c.b) * c.b * b.g[m]);
  out.push_back(c);
  return out;
}

}  // namespace cohom1
