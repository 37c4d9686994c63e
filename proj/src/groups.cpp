#include "cohom1/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cohom1 {

namespace {

constexpr double kPi = std::numbers::pi;

const double kGrid[] = {0.0, 0.5, 1.0 / std::numbers::sqrt2, 0.8660254037844386, 1.0};

}  // namespace

double snap_component(double v, double tol) {
  for (double g : kGrid) {
    if (std::abs(v - g) <= tol) return g;
    if (std::abs(v + g) <= tol) return -g;
  }
  return v;
}

Quat snap(const Quat& q, double tol) {
  return {snap_component(q.w, tol), snap_component(q.x, tol),
          snap_component(q.y, tol), snap_component(q.z, tol)};
}

Quat quat_exp(const Quat& axis, double angle) {
  if (!axis.is_imaginary(1e-12) || !axis.is_unit(1e-12))
    throw std::domain_error("quat_exp: axis must be unit imaginary");
  const double c = std::cos(angle), s = std::sin(angle);
  return {c, s * axis.x, s * axis.y, s * axis.z};
}

bool FiniteSubgroup::contains(const GElem& g, double tol) const {
  for (const GElem& h : elements)
    if (gelem_dist(g, h) <= tol) return true;
  return false;
}

bool in_subgroup(const GElem& g, const FiniteSubgroup& H, double tol) {
  if (tol <= 0) throw std::domain_error("in_subgroup: tol must be positive");
  return H.contains(g, tol);
}

GElem CircleGroup::at(double t) const {
  Quat l = quat_exp(axis_l, p * t);
  Quat r = (q == 0) ? Quat::one() : quat_exp(axis_r, q * t);
  if (p == 0) l = Quat::one();
  return {l, r};
}

namespace {

// Decompose u into cos(a) + sin(a) * axis.  Returns false when u has a
// component off the span of {1, axis} larger than tol.
bool angle_on_axis(const Quat& u, const Quat& axis, double tol, double* angle) {
  const double s = u.x * axis.x + u.y * axis.y + u.z * axis.z;
  const Quat rec{u.w, s * axis.x, s * axis.y, s * axis.z};
  if (quat_dist(u, rec) > tol) return false;
  *angle = std::atan2(s, u.w);
  return true;
}

double mod2pi(double a) {
  a = std::fmod(a, 2 * kPi);
  if (a < 0) a += 2 * kPi;
  return a;
}

bool angles_match(double a, double b, double tol) {
  double d = std::abs(mod2pi(a) - mod2pi(b));
  return d <= tol || std::abs(d - 2 * kPi) <= tol;
}

}  // namespace

bool CircleGroup::contains(const GElem& g, double tol) const {
  double al = 0, ar = 0;
  if (!angle_on_axis(g.l, axis_l, tol, &al)) return false;
  if (!angle_on_axis(g.r, axis_r, tol, &ar)) return false;
  if (p == 0 && q == 0) return angles_match(al, 0, tol) && angles_match(ar, 0, tol);
  if (p == 0) {
    if (!angles_match(al, 0, tol)) return false;
    return true;  // some t fits the right factor alone
  }
  if (q == 0) {
    if (!angles_match(ar, 0, tol)) return false;
    return true;
  }
  // need t with p t = al, q t = ar (mod 2 pi)
  for (int m = 0; m < std::abs(p); ++m) {
    const double t = (al + 2 * kPi * m) / p;
    if (angles_match(q * t, ar, tol * (std::abs(q) + 1))) return true;
  }
  for (int m = 1; m <= std::abs(p); ++m) {
    const double t = (al - 2 * kPi * m) / p;
    if (angles_match(q * t, ar, tol * (std::abs(q) + 1))) return true;
  }
  return false;
}

bool IsotropyGroup::contains(const GElem& g, double tol) const {
  if (kind == ComponentKind::DiagonalSphere) {
    for (const GElem& rep : coset_reps) {
      const GElem c = g * rep.inverse();
      if (quat_dist(c.l, c.r) <= tol) return true;
    }
    return false;
  }
  for (const GElem& rep : coset_reps) {
    const GElem c = rep.inverse() * g;
    if (circle.contains(c, tol)) return true;
  }
  return false;
}

namespace {

std::vector<GElem> signed_pairs(const Quat& a, const Quat& b) {
  // {(+-a, +-b)} with independent signs
  return {{a, b}, {a, -b}, {-a, b}, {-a, -b}};
}

FiniteSubgroup make_deltaQ() {
  FiniteSubgroup H{"DeltaQ", {}};
  for (const Quat& q : {Quat::one(), Quat::i(), Quat::j(), Quat::k()}) {
    H.elements.push_back({q, q});
    H.elements.push_back({-q, -q});
  }
  return H;
}

FiniteSubgroup make_Q_left() {
  FiniteSubgroup H{"Q", {}};
  for (const Quat& q : {Quat::one(), Quat::i(), Quat::j(), Quat::k()}) {
    H.elements.push_back({q, Quat::one()});
    H.elements.push_back({-q, Quat::one()});
  }
  return H;
}

FiniteSubgroup make_pm1_pmj_left() {
  FiniteSubgroup H{"pm1_pmj", {}};
  for (const Quat& q : {Quat::one(), Quat::j()}) {
    H.elements.push_back({q, Quat::one()});
    H.elements.push_back({-q, Quat::one()});
  }
  return H;
}

FiniteSubgroup make_w2_H() {
  FiniteSubgroup H{"Z4+Z2(j)", {}};
  for (const GElem& g : signed_pairs(Quat::one(), Quat::one())) H.elements.push_back(g);
  for (const GElem& g : signed_pairs(Quat::j(), Quat::j())) H.elements.push_back(g);
  return H;
}

FiniteSubgroup make_qr_H() {
  FiniteSubgroup H{"Z4+Z2(i)", {}};
  for (const GElem& g : signed_pairs(Quat::one(), Quat::one())) H.elements.push_back(g);
  for (const GElem& g : signed_pairs(Quat::i(), Quat::i())) H.elements.push_back(g);
  return H;
}

FiniteSubgroup make_ep_H(int p) {
  const double sl = (p % 2 == 0) ? -1.0 : 1.0;  // (-1)^(p+1)
  const double sr = (p % 2 == 0) ? 1.0 : -1.0;  // (-1)^p
  FiniteSubgroup H{"Z2(ep)", {gelem_one(), {{sl, 0, 0, 0}, {sr, 0, 0, 0}}}};
  return H;
}

// Component representatives of circle * H: one element of H per coset of
// H modulo (H meet circle).
std::vector<GElem> coset_reps_from(const FiniteSubgroup& H, const CircleGroup& c) {
  std::vector<GElem> reps{gelem_one()};
  for (const GElem& h : H.elements) {
    bool covered = false;
    for (const GElem& r : reps) {
      if (c.contains(r.inverse() * h, 1e-9)) {
        covered = true;
        break;
      }
    }
    if (!covered) reps.push_back(h);
  }
  return reps;
}

IsotropyGroup make_circle_K(const FiniteSubgroup& H, const Quat& axis_l, int p,
                            const Quat& axis_r, int q) {
  IsotropyGroup K;
  K.kind = ComponentKind::Circle;
  K.circle = {axis_l, p, axis_r, q};
  K.coset_reps = coset_reps_from(H, K.circle);
  return K;
}

IsotropyGroup make_diagonal_K(const FiniteSubgroup& H) {
  IsotropyGroup K;
  K.kind = ComponentKind::DiagonalSphere;
  K.coset_reps = H.elements;  // DeltaS3 * H
  return K;
}

}  // namespace

GroupDiagram catalog(const std::string& name, const DiagramParams& params) {
  GroupDiagram d;
  d.name = name;
  d.params = params;
  const Quat i = Quat::i(), j = Quat::j();

  if (name == "S4") {
    d.H = make_Q_left();
    d.Kminus = make_circle_K(d.H, i, 1, i, 0);
    d.Kplus = make_circle_K(d.H, j, 1, j, 0);
    d.L = kPi / 3;
  } else if (name == "CP2") {
    d.H = make_pm1_pmj_left();
    d.Kminus = make_circle_K(d.H, i, 1, i, 0);
    d.Kplus = make_circle_K(d.H, j, 1, j, 0);
    d.L = kPi / 4;
  } else if (name == "S7") {
    d.H = make_deltaQ();
    d.Kminus = make_circle_K(d.H, i, -3, i, 1);
    d.Kplus = make_circle_K(d.H, j, 1, j, 1);
    d.L = kPi / 6;
  } else if (name == "B7") {
    d.H = make_deltaQ();
    d.Kminus = make_circle_K(d.H, i, -3, i, 1);
    d.Kplus = make_circle_K(d.H, j, 1, j, -3);
    d.L = kPi / 3;
  } else if (name == "E_p" || name == "W1") {
    const int p = (name == "W1") ? 1 : params.p;
    if (p < 1) throw std::invalid_argument("catalog: E_p needs p >= 1");
    d.params.p = p;
    if (name == "W1") d.alias = "E_1 (Aloff-Wallach, first action)";
    d.H = make_ep_H(p);
    d.Kminus = make_diagonal_K(d.H);
    d.Kplus = make_circle_K(d.H, i, p + 1, i, p);
    d.L = kPi / 2;
  } else if (name == "W2") {
    d.H = make_w2_H();
    d.Kminus = make_circle_K(d.H, i, 1, i, -2);
    d.Kplus = make_circle_K(d.H, j, 1, j, 1);
    d.L = kPi / 4;
  } else if (name == "P_k") {
    if (params.k < 1) throw std::invalid_argument("catalog: P_k needs k >= 1");
    d.H = make_deltaQ();
    d.Kminus = make_circle_K(d.H, i, 1, i, 1);
    d.Kplus = make_circle_K(d.H, j, 1 + 2 * params.k, j, 1 - 2 * params.k);
    d.L = 1.0;
    if (params.k == 1) d.alias = "S7 (same diagram up to presentation)";
  } else if (name == "Q_k") {
    if (params.k < 1) throw std::invalid_argument("catalog: Q_k needs k >= 1");
    d.H = make_qr_H();
    d.Kminus = make_circle_K(d.H, i, 1, i, 1);
    d.Kplus = make_circle_K(d.H, j, params.k, j, params.k + 1);
    d.L = 1.0;
    if (params.k == 1) d.alias = "W2 (alternate presentation)";
  } else if (name == "R") {
    d.H = make_qr_H();
    d.Kminus = make_circle_K(d.H, i, 1, i, 2);
    d.Kplus = make_circle_K(d.H, j, 3, j, 1);
    d.L = 1.0;
  } else {
    throw std::invalid_argument("catalog: unknown space " + name);
  }
  return d;
}

std::vector<std::string> catalog_names() {
  return {"S4", "CP2", "S7", "B7", "E_p", "W1", "W2", "P_k", "Q_k", "R"};
}

namespace {

bool axis_aligned_quat(const Quat& q, double tol) {
  int nonzero = 0;
  for (double v : {q.w, q.x, q.y, q.z}) {
    if (std::abs(v) > tol) {
      if (std::abs(std::abs(v) - 1.0) > tol) return false;
      ++nonzero;
    }
  }
  return nonzero == 1;
}

void require_axis_aligned(const FiniteSubgroup& H) {
  for (const GElem& h : H.elements)
    if (!axis_aligned_quat(h.l, 1e-9) || !axis_aligned_quat(h.r, 1e-9))
      throw std::domain_error("weyl_rep: only axis-aligned finite subgroups supported");
}

}  // namespace

GElem weyl_rep(const IsotropyGroup& K, const FiniteSubgroup& H) {
  if (K.kind != ComponentKind::Circle)
    throw std::domain_error("weyl_rep: identity component is not a circle");
  require_axis_aligned(H);
  const CircleGroup& c = K.circle;
  const int m = std::max({std::abs(c.p), std::abs(c.q), 1});
  const double step = kPi / (2.0 * m);
  const int steps = 8 * m;  // covers (0, 2 pi]
  for (int n = 1; n <= steps; ++n) {
    const double t0 = n * step;
    if (H.contains(snap(c.at(t0)), 1e-9)) return c.at(t0 / 2);
  }
  throw std::domain_error("weyl_rep: circle does not meet H within one period");
}

GElem weyl_minus(const GroupDiagram& d) {
  if (d.Kminus.kind == ComponentKind::DiagonalSphere) {
    // unique involution of the 3-sphere slice
    return {{-1, 0, 0, 0}, {-1, 0, 0, 0}};
  }
  return weyl_rep(d.Kminus, d.H);
}

GElem weyl_plus(const GroupDiagram& d) { return weyl_rep(d.Kplus, d.H); }

int weyl_order(const GroupDiagram& d) {
  const GElem a = weyl_plus(d) * weyl_minus(d);
  GElem pw = a;
  for (int n = 1; n <= 1000; ++n) {
    if (d.H.contains(snap(pw), 1e-9)) return 2 * n;
    pw = pw * a;
  }
  throw std::domain_error("weyl_order: no power of w+ w- lands in H within bound 1000");
}

}  // namespace cohom1
