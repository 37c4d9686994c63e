#include "cohom1/oracles.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace cohom1 {

namespace {

// ---- small dense matrices -------------------------------------------------

template <int N>
struct Mat {
  double a[N][N] = {};
  double& operator()(int r, int c) { return a[r][c]; }
  double operator()(int r, int c) const { return a[r][c]; }
};

template <int N>
Mat<N> operator*(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> z;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      double s = 0;
      for (int m = 0; m < N; ++m) s += x(r, m) * y(m, c);
      z(r, c) = s;
    }
  return z;
}

template <int N>
Mat<N> operator-(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> z;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) z(r, c) = x(r, c) - y(r, c);
  return z;
}

template <int N>
Mat<N> operator+(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> z;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) z(r, c) = x(r, c) + y(r, c);
  return z;
}

template <int N>
Mat<N> scale(const Mat<N>& x, double s) {
  Mat<N> z;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) z(r, c) = s * x(r, c);
  return z;
}

template <int N>
double trace_prod(const Mat<N>& x, const Mat<N>& y) {
  double s = 0;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) s += x(r, c) * y(c, r);
  return s;
}

template <int N>
Mat<N> comm(const Mat<N>& x, const Mat<N>& y) {
  return x * y - y * x;
}

template <int N>
Mat<N> skew_basis(int i, int j) {  // e_i e_j^T - e_j e_i^T
  Mat<N> z;
  z(i, j) = 1;
  z(j, i) = -1;
  return z;
}

// ---- S4 oracle ------------------------------------------------------------

Mat<3> sym_basis_e(int which) {
  Mat<3> z;
  switch (which) {
    case 1:
      z(0, 0) = z(1, 1) = 1.0 / std::sqrt(6.0);
      z(2, 2) = -2.0 / std::sqrt(6.0);
      break;
    case 2:
      z(0, 0) = 1.0 / std::sqrt(2.0);
      z(1, 1) = -1.0 / std::sqrt(2.0);
      break;
    case 3:
      z(0, 1) = z(1, 0) = 1.0 / std::sqrt(2.0);
      break;
    case 4:
      z(0, 2) = z(2, 0) = 1.0 / std::sqrt(2.0);
      break;
    case 5:
      z(1, 2) = z(2, 1) = 1.0 / std::sqrt(2.0);
      break;
  }
  return z;
}

}  // namespace

std::array<double, 3> s4_action_norms(double t) {
  const Mat<3> gamma = scale(sym_basis_e(1), std::cos(t)) + scale(sym_basis_e(2), std::sin(t));
  const Mat<3> E12 = skew_basis<3>(0, 1), E23 = skew_basis<3>(1, 2), E13 = skew_basis<3>(0, 2);
  auto norm2 = [&](const Mat<3>& E) {
    const Mat<3> X = comm(E, gamma);
    return trace_prod(X, X);
  };
  return {norm2(E12), norm2(E23), norm2(E13)};
}

namespace {

// ---- B7 oracle ------------------------------------------------------------

double q_so5(const Mat<5>& A, const Mat<5>& B) { return -0.5 * trace_prod(A, B); }

Mat<5> rot12(double t) {  // exp(-t F_12)
  Mat<5> R;
  for (int m = 0; m < 5; ++m) R(m, m) = 1;
  R(0, 0) = std::cos(t);
  R(0, 1) = -std::sin(t);
  R(1, 0) = std::sin(t);
  R(1, 1) = std::cos(t);
  return R;
}

Mat<5> transpose5(const Mat<5>& x) {
  Mat<5> z;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) z(r, c) = x(c, r);
  return z;
}

}  // namespace

std::array<double, 3> b7_action_norms(double t) {
  const Mat<5> F23 = skew_basis<5>(1, 2), F45 = skew_basis<5>(3, 4);
  const Mat<5> H1 = scale(F23, 2.0) + F45;
  const double h1n2 = q_so5(H1, H1);  // = 5
  const Mat<5> R = rot12(t), Rt = transpose5(R);
  const Mat<5> Xbar = R * (F23 + F45) * Rt;
  const Mat<5> Ybar = R * (scale(F23, -1.0) + F45) * Rt;
  const double cx = q_so5(Xbar, H1), cy = q_so5(Ybar, H1);
  const double f1 = q_so5(Xbar, Xbar) - cx * cx / h1n2;
  const double g1 = q_so5(Ybar, Ybar) - cy * cy / h1n2;
  const double h1 = q_so5(Xbar, Ybar) - cx * cy / h1n2;
  return {f1, g1, h1};
}

namespace {

// ---- Eschenburg oracle ------------------------------------------------------

using C = std::complex<double>;

struct CMat {
  C a[3][3] = {};
  C& operator()(int r, int c) { return a[r][c]; }
  C operator()(int r, int c) const { return a[r][c]; }
};

CMat operator*(const CMat& x, const CMat& y) {
  CMat z;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      C s = 0;
      for (int m = 0; m < 3; ++m) s += x(r, m) * y(m, c);
      z(r, c) = s;
    }
  return z;
}

CMat operator+(const CMat& x, const CMat& y) {
  CMat z;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) z(r, c) = x(r, c) + y(r, c);
  return z;
}

CMat cscale(const CMat& x, C s) {
  CMat z;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) z(r, c) = s * x(r, c);
  return z;
}

double q_su3(const CMat& x, const CMat& y) {
  C tr = 0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) tr += x(r, c) * y(c, r);
  return -0.5 * tr.real();
}

CMat cdiag(C d0, C d1, C d2) {
  CMat z;
  z(0, 0) = d0;
  z(1, 1) = d1;
  z(2, 2) = d2;
  return z;
}

CMat real_skew(int i, int j) {  // E_ij
  CMat z;
  z(i, j) = 1;
  z(j, i) = -1;
  return z;
}

CMat imag_sym(int i, int j) {  // I_ij
  CMat z;
  z(i, j) = C(0, 1);
  z(j, i) = C(0, 1);
  return z;
}

CMat crot13(double t) {  // exp(-t E_13)
  CMat R = cdiag(1, 1, 1);
  R(0, 0) = std::cos(t);
  R(0, 2) = std::sin(t);
  R(2, 0) = -std::sin(t);
  R(2, 2) = std::cos(t);
  return R;
}

CMat cdagger(const CMat& x) {
  CMat z;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) z(r, c) = std::conj(x(c, r));
  return z;
}

struct EpsForm {
  double eps;
  CMat kb[4];  // orthonormal basis of the scaled u(2) subalgebra
  double inner(const CMat& x, const CMat& y) const {
    double s = q_su3(x, y);
    for (const CMat& b : kb) s += (eps - 1) * q_su3(x, b) * q_su3(y, b);
    return s;
  }
};

EpsForm make_eps_form(double eps) {
  EpsForm q;
  q.eps = eps;
  q.kb[0] = cdiag(C(0, 1), C(0, -1), 0);
  q.kb[1] = cscale(cdiag(C(0, 1), C(0, 1), C(0, -2)), 1.0 / std::sqrt(3.0));
  q.kb[2] = real_skew(0, 1);
  q.kb[3] = imag_sym(0, 1);
  return q;
}

}  // namespace

EschenburgDetails eschenburg_details(int p, double eps, double t) {
  if (p < 1) throw std::domain_error("eschenburg oracle: p >= 1");
  if (eps <= 0 || eps >= 1) throw std::domain_error("eschenburg oracle: eps in (0,1)");
  const EpsForm q = make_eps_form(eps);
  const CMat R = crot13(t), Rd = cdagger(R);
  auto ad = [&](const CMat& x) { return R * x * Rd; };

  const CMat Xb1 = ad(cdiag(C(0, 1), C(0, -1), 0));
  const CMat Xb2 = ad(real_skew(0, 1));
  const CMat Xb3 = ad(imag_sym(0, 1));
  const CMat Yb1 = cscale(cdiag(C(0, 1), C(0, -1), 0), -1.0);
  const CMat Yb2 = cscale(real_skew(0, 1), -1.0);
  const CMat Yb3 = cscale(imag_sym(0, 1), -1.0);

  const CMat v = ad(cdiag(C(0, 1), C(0, 1), C(0, p))) + cdiag(0, 0, C(0, -(p + 2.0)));

  EschenburgDetails out;
  out.v_norm2 = q.inner(v, v);
  if (out.v_norm2 < 1e-12) throw std::domain_error("eschenburg oracle: degenerate vertical vector");
  const double c2 = std::cos(t) * std::cos(t), s2 = std::sin(t) * std::sin(t);
  out.v_norm2_closed =
      3 * eps + (1.0 - p) * (1.0 - p) * (1 - eps) * c2 * s2 + eps * (p + 2.0) * (p - 1.0) * s2;

  out.horizontality = 0;
  for (const CMat* m : {&Xb2, &Xb3, &Yb2, &Yb3})
    out.horizontality = std::max(out.horizontality, std::abs(q.inner(*m, v)));

  auto project = [&](const CMat& x) {
    return x + cscale(v, -q.inner(x, v) / out.v_norm2);
  };
  const CMat X1 = project(Xb1), Y1 = project(Yb1);
  const CMat* Xs[3] = {&X1, &Xb2, &Xb3};
  const CMat* Ys[3] = {&Y1, &Yb2, &Yb3};

  for (int m = 0; m < 3; ++m) {
    out.blocks.f[m] = q.inner(*Xs[m], *Xs[m]);
    out.blocks.g[m] = q.inner(*Ys[m], *Ys[m]);
    out.blocks.h[m] = q.inner(*Xs[m], *Ys[m]);
  }

  out.max_cross_product = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a != b) {
        out.max_cross_product = std::max(out.max_cross_product, std::abs(q.inner(*Xs[a], *Xs[b])));
        out.max_cross_product = std::max(out.max_cross_product, std::abs(q.inner(*Ys[a], *Ys[b])));
        out.max_cross_product = std::max(out.max_cross_product, std::abs(q.inner(*Xs[a], *Ys[b])));
      }
    }
  return out;
}

MetricBlocks eschenburg_oracle(int p, double eps, double t) {
  return eschenburg_details(p, eps, t).blocks;
}

}  // namespace cohom1
