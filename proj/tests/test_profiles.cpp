#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "cohom1/profiles.hpp"
#include "doctest.h"

using namespace cohom1;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("round-sphere functions at t = pi/6") {
  const MetricProfile pr = make_profile(Space::S4);
  const MetricBlocks b = eval_profile(pr, kPi / 6);
  CHECK(b.f[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(b.f[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(b.f[2] == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(b.g[0] == 0.0);  // structural zeros
  CHECK(b.h[2] == 0.0);
}

TEST_CASE("Berger space values at the singular orbit") {
  const MetricProfile pr = make_profile(Space::B7);
  const MetricBlocks b = eval_profile(pr, 0.0);
  CHECK(b.f[0] == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(b.g[0] == doctest::Approx(1.8).epsilon(1e-14));
  CHECK(b.h[0] == doctest::Approx(0.6).epsilon(1e-14));
}

TEST_CASE("biquotient family at t = 0 and the alpha guard") {
  for (int p : {1, 2, 10}) {
    for (double eps : {0.5, 0.9}) {
      const MetricProfile pr = make_profile(Space::Ep, {p, eps});
      const MetricBlocks b = eval_profile(pr, 0.0);
      CAPTURE(p);
      CHECK(b.f[0] == doctest::Approx(eps).epsilon(1e-12));
      CHECK(b.g[0] == doctest::Approx(eps).epsilon(1e-12));
      CHECK(b.h[0] == doctest::Approx(-eps).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(make_profile(Space::Ep, {0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(make_profile(Space::W2, {1, -1.0}), std::invalid_argument);
}

TEST_CASE("second Wallach action collapses at t = L") {
  const double eps = 0.7;
  const MetricProfile pr = make_profile(Space::W2, {1, eps});
  const MetricBlocks b = eval_profile(pr, kPi / 4);
  CHECK(b.f[1] == doctest::Approx(eps).epsilon(1e-13));
  CHECK(b.h[1] == doctest::Approx(-eps).epsilon(1e-13));
  CHECK(b.g[1] == doctest::Approx(eps).epsilon(1e-13));
}

TEST_CASE("extension follows the reflection rules") {
  const MetricProfile s4 = make_profile(Space::S4);
  for (double s : {0.1, 0.4, 0.9}) {
    const double f1_ext = extend_profile(s4, 2 * s4.L + s).f[0];
    const double f2 = eval_profile(s4, s).f[1];
    CHECK(f1_ext == doctest::Approx(f2).epsilon(1e-14));
  }
  const MetricProfile cp2 = make_profile(Space::CP2);
  for (double t : {0.05, 0.3, 0.7}) {
    CHECK(eval_raw(cp2, t).f[2] ==
          doctest::Approx(std::cos(t) * std::cos(t)).epsilon(1e-14));
  }
  const double eps = 0.5;
  const MetricProfile w2 = make_profile(Space::W2, {1, eps});
  for (double t : {0.1, 0.5}) {
    const double h1_ext = extend_profile(w2, t + 2 * w2.L).h[0];
    CHECK(h1_ext == doctest::Approx(-2 * eps * std::sin(t)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(extend_profile(s4, 3 * s4.L + 0.1), std::domain_error);
  CHECK_THROWS_AS(eval_profile(s4, -0.1), std::domain_error);
}

TEST_CASE("inverse blocks and the collapse singularity") {
  const MetricProfile s4 = make_profile(Space::S4);
  CHECK(inverse_block(s4, 1, kPi / 2).F == doctest::Approx(0.25).epsilon(1e-14));
  const MetricProfile b7 = make_profile(Space::B7);
  const InverseBlock ib = inverse_block(b7, 1, kPi / 2);
  CHECK(ib.F == doctest::Approx(9.0 / 16.0).epsilon(1e-13));
  CHECK_THROWS_AS(inverse_block(b7, 1, 0.0), std::domain_error);
  CHECK_THROWS_AS(inverse_block(b7, 4, 0.5), std::invalid_argument);
  // inverse really inverts: (1,1) entry of M^{-1} M
  const MetricBlocks b = eval_raw(b7, 0.8);
  const InverseBlock iv = inverse_block(b7, 1, 0.8);
  CHECK(iv.F * b.f[0] + iv.H * b.h[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("collapse directions carry the circle slopes") {
  const MetricProfile s7 = make_profile(Space::S7);
  const auto cm = collapse_directions(s7, OrbitEnd::Minus);
  REQUIRE(cm.size() == 1);
  CHECK(cm[0].index == 1);
  CHECK(cm[0].a == -3);
  CHECK(cm[0].b == 1);
  CHECK(cm[0].residual < 1e-12);

  const MetricProfile w2 = make_profile(Space::W2, {1, 0.5});
  const auto wm = collapse_directions(w2, OrbitEnd::Minus);
  CHECK(wm[0].a == 1);
  CHECK(wm[0].b == -2);
  CHECK(wm[0].residual < 1e-12);
  const auto wp = collapse_directions(w2, OrbitEnd::Plus);
  CHECK(wp[0].index == 2);
  CHECK(wp[0].a == 1);
  CHECK(wp[0].b == 1);
  CHECK(wp[0].residual < 1e-12);

  const MetricProfile ep = make_profile(Space::Ep, {4, 0.5});
  const auto em = collapse_directions(ep, OrbitEnd::Minus);
  REQUIRE(em.size() == 3);
  for (const CollapseDirection& c : em) {
    CHECK(c.a == 1);
    CHECK(c.b == 1);
    CHECK(c.residual < 1e-12);
  }
  const auto epl = collapse_directions(ep, OrbitEnd::Plus);
  CHECK(epl[0].a == 5);
  CHECK(epl[0].b == 4);
  CHECK(epl[0].residual < 1e-12);
}

TEST_CASE("profile lengths match the catalog diagrams") {
  for (Space s : {Space::S4, Space::CP2, Space::S7, Space::B7, Space::W1, Space::W2}) {
    const MetricProfile pr = make_profile(s, {1, 0.5});
    CHECK(pr.L == doctest::Approx(profile_diagram(pr).L).epsilon(1e-15));
  }
  const MetricProfile ep = make_profile(Space::Ep, {7, 0.5});
  CHECK(ep.L == doctest::Approx(profile_diagram(ep).L).epsilon(1e-15));
}

TEST_CASE("specializing the family at p = 1 gives the first Wallach metric") {
  const MetricProfile e1 = make_profile(Space::Ep, {1, 0.5});
  const MetricProfile w1 = make_profile(Space::W1, {1, 0.5});
  for (int i = 0; i <= 100; ++i) {
    const double t = (kPi / 2) * i / 100;
    const MetricBlocks a = eval_raw(e1, t), b = eval_raw(w1, t);
    for (int m = 0; m < 3; ++m) {
      CHECK(a.f[m] == doctest::Approx(b.f[m]).epsilon(1e-13));
      CHECK(a.g[m] == doctest::Approx(b.g[m]).epsilon(1e-13));
      CHECK(a.h[m] == doctest::Approx(b.h[m]).epsilon(1e-13));
    }
  }
}
