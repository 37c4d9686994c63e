#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "cohom1/oracles.hpp"
#include "doctest.h"

using namespace cohom1;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("conjugation-action oracle on the round sphere") {
  CHECK(s4_action_norms(0.0)[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(s4_action_norms(kPi / 2)[0] == doctest::Approx(4.0).epsilon(1e-13));
  const auto v = s4_action_norms(kPi / 6);
  CHECK(v[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(v[1] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(v[2] == doctest::Approx(4.0).epsilon(1e-13));

  const MetricProfile pr = make_profile(Space::S4);
  double dev = 0;
  for (int i = 0; i <= 100; ++i) {
    const double t = pr.L * i / 100;
    const auto o = s4_action_norms(t);
    const MetricBlocks b = eval_raw(pr, t);
    for (int m = 0; m < 3; ++m) dev = std::max(dev, std::abs(o[m] - b.f[m]));
  }
  CHECK(dev < 1e-12);
}

TEST_CASE("so(5) oracle for the Berger space") {
  const auto z = b7_action_norms(0.0);
  CHECK(z[0] == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(z[1] == doctest::Approx(1.8).epsilon(1e-14));
  CHECK(z[2] == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(b7_action_norms(kPi / 2)[2] == doctest::Approx(-0.2).epsilon(1e-13));

  const MetricProfile pr = make_profile(Space::B7);
  double dev = 0, sum_dev = 0;
  for (int i = 0; i <= 100; ++i) {
    const double t = pr.L * i / 100;
    const auto o = b7_action_norms(t);
    const MetricBlocks b = eval_raw(pr, t);
    dev = std::max({dev, std::abs(o[0] - b.f[0]), std::abs(o[1] - b.g[0]),
                    std::abs(o[2] - b.h[0])});
    const double s2 = std::sin(t) * std::sin(t);
    sum_dev = std::max(sum_dev, std::abs(o[0] + o[1] - 2 * (5 + 4 * s2) / 5));
  }
  CHECK(dev < 1e-12);
  CHECK(sum_dev < 1e-12);
}

TEST_CASE("su(3) biquotient oracle") {
  const EschenburgDetails d0 = eschenburg_details(3, 0.5, 0.0);
  CHECK(d0.v_norm2 == doctest::Approx(1.5).epsilon(1e-13));  // 3 eps

  for (int p : {1, 2, 10}) {
    for (double eps : {0.5, 0.9}) {
      const MetricProfile pr = make_profile(Space::Ep, {p, eps});
      double dev = 0, vdev = 0, hor = 0, cross = 0;
      for (int i = 0; i <= 100; ++i) {
        const double t = (kPi / 2) * i / 100;
        const EschenburgDetails d = eschenburg_details(p, eps, t);
        const MetricBlocks b = eval_raw(pr, t);
        for (int m = 0; m < 3; ++m) {
          dev = std::max({dev, std::abs(d.blocks.f[m] - b.f[m]),
                          std::abs(d.blocks.g[m] - b.g[m]), std::abs(d.blocks.h[m] - b.h[m])});
        }
        CHECK(d.blocks.g[1] == doctest::Approx(eps).epsilon(1e-13));
        vdev = std::max(vdev, std::abs(d.v_norm2 - d.v_norm2_closed));
        hor = std::max(hor, d.horizontality);
        cross = std::max(cross, d.max_cross_product);
      }
      CAPTURE(p);
      CAPTURE(eps);
      CHECK(dev < 1e-10);
      CHECK(vdev < 1e-12);
      CHECK(hor < 1e-12);
      CHECK(cross < 1e-12);
    }
  }

  // p = 1 at the identity coset equals the Wallach value
  CHECK(eschenburg_oracle(1, 0.5, 0.0).f[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(eschenburg_details(0, 0.5, 0.1), std::domain_error);
  CHECK_THROWS_AS(eschenburg_details(2, 1.5, 0.1), std::domain_error);
}
