#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "cohom1/groups.hpp"
#include "doctest.h"

using namespace cohom1;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}  // namespace

TEST_CASE("quaternion exponentials hit the expected grid points") {
  const Quat a = quat_exp(Quat::i(), kPi / 2);
  CHECK(quat_dist(a, Quat::i()) < 1e-15);
  const Quat b = quat_exp(Quat::j(), kPi);
  CHECK(quat_dist(b, -Quat::one()) < 1e-15);
  const Quat c = quat_exp(Quat::i(), kPi / 4);
  CHECK(quat_dist(c, {kInvSqrt2, kInvSqrt2, 0, 0}) < 1e-15);
  CHECK_THROWS_AS(quat_exp({0.5, 0.5, 0.5, 0.5}, 1.0), std::domain_error);
  CHECK_THROWS_AS(quat_exp({0, 2, 0, 0}, 1.0), std::domain_error);
}

TEST_CASE("quaternion algebra: associativity and reversed conjugation") {
  // a couple of fixed triples is enough; products stay exactly on grid
  const Quat qs[] = {Quat::i(), quat_exp(Quat::j(), kPi / 4), quat_exp(Quat::k(), kPi / 3),
                     quat_exp(Quat::i(), 0.37)};
  for (const Quat& a : qs)
    for (const Quat& b : qs)
      for (const Quat& c : qs) {
        CHECK(quat_dist((a * b) * c, a * (b * c)) < 1e-14);
        CHECK(quat_dist((a * b).conj(), b.conj() * a.conj()) < 1e-14);
      }
}

TEST_CASE("membership in the diagonal quaternion group") {
  const GroupDiagram s7 = catalog("S7");
  CHECK(in_subgroup({Quat::i(), Quat::i()}, s7.H, 1e-9));
  CHECK_FALSE(in_subgroup({Quat::one(), -Quat::one()}, s7.H, 1e-9));
  const Quat eighth = quat_exp(Quat::i(), kPi / 4);
  CHECK_FALSE(in_subgroup({eighth, eighth}, s7.H, 1e-9));
}

TEST_CASE("catalog diagrams carry the printed data") {
  const GroupDiagram s7 = catalog("S7");
  CHECK(s7.L == doctest::Approx(kPi / 6).epsilon(1e-15));
  CHECK(s7.Kminus.circle.p == -3);
  CHECK(s7.Kminus.circle.q == 1);
  CHECK(quat_dist(s7.Kminus.circle.axis_l, Quat::i()) < 1e-15);
  CHECK(quat_dist(s7.Kplus.circle.axis_l, Quat::j()) < 1e-15);
  CHECK(s7.H.elements.size() == 8);

  const GroupDiagram w2 = catalog("W2");
  CHECK(w2.L == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(w2.Kminus.circle.p == 1);
  CHECK(w2.Kminus.circle.q == -2);
  CHECK(quat_dist(w2.Kplus.circle.axis_l, Quat::j()) < 1e-15);

  DiagramParams q1;
  q1.k = 1;
  CHECK(catalog("Q_k", q1).alias == "W2 (alternate presentation)");
  CHECK_THROWS_AS(catalog("nope"), std::invalid_argument);
  CHECK_THROWS_AS(catalog("E_p", DiagramParams{0, 0}), std::invalid_argument);
}

TEST_CASE("H sits inside both singular isotropy groups") {
  for (const std::string& name : catalog_names()) {
    DiagramParams dp;
    if (name == "E_p") dp.p = 3;
    if (name == "P_k" || name == "Q_k") dp.k = 2;
    const GroupDiagram d = catalog(name, dp);
    for (const GElem& h : d.H.elements) {
      CAPTURE(name);
      CHECK(d.Kminus.contains(h, 1e-9));
      CHECK(d.Kplus.contains(h, 1e-9));
    }
  }
}

TEST_CASE("coset representatives normalize the circle") {
  for (const std::string& name : {"S7", "B7", "W2"}) {
    const GroupDiagram d = catalog(name);
    for (const GElem& rep : d.Kminus.coset_reps) {
      // conjugating the circle axis keeps the circle (up to sign of slope)
      const Quat ax = rep.l * d.Kminus.circle.axis_l * rep.l.conj();
      const double align = std::abs(ax.x * d.Kminus.circle.axis_l.x +
                                    ax.y * d.Kminus.circle.axis_l.y +
                                    ax.z * d.Kminus.circle.axis_l.z);
      CHECK(align == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("weyl representatives match the printed elements") {
  const GroupDiagram s4 = catalog("S4");
  const GElem wm4 = weyl_minus(s4);
  CHECK(quat_dist(wm4.l, {kInvSqrt2, kInvSqrt2, 0, 0}) < 1e-12);
  CHECK(quat_dist(wm4.r, Quat::one()) < 1e-12);

  const GroupDiagram s7 = catalog("S7");
  const GElem wm7 = weyl_minus(s7);
  CHECK(quat_dist(wm7.l, {-kInvSqrt2, -kInvSqrt2, 0, 0}) < 1e-12);
  CHECK(quat_dist(wm7.r, {kInvSqrt2, kInvSqrt2, 0, 0}) < 1e-12);

  DiagramParams dp;
  dp.p = 2;
  const GroupDiagram e2 = catalog("E_p", dp);
  const GElem wp = weyl_plus(e2);  // (i^{p+1}, i^p) = (-i, -1)
  CHECK(quat_dist(wp.l, -Quat::i()) < 1e-12);
  CHECK(quat_dist(wp.r, -Quat::one()) < 1e-12);
  CHECK(quat_dist(weyl_minus(e2).l, -Quat::one()) < 1e-12);
}

TEST_CASE("weyl group orders reproduce the dihedral pattern") {
  CHECK(weyl_order(catalog("S4")) == 6);
  CHECK(weyl_order(catalog("CP2")) == 4);
  CHECK(weyl_order(catalog("S7")) == 12);
  CHECK(weyl_order(catalog("B7")) == 6);
  CHECK(weyl_order(catalog("W2")) == 8);
  for (int p : {1, 2, 7, 20}) {
    DiagramParams dp;
    dp.p = p;
    CHECK(weyl_order(catalog("E_p", dp)) == 4);
  }
  CHECK(weyl_order(catalog("W1")) == 4);
}

TEST_CASE("weyl squares land in H but the representatives do not") {
  for (const std::string& name : catalog_names()) {
    DiagramParams dp;
    if (name == "E_p") dp.p = 5;
    if (name == "P_k" || name == "Q_k") dp.k = 3;
    const GroupDiagram d = catalog(name, dp);
    for (const GElem& w : {weyl_minus(d), weyl_plus(d)}) {
      CAPTURE(name);
      CHECK(d.H.contains(snap(w * w), 1e-9));
      CHECK_FALSE(d.H.contains(snap(w), 1e-9));
    }
  }
}

TEST_CASE("weyl_rep rejects unsupported shapes") {
  const GroupDiagram e1 = catalog("W1");
  CHECK_THROWS_AS(weyl_rep(e1.Kminus, e1.H), std::domain_error);

  // H with an element off the axis grid is rejected loudly
  IsotropyGroup k;
  k.circle = {Quat::i(), 1, Quat::i(), 0};
  k.coset_reps = {gelem_one()};
  FiniteSubgroup h{"tilted",
                   {gelem_one(), {quat_exp(Quat::i(), std::numbers::pi / 4), Quat::one()}}};
  CHECK_THROWS_AS(weyl_rep(k, h), std::domain_error);
}
