#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "cohom1/classify.hpp"
#include "doctest.h"

using namespace cohom1;

TEST_CASE("slope conditions at a single singular orbit") {
  CHECK(lemma_ab(2, 1, 2));    // |p - q| = 1
  CHECK_FALSE(lemma_ab(3, 1, 2));
  CHECK(lemma_ab(1, 1, 4));    // (p, q) = (+-1, +-1)
  CHECK(lemma_ab(1, -3, 4));   // |2p + 2q| = 4
  CHECK_FALSE(lemma_ab(1, 5, 4));
  CHECK_FALSE(lemma_ab(2, 1, 1));  // weight 1 never survives
  CHECK_THROWS_AS(lemma_ab(2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(lemma_ab(2, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(lemma_ab(0, 1, 2), std::invalid_argument);
}

TEST_CASE("minimum slope condition across the two ends") {
  CHECK(lemma_c({1, 1}, {3, -1}));
  CHECK(lemma_c({1, 3}, {2, 1}));
  CHECK_FALSE(lemma_c({3, 5}, {2, 7}));
}

TEST_CASE("normal weights from H and the slope parities") {
  CHECK(normal_weight(Family::EX1A, false, {2, 1}) == 1);
  CHECK(normal_weight(Family::EX1B, false, {2, 1}) == 2);
  CHECK(normal_weight(Family::EX3, true, {1, 3}) == 4);
  CHECK(normal_weight(Family::EX3, false, {2, 1}) == 2);
  CHECK(normal_weight(Family::EX4, true, {1, -3}) == 4);
  CHECK(normal_weight(Family::EX2, false, {3, 5}) == 2);
  CHECK(normal_weight(Family::EX2, false, {2, 1}) == 1);
}

TEST_CASE("family EX1A is excluded by the weight-1 condition") {
  CHECK(enumerate_family(Family::EX1A, 10).survivors.empty());
}

TEST_CASE("family EX1B survives exactly on |p +- q| = 1") {
  const ClassificationResult r = enumerate_family(Family::EX1B, 10);
  CHECK_FALSE(r.survivors.empty());
  for (const Survivor& s : r.survivors) {
    const int p = s.slopes.plus.p, q = s.slopes.plus.q;
    CHECK((std::abs(p + q) == 1 || std::abs(p - q) == 1));
    CHECK(std::abs(p) % 2 == 0);
    CHECK(std::abs(q) % 2 == 1);
    CHECK(s.label.substr(0, 2) == "E_");
  }
  // the homogeneous member appears
  bool has_e1 = false;
  for (const Survivor& s : r.survivors)
    if (s.label == "E_1") has_e1 = true;
  CHECK(has_e1);
}

TEST_CASE("family EX2 is excluded altogether") {
  CHECK(enumerate_family(Family::EX2, 10).survivors.empty());
  CHECK(enumerate_family(Family::EX2, 25).survivors.empty());
}

TEST_CASE("family EX3 yields R and the Q_k family") {
  const ClassificationResult r = enumerate_family(Family::EX3, 10);
  std::set<std::string> labels;
  for (const Survivor& s : r.survivors) labels.insert(s.label);
  CHECK(labels.count("R") == 1);
  for (int p = 1; p <= 9; ++p) CHECK(labels.count("Q_" + std::to_string(p)) == 1);
  CHECK(labels.size() == 10);
  CHECK(r.survivors.size() == 10);

  bool found_r = false;
  const DiagramSlopes r_golden = canonical_form(Family::EX3, {{1, 3}, {2, 1}});
  for (const Survivor& s : r.survivors)
    if (s.label == "R") {
      found_r = true;
      CHECK(s.slopes == r_golden);
    }
  CHECK(found_r);
}

TEST_CASE("family EX4 yields the Berger diagram and the P_k family") {
  const ClassificationResult r = enumerate_family(Family::EX4, 10);
  std::set<std::string> labels;
  for (const Survivor& s : r.survivors) labels.insert(s.label);
  CHECK(labels.count("B7") == 1);
  for (int k = 1; k <= 4; ++k) CHECK(labels.count("P_" + std::to_string(k)) == 1);
  CHECK(r.survivors.size() == 5);
  for (const Survivor& s : r.survivors)
    if (s.label == "B7")
      CHECK(s.slopes == canonical_form(Family::EX4, {{1, -3}, {-3, 1}}));
}

TEST_CASE("survivors are independent of the filter order") {
  for (Family f : {Family::EX1B, Family::EX3, Family::EX4}) {
    const auto a = enumerate_family(f, 15, false).survivors;
    const auto b = enumerate_family(f, 15, true).survivors;
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].slopes == b[i].slopes);
      CHECK(a[i].label == b[i].label);
    }
  }
}

TEST_CASE("canonical forms are orbit invariants") {
  // same subgroup, reparameterized circle
  CHECK(canonical_form(Family::EX4, {{1, 1}, {3, -1}}) ==
        canonical_form(Family::EX4, {{-1, -1}, {-3, 1}}));
  // factor swap
  CHECK(canonical_form(Family::EX3, {{1, 3}, {2, 1}}) ==
        canonical_form(Family::EX3, {{3, 1}, {1, 2}}));
  // end reversal for the symmetric family
  CHECK(canonical_form(Family::EX4, {{1, -3}, {-3, 1}}) ==
        canonical_form(Family::EX4, {{-3, 1}, {1, -3}}));
}

TEST_CASE("frame bundle slope bookkeeping") {
  const BundleSlopes b3 = bundle_slopes(3);
  CHECK(b3.frame_left == std::array<int, 3>{1, 1, 3});
  CHECK(b3.frame_right == std::array<int, 3>{3, -5, 1});
  CHECK(b3.selfdual_right == SlopePair{3, -5});
  CHECK(b3.antiselfdual_right == SlopePair{3, 1});

  // k = 3 anti-self-dual slopes are the Berger slopes up to sign
  CHECK(std::abs(b3.antiselfdual_left.p) == 1);
  CHECK(std::abs(b3.antiselfdual_left.q) == 3);

  // k = 4 anti-self-dual slopes halve to the exceptional diagram R
  const BundleSlopes b4 = bundle_slopes(4);
  const SlopePair halved{b4.antiselfdual_right.p / 2, b4.antiselfdual_right.q / 2};
  CHECK(canonical_form(Family::EX3, {b4.antiselfdual_left, halved}) ==
        canonical_form(Family::EX3, {{1, 3}, {2, 1}}));

  for (int k = 1; k <= 10; ++k)
    CHECK(lemma_c(bundle_slopes(k).selfdual_left, bundle_slopes(k).selfdual_right));

  // odd k matches P_(k+1)/2, even k matches Q_(k/2)
  for (int m = 1; m <= 4; ++m) {
    const BundleSlopes bo = bundle_slopes(2 * m - 1);
    CHECK(canonical_form(Family::EX4, {bo.selfdual_left, bo.selfdual_right}) ==
          canonical_form(Family::EX4, {{1, 1}, {1 + 2 * m, 1 - 2 * m}}));
    const BundleSlopes be = bundle_slopes(2 * m);
    const SlopePair h{be.selfdual_right.p / 2, be.selfdual_right.q / 2};
    CHECK(canonical_form(Family::EX3, {be.selfdual_left, h}) ==
          canonical_form(Family::EX3, {{1, 1}, {m, m + 1}}));
  }
}
