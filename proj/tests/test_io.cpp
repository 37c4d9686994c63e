#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numbers>
#include <random>

#include "cohom1/io.hpp"
#include "cohom1/sampling.hpp"
#include "doctest.h"

using namespace cohom1;

TEST_CASE("csv round-trips arbitrary doubles at full precision") {
  std::mt19937_64 rng(20260810);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-30, 30);
  Csv csv;
  csv.header = {"a", "b", "c"};
  for (int i = 0; i < 200; ++i) {
    std::vector<double> row;
    for (int j = 0; j < 3; ++j) row.push_back(std::ldexp(mant(rng), expo(rng)));
    csv.rows.push_back(row);
  }
  const Csv back = csv_parse(csv_format(csv));
  REQUIRE(back.rows.size() == csv.rows.size());
  for (size_t i = 0; i < csv.rows.size(); ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(back.rows[i][j] == csv.rows[i][j]);
}

TEST_CASE("emission is byte deterministic") {
  const MetricProfile pr = make_profile(Space::B7);
  const Csv a = sample_profile(pr, 0, 3 * pr.L, 64);
  const Csv b = sample_profile(pr, 0, 3 * pr.L, 64);
  CHECK(csv_format(a) == csv_format(b));
  CHECK(svg_render(a, figure_spec(3)) == svg_render(b, figure_spec(3)));
}

TEST_CASE("sampled profile starts at the collapse") {
  const MetricProfile pr = make_profile(Space::S4);
  const Csv csv = sample_profile(pr, 0, std::numbers::pi / 3, 5);
  CHECK(csv.rows.size() == 5);
  CHECK(csv.rows[0][csv.column("f1")] == 0.0);
  CHECK(csv.header.size() == 10);
}

TEST_CASE("sampled rows satisfy the cyclic relations") {
  const MetricProfile pr = make_profile(Space::B7);
  const Csv csv = sample_profile(pr, 0, 3 * pr.L, 301);
  const int tcol = csv.column("t");
  for (size_t i = 0; i < csv.rows.size(); ++i) {
    const double t = csv.rows[i][tcol];
    if (t > pr.L) break;
    const MetricBlocks shifted = extend_profile(pr, t + 2 * pr.L);
    CHECK(csv.rows[i][csv.column("f2")] == doctest::Approx(shifted.f[0]).epsilon(1e-13));
    CHECK(csv.rows[i][csv.column("g2")] == doctest::Approx(shifted.g[0]).epsilon(1e-13));
  }
}

TEST_CASE("figure specs select series and reject bad input") {
  const FigureSpec f3 = figure_spec(3);
  CHECK(f3.series == std::vector<std::string>{"f1", "g1", "h1"});
  CHECK(figure_spec(12).parametric);
  CHECK_THROWS_AS(figure_spec(13), std::invalid_argument);

  const MetricProfile pr = make_profile(Space::B7);
  const Csv csv = sample_profile(pr, 0, 3 * pr.L, 33);
  const std::string svg = svg_render(csv, f3);
  CHECK(svg.find("id=\"series-f1\"") != std::string::npos);
  CHECK(svg.find("id=\"series-g1\"") != std::string::npos);
  CHECK(svg.find("id=\"series-h1\"") != std::string::npos);
  CHECK(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);

  FigureSpec empty;
  CHECK_THROWS_AS(svg_render(csv, empty), std::invalid_argument);
  FigureSpec wants_sec = figure_spec(8);
  CHECK_THROWS_AS(svg_render(csv, wants_sec), std::invalid_argument);
}

TEST_CASE("range parser understands the L suffix") {
  double a = 0, b = 0;
  parse_range("0:3L", 0.5, &a, &b);
  CHECK(a == 0.0);
  CHECK(b == doctest::Approx(1.5));
  parse_range("0.25:1.5", 2.0, &a, &b);
  CHECK(a == 0.25);
  CHECK(b == 1.5);
  parse_range("0.5L:L", 2.0, &a, &b);
  CHECK(a == 1.0);
  CHECK(b == 2.0);
  CHECK_THROWS_AS(parse_range("nope", 1.0, &a, &b), std::invalid_argument);
}
