#pragma once

#include <array>
#include <string>
#include <vector>

#include "cohom1/groups.hpp"

namespace cohom1 {

// Spaces with explicit metric functions.
enum class Space { S4, CP2, S7, B7, Ep, W1, W2 };

Space parse_space(const std::string& name);
std::string space_name(Space s);
bool space_needs_p(Space s);
bool space_needs_eps(Space s);
// true when the metric is diagonal on the action-field basis (g = h = 0)
bool space_is_diagonal(Space s);

// How the nine functions continue past [0, L]:
//   Cyclic3   f2(t) = f1(t+2L), f3(t) = f1(t+4L) = f1(-t+2L)   (plot range 3L)
//   Reflect2  f3(t) = f1(t+2L) = f1(-t+2L), f2 even             (plot range 2L)
//   Modified4 Reflect2 for f,g; h3(t) = -h1(-t+2L) = h1(t+2L)   (plot range 4L)
//   Even2     all functions even at t = 0; f,g,h1 even at t = L,
//             h2,h3 odd at t = L                                 (plot range 4L)
enum class SymmetryRule { Cyclic3, Reflect2, Modified4, Even2 };

struct ProfileParams {
  int p = 10;        // E_p
  double eps = 0.5;  // E_p, W1, W2
};

// Squared lengths f_i = |X_i*|^2, g_i = |Y_i*|^2 and the mixed products
// h_i = <X_i*, Y_i*> of the action-field basis along the normal geodesic.
// All other inner products vanish and are represented as exact zeros.
struct MetricBlocks {
  std::array<double, 3> f{}, g{}, h{};
};

struct MetricProfile {
  Space space = Space::S4;
  ProfileParams params;
  double L = 0;
  SymmetryRule rule = SymmetryRule::Cyclic3;
};

MetricProfile make_profile(Space space, const ProfileParams& params = {});
double extend_range(const MetricProfile& pr);  // 3L / 2L / 4L by rule

// Closed forms at any t (they are globally defined trigonometric
// expressions); range checking is done by the two public entry points.
MetricBlocks eval_raw(const MetricProfile& pr, double t);

MetricBlocks eval_profile(const MetricProfile& pr, double t);    // t in [0, L]
MetricBlocks extend_profile(const MetricProfile& pr, double t);  // t in [0, extend_range]

struct InverseBlock {
  double F = 0, G = 0, H = 0;
};

// Inverse of [[f_i, h_i], [h_i, g_i]]: (F, G, H) = (g, f, -h) / det.
// Diagonal spaces degenerate to F = 1/f_i, G = H = 0.  Throws on
// singular blocks (det <= 1e-14), which happens exactly at collapse points.
InverseBlock inverse_block(const MetricProfile& pr, int index, double t);

enum class OrbitEnd { Minus, Plus };

struct CollapseDirection {
  int index = 1;  // which (f_i, g_i, h_i) block
  int a = 1, b = 0;
  double residual = 0;  // |a^2 f + 2ab h + b^2 g| at the end point
};

// Slope pair(s) of the collapsing circle at a singular orbit.  The
// 3-sphere end of E_p collapses all three diagonal directions and
// returns (1,1) for every index.
std::vector<CollapseDirection> collapse_directions(const MetricProfile& pr, OrbitEnd end);

// Group diagram matching a metric profile.
GroupDiagram profile_diagram(const MetricProfile& pr);

}  // namespace cohom1
