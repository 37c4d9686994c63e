#pragma once

#include <array>
#include <string>
#include <vector>

namespace cohom1 {

// Slope arithmetic for circle subgroups (e^{ipt}, e^{iqt}) of S^3 x S^3
// at a singular orbit, and the case analysis that pins down which group
// diagrams survive the positive-curvature obstructions.

struct SlopePair {
  int p = 0, q = 0;
  bool operator==(const SlopePair&) const = default;
};

struct DiagramSlopes {
  SlopePair minus, plus;
  bool operator==(const DiagramSlopes&) const = default;
};

// Slope condition at one singular orbit with normal weight k
// (k = |H meet K0|):
//   k >= 2, and k = 2 forces |p+q| = 1 or |p-q| = 1;
//   k > 2 forces (p,q) = (+-1,+-1) or |2p+2q| = k or |2p-2q| = k.
// Requires p, q nonzero coprime and k >= 1.
bool lemma_ab(int p, int q, int k);

// min(|p+|, |p-|) = 1 and min(|q+|, |q-|) = 1.
bool lemma_c(const SlopePair& minus, const SlopePair& plus);

// The five primitive diagram families with G = S^3 x S^3 on 7-manifolds.
enum class Family { EX1A, EX1B, EX2, EX3, EX4 };

Family parse_family(const std::string& name);
std::string family_name(Family f);

// Exact normal weight |H meet K0| for the family's H and an axis-aligned
// circle with the given slopes (1, 2 or 4).
int normal_weight(Family f, bool minus_side, const SlopePair& s);

// Congruence / parity constraints the family template places on a side.
bool side_congruence(Family f, bool minus_side, const SlopePair& s);

// Canonical representative of a diagram's equivalence class under the
// sign flips, factor swap and end reversal available for the family's H.
DiagramSlopes canonical_form(Family f, const DiagramSlopes& d);
SlopePair canonical_pair_ex1(const SlopePair& s);

struct Survivor {
  DiagramSlopes slopes;  // canonical form; EX1A/EX1B put the circle in `plus`
  std::string label;     // E_m, Q_k, P_k, R, B7 or none
};

struct ExclusionStats {
  long zero_slope_product_lemma = 0;  // zero slopes, ruled out by the product lemma
  long not_coprime = 0;
  long congruence = 0;
  long weight_or_lemma_ab = 0;
  long lemma_c = 0;
  long not_group_primitive = 0;  // both sides diagonal (1,1)
};

struct ClassificationResult {
  Family family = Family::EX1A;
  std::vector<Survivor> survivors;  // deduplicated canonical forms, sorted
  ExclusionStats excluded;
};

// Enumerate all slope assignments with |p|, |q| <= bound, apply the
// congruences, the weight conditions, lemma_ab on both sides, lemma_c and
// the primitivity exclusions, then deduplicate up to equivalence.
// reverse_filter_order reverses the filter sequence (the survivor set
// must not depend on it).
ClassificationResult enumerate_family(Family f, int bound, bool reverse_filter_order = false);

// Slope bookkeeping for the frame-bundle construction over the orbifold
// O_k: circle slopes in so(3)+so(4) are (1,-1,2) / (k,-k,-2); under
// so(4) -> so(3)+so(3) a slope (p,q) circle maps to (p+q,-p+q).
struct BundleSlopes {
  std::array<int, 3> frame_left{}, frame_right{};
  SlopePair selfdual_left, selfdual_right;
  SlopePair antiselfdual_left, antiselfdual_right;
};

BundleSlopes bundle_slopes(int k);

}  // namespace cohom1
