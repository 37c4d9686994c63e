#include "cohom1/classify.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace cohom1 {

bool lemma_ab(int p, int q, int k) {
  if (k < 1) throw std::invalid_argument("lemma_ab: k >= 1");
  if (p == 0 || q == 0 || std::gcd(std::abs(p), std::abs(q)) != 1)
    throw std::invalid_argument("lemma_ab: slopes must be nonzero and coprime");
  if (k < 2) return false;
  if (k == 2) return std::abs(p + q) == 1 || std::abs(p - q) == 1;
  if (std::abs(p) == 1 && std::abs(q) == 1) return true;
  return std::abs(2 * (p + q)) == k || std::abs(2 * (p - q)) == k;
}

bool lemma_c(const SlopePair& minus, const SlopePair& plus) {
  return std::min(std::abs(plus.p), std::abs(minus.p)) == 1 &&
         std::min(std::abs(plus.q), std::abs(minus.q)) == 1;
}

Family parse_family(const std::string& name) {
  std::string n;
  for (char c : name) n.push_back(char(std::toupper(c)));
  if (n == "EX1A") return Family::EX1A;
  if (n == "EX1B") return Family::EX1B;
  if (n == "EX2") return Family::EX2;
  if (n == "EX3") return Family::EX3;
  if (n == "EX4") return Family::EX4;
  throw std::invalid_argument("unknown family template: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::EX1A: return "EX1A";
    case Family::EX1B: return "EX1B";
    case Family::EX2: return "EX2";
    case Family::EX3: return "EX3";
    case Family::EX4: return "EX4";
  }
  return "?";
}

namespace {

// H as a set of symbolic grid elements: components of every H element are
// +-1 or +-axis, encoded as exponents of i: element (i^a, i^b) with the
// circle axis playing the role of i.  a, b in {0,1,2,3}; the axis-j
// circles of the plus side only ever meet the (+-1, +-1) part of H plus
// the (+-j, +-j) part when the family's H contains the circle axis.
//
// The weight is the number of m in {0..3} with (axis^(p m), axis^(q m))
// in H, where axis^2 = -1.

struct GridElem {
  int a = 0, b = 0;  // exponents mod 4 of the circle axis in each factor
};

// H membership for exponent pairs, per family and circle axis.
// minus circles sit on axis i, plus circles on axis j.
bool grid_in_H(Family f, bool axis_is_i, int a, int b) {
  a &= 3;
  b &= 3;
  const bool real_a = (a % 2 == 0), real_b = (b % 2 == 0);
  auto sign = [](int e) { return e == 0 ? +1 : -1; };  // for even exponents: axis^0=1, axis^2=-1
  switch (f) {
    case Family::EX1A:
      return a == 0 && b == 0;
    case Family::EX1B:
      // H = {(1,1), (1,-1)}
      if (!real_a || !real_b) return false;
      return sign(a) == 1;
    case Family::EX2:
      // H = <(i,i)> = {(1,1),(i,i),(-1,-1),(-i,-i)}
      if (axis_is_i) return a == b;
      // axis j: only the real part {(1,1),(-1,-1)} is reachable
      return real_a && real_b && sign(a) == sign(b);
    case Family::EX3:
      // H = {(+-1,+-1), (+-i,+-i)}
      if (axis_is_i) return real_a == real_b;
      return real_a && real_b;
    case Family::EX4:
      // H = Delta Q = {(x, x) : x in Q} contains every (axis^a, axis^a)
      (void)axis_is_i;
      return a == b;
  }
  return false;
}

}  // namespace

int normal_weight(Family f, bool minus_side, const SlopePair& s) {
  const bool axis_is_i = minus_side;  // catalog convention: K- on axis i, K+ on axis j
  int count = 0;
  for (int m = 0; m < 4; ++m)
    if (grid_in_H(f, axis_is_i, s.p * m, s.q * m)) ++count;
  return count;
}

bool side_congruence(Family f, bool minus_side, const SlopePair& s) {
  const bool p_odd = std::abs(s.p) % 2 == 1, q_odd = std::abs(s.q) % 2 == 1;
  switch (f) {
    case Family::EX1A:
      return !minus_side;  // minus side is the diagonal 3-sphere
    case Family::EX1B:
      return !minus_side && !p_odd && q_odd;
    case Family::EX2:
      if (minus_side) return p_odd && q_odd && ((s.p - s.q) % 4 == 0);
      return true;
    case Family::EX3:
      if (minus_side) return p_odd && q_odd;
      return !p_odd && q_odd;
    case Family::EX4:
      return p_odd && q_odd && ((s.p - s.q) % 4 == 0);
  }
  return false;
}

namespace {

// total order with positive entries before negative ones at equal size
long key_int(int n) { return 2L * std::abs(n) - (n > 0 ? 1 : 0); }

std::array<long, 4> key_of(const DiagramSlopes& d) {
  return {key_int(d.minus.p), key_int(d.minus.q), key_int(d.plus.p), key_int(d.plus.q)};
}

// sign-flip freedom per family: per-slot flips whenever they preserve the
// family's H (EX1A, EX3, and the plus side of EX2), joint per-side flips
// otherwise; the parameterization sign of each circle is free in all cases.
void orbit_variants(Family f, const DiagramSlopes& d, std::vector<DiagramSlopes>* out) {
  const bool per_slot = (f == Family::EX1A || f == Family::EX3);
  for (int mask = 0; mask < 16; ++mask) {
    DiagramSlopes v = d;
    if (mask & 1) v.minus.p = -v.minus.p;
    if (mask & 2) v.minus.q = -v.minus.q;
    if (mask & 4) v.plus.p = -v.plus.p;
    if (mask & 8) v.plus.q = -v.plus.q;
    if (!per_slot) {
      const bool minus_joint = ((mask & 1) != 0) == ((mask & 2) != 0);
      bool plus_joint = ((mask & 4) != 0) == ((mask & 8) != 0);
      if (f == Family::EX2) plus_joint = true;  // plus flips are free for EX2
      if (!minus_joint || !plus_joint) continue;
    }
    out->push_back(v);
  }
}

bool swap_allowed(Family f) { return f != Family::EX1B; }
bool reversal_allowed(Family f) { return f == Family::EX4; }

}  // namespace

DiagramSlopes canonical_form(Family f, const DiagramSlopes& d) {
  std::vector<DiagramSlopes> base{d};
  if (swap_allowed(f)) {
    base.push_back({{d.minus.q, d.minus.p}, {d.plus.q, d.plus.p}});
  }
  if (reversal_allowed(f)) {
    const size_t n = base.size();
    for (size_t m = 0; m < n; ++m) base.push_back({base[m].plus, base[m].minus});
  }
  std::vector<DiagramSlopes> orbit;
  for (const DiagramSlopes& b : base) orbit_variants(f, b, &orbit);
  const DiagramSlopes* best = &orbit[0];
  for (const DiagramSlopes& v : orbit)
    if (key_of(v) < key_of(*best)) best = &v;
  return *best;
}

SlopePair canonical_pair_ex1(const SlopePair& s) {
  const SlopePair flipped{-s.p, -s.q};
  const std::array<long, 2> ka{key_int(s.p), key_int(s.q)};
  const std::array<long, 2> kb{key_int(flipped.p), key_int(flipped.q)};
  return ka <= kb ? s : flipped;
}

namespace {

std::string assign_label(Family f, const DiagramSlopes& c) {
  switch (f) {
    case Family::EX1A:
      return "none";
    case Family::EX1B:
      return "E_" + std::to_string(std::min(std::abs(c.plus.p), std::abs(c.plus.q)));
    case Family::EX2:
      return "none";
    case Family::EX3: {
      if (c == canonical_form(f, {{1, 3}, {2, 1}})) return "R";
      if (c.minus == SlopePair{1, 1} && c.plus.q == c.plus.p + 1 && c.plus.p >= 1)
        return "Q_" + std::to_string(c.plus.p);
      return "none";
    }
    case Family::EX4: {
      if (c == canonical_form(f, {{1, -3}, {-3, 1}})) return "B7";
      if (c.minus == SlopePair{1, 1}) {
        // canonical form of (1+2k, 1-2k)
        for (int k = 1; 2 * k + 1 <= std::abs(c.plus.p) + std::abs(c.plus.q); ++k)
          if (c == canonical_form(f, {{1, 1}, {1 + 2 * k, 1 - 2 * k}}))
            return "P_" + std::to_string(k);
      }
      return "none";
    }
  }
  return "none";
}

struct SideCandidate {
  SlopePair s;
};

bool diagonal_pair(const SlopePair& s) { return std::abs(s.p) == 1 && std::abs(s.q) == 1; }

}  // namespace

ClassificationResult enumerate_family(Family f, int bound, bool reverse_filter_order) {
  if (bound < 3) throw std::invalid_argument("enumerate_family: bound >= 3");
  ClassificationResult res;
  res.family = f;

  const bool one_sided = (f == Family::EX1A || f == Family::EX1B);

  // pre-filter one side: zero slopes and non-coprime pairs never survive
  auto side_list = [&](bool minus_side, bool apply_congruence) {
    std::vector<SlopePair> out;
    for (int p = -bound; p <= bound; ++p)
      for (int q = -bound; q <= bound; ++q) {
        if (p == 0 || q == 0) {
          res.excluded.zero_slope_product_lemma += (p != 0 || q != 0) ? 1 : 0;
          continue;
        }
        if (std::gcd(std::abs(p), std::abs(q)) != 1) {
          ++res.excluded.not_coprime;
          continue;
        }
        const SlopePair s{p, q};
        if (apply_congruence && !side_congruence(f, minus_side, s)) {
          ++res.excluded.congruence;
          continue;
        }
        out.push_back(s);
      }
    return out;
  };

  struct Raw {
    DiagramSlopes d;
  };
  std::vector<DiagramSlopes> passed;

  auto run_filters = [&](const DiagramSlopes& d) {
    // the individual filters, in the order requested
    auto congruence_ok = [&]() {
      return (one_sided || side_congruence(f, true, d.minus)) && side_congruence(f, false, d.plus);
    };
    auto weights_ok = [&]() {
      if (!one_sided) {
        const int km = normal_weight(f, true, d.minus);
        if (!lemma_ab(d.minus.p, d.minus.q, km)) return false;
      }
      const int kp = normal_weight(f, false, d.plus);
      return lemma_ab(d.plus.p, d.plus.q, kp);
    };
    auto c_ok = [&]() { return one_sided || lemma_c(d.minus, d.plus); };
    auto primitive_ok = [&]() {
      return one_sided || !(diagonal_pair(d.minus) && diagonal_pair(d.plus));
    };

    if (!reverse_filter_order) {
      if (!congruence_ok()) {
        ++res.excluded.congruence;
        return;
      }
      if (!weights_ok()) {
        ++res.excluded.weight_or_lemma_ab;
        return;
      }
      if (!c_ok()) {
        ++res.excluded.lemma_c;
        return;
      }
      if (!primitive_ok()) {
        ++res.excluded.not_group_primitive;
        return;
      }
    } else {
      if (!primitive_ok()) {
        ++res.excluded.not_group_primitive;
        return;
      }
      if (!c_ok()) {
        ++res.excluded.lemma_c;
        return;
      }
      if (!weights_ok()) {
        ++res.excluded.weight_or_lemma_ab;
        return;
      }
      if (!congruence_ok()) {
        ++res.excluded.congruence;
        return;
      }
    }
    passed.push_back(d);
  };

  if (one_sided) {
    for (const SlopePair& s : side_list(false, false)) run_filters({{0, 0}, s});
  } else {
    const auto minus_c = side_list(true, false);
    const auto plus_c = side_list(false, false);
    for (const SlopePair& m : minus_c)
      for (const SlopePair& p : plus_c) run_filters({m, p});
  }

  std::set<std::array<long, 4>> seen;
  for (const DiagramSlopes& d : passed) {
    DiagramSlopes c;
    if (one_sided) {
      c.minus = {0, 0};
      c.plus = canonical_pair_ex1(d.plus);
    } else {
      c = canonical_form(f, d);
    }
    const auto key = key_of(c);
    if (seen.insert(key).second) res.survivors.push_back({c, assign_label(f, c)});
  }
  std::sort(res.survivors.begin(), res.survivors.end(),
            [](const Survivor& a, const Survivor& b) { return key_of(a.slopes) < key_of(b.slopes); });
  return res;
}

BundleSlopes bundle_slopes(int k) {
  if (k < 1) throw std::invalid_argument("bundle_slopes: k >= 1");
  BundleSlopes b;
  // so(3) x so(4) slopes (1,-1,2) and (k,-k,-2); the so(4) part (p,q)
  // projects to (p+q, -p+q) on the two so(3) factors.
  b.frame_left = {1, 1, 3};            // (1, -1+2, 1+2)
  b.frame_right = {k, -(k + 2), k - 2};
  b.selfdual_left = {1, 1};
  b.selfdual_right = {k, -(k + 2)};
  b.antiselfdual_left = {1, 3};
  b.antiselfdual_right = {k, k - 2};
  return b;
}

}  // namespace cohom1
