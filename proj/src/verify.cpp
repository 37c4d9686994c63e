#include "cohom1/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>

#include "cohom1/classify.hpp"
#include "cohom1/groups.hpp"
#include "cohom1/hitchin.hpp"
#include "cohom1/io.hpp"
#include "cohom1/oracles.hpp"
#include "cohom1/profiles.hpp"
#include "cohom1/sampling.hpp"

namespace cohom1 {

namespace {

constexpr double kPi = std::numbers::pi;

Check max_check(const std::string& name, double measured, double tol, bool hard = true,
                const std::string& note = "") {
  return {name, hard, measured < tol, false, measured, tol, note};
}

Check min_check(const std::string& name, double measured, double bound, bool hard = true,
                const std::string& note = "") {
  return {name, hard, measured >= bound, true, measured, bound, note};
}

struct ParamCase {
  Space space;
  ProfileParams params;
  std::string tag;
};

std::vector<ParamCase> collapse_cases() {
  std::vector<ParamCase> cases{{Space::S4, {}, "S4"},
                               {Space::CP2, {}, "CP2"},
                               {Space::S7, {}, "S7"},
                               {Space::B7, {}, "B7"}};
  for (int p : {1, 2, 10})
    for (double e : {0.5, 0.9})
      cases.push_back({Space::Ep, {p, e}, "E_" + std::to_string(p) + "/eps=" + std::to_string(e)});
  for (double e : {0.5, 1.0, 2.0}) {
    cases.push_back({Space::W1, {1, e}, "W1/eps=" + std::to_string(e)});
    cases.push_back({Space::W2, {1, e}, "W2/eps=" + std::to_string(e)});
  }
  return cases;
}

double block_min_eigenvalue(const MetricBlocks& b, int m, bool diagonal) {
  if (diagonal) return b.f[m];
  const double tr = b.f[m] + b.g[m];
  const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - (b.f[m] * b.g[m] - b.h[m] * b.h[m])));
  return 0.5 * tr - disc;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Check> verify_weyl() {
  std::vector<Check> out;

  // dihedral orders
  {
    double dev = 0;
    dev = std::max(dev, std::abs(double(weyl_order(catalog("S4")) - 6)));
    dev = std::max(dev, std::abs(double(weyl_order(catalog("CP2")) - 4)));
    dev = std::max(dev, std::abs(double(weyl_order(catalog("S7")) - 12)));
    dev = std::max(dev, std::abs(double(weyl_order(catalog("B7")) - 6)));
    dev = std::max(dev, std::abs(double(weyl_order(catalog("W2")) - 8)));
    out.push_back(max_check("weyl.orders(S4,CP2,S7,B7,W2)=(6,4,12,6,8)", dev, 0.5));
  }
  {
    double dev = 0;
    for (int p = 1; p <= 20; ++p) {
      DiagramParams dp;
      dp.p = p;
      dev = std::max(dev, std::abs(double(weyl_order(catalog("E_p", dp)) - 4)));
    }
    out.push_back(max_check("weyl.order(E_p)=4 for p in 1..20", dev, 0.5));
  }

  // w_+- involution representatives on every catalog diagram
  {
    double worst = 0;
    bool not_in_H_ok = true;
    auto diagrams = [] {
      std::vector<GroupDiagram> ds;
      for (const char* n : {"S4", "CP2", "S7", "B7", "W2", "R"}) ds.push_back(catalog(n));
      for (int p : {1, 2, 10}) {
        DiagramParams dp;
        dp.p = p;
        ds.push_back(catalog("E_p", dp));
      }
      ds.push_back(catalog("W1"));
      for (int k : {1, 2, 3}) {
        DiagramParams dk;
        dk.k = k;
        ds.push_back(catalog("P_k", dk));
        ds.push_back(catalog("Q_k", dk));
      }
      return ds;
    }();
    for (const GroupDiagram& d : diagrams) {
      for (const GElem& w : {weyl_minus(d), weyl_plus(d)}) {
        const GElem w2 = snap(w * w);
        double best = 1e300;
        for (const GElem& h : d.H.elements) best = std::min(best, gelem_dist(w2, h));
        worst = std::max(worst, best);
        if (d.H.contains(snap(w), 1e-6)) not_in_H_ok = false;
      }
    }
    out.push_back(max_check("weyl.(w+-)^2 in H, all catalog diagrams", worst, 1e-9));
    out.push_back(min_check("weyl.w+- not in H, all catalog diagrams", not_in_H_ok ? 1 : 0, 1));
  }

  // translation w+ w- has order exactly |W| / 2
  {
    bool ok = true;
    for (const char* n : {"S4", "CP2", "S7", "B7", "W2"}) {
      const GroupDiagram d = catalog(n);
      const int order = weyl_order(d) / 2;
      const GElem a = weyl_plus(d) * weyl_minus(d);
      GElem pw = a;
      for (int m = 1; m < order; ++m) {
        if (d.H.contains(snap(pw), 1e-9)) ok = false;
        pw = pw * a;
      }
      if (!d.H.contains(snap(pw), 1e-9)) ok = false;
    }
    out.push_back(min_check("weyl.(w+w-) order = |W|/2 exactly", ok ? 1 : 0, 1));
  }

  // finite subgroup axioms under snapping
  {
    double worst = 0;
    for (const char* n : {"S4", "CP2", "S7", "W2", "R"}) {
      const GroupDiagram d = catalog(n);
      const FiniteSubgroup& H = d.H;
      bool has_id = false;
      for (const GElem& g : H.elements)
        if (gelem_dist(g, gelem_one()) < 1e-12) has_id = true;
      if (!has_id) worst = 1;
      for (const GElem& g1 : H.elements) {
        for (const GElem& g2 : H.elements) {
          const GElem prod = snap(g1 * g2, 1e-12);
          double best = 1e300;
          for (const GElem& h : H.elements) best = std::min(best, gelem_dist(prod, h));
          worst = std::max(worst, best);
        }
        const GElem inv = snap(g1.inverse(), 1e-12);
        double best = 1e300;
        for (const GElem& h : H.elements) best = std::min(best, gelem_dist(inv, h));
        worst = std::max(worst, best);
      }
    }
    out.push_back(max_check("weyl.finite subgroup axioms (closure/inverse/identity)", worst, 1e-12));
  }

  // symmetry relation grids
  const int N = 1001;
  {
    double dev = 0;
    for (Space s : {Space::S4, Space::S7, Space::B7}) {
      const MetricProfile pr = make_profile(s);
      for (int i = 0; i < N; ++i) {
        const double t = pr.L * i / (N - 1);
        const MetricBlocks b = eval_raw(pr, t);
        const MetricBlocks s2 = eval_raw(pr, t + 2 * pr.L);
        const MetricBlocks s4 = eval_raw(pr, t + 4 * pr.L);
        const MetricBlocks m2 = eval_raw(pr, -t + 2 * pr.L);
        for (auto [cur, shifted, mirrored, far_] :
             {std::tuple{b.f, s2.f, m2.f, s4.f}, std::tuple{b.g, s2.g, m2.g, s4.g},
              std::tuple{b.h, s2.h, m2.h, s4.h}}) {
          dev = std::max(dev, std::abs(cur[1] - shifted[0]));   // f2(t) = f1(t+2L)
          dev = std::max(dev, std::abs(cur[2] - mirrored[0]));  // f3(t) = f1(-t+2L)
          dev = std::max(dev, std::abs(cur[2] - far_[0]));      // f3(t) = f1(t+4L)
        }
      }
    }
    out.push_back(max_check("weyl.cyclic relations S4/S7/B7 (1001 grid)", dev, 1e-12));
  }
  {
    const MetricProfile pr = make_profile(Space::CP2);
    double dev = 0;
    for (int i = 0; i < N; ++i) {
      const double t = pr.L * i / (N - 1);
      const MetricBlocks b = eval_raw(pr, t);
      dev = std::max(dev, std::abs(b.f[2] - eval_raw(pr, t + 2 * pr.L).f[0]));
      dev = std::max(dev, std::abs(b.f[2] - eval_raw(pr, -t + 2 * pr.L).f[0]));
      dev = std::max(dev, std::abs(b.f[1] - eval_raw(pr, -t).f[1]));
      dev = std::max(dev, std::abs(b.f[1] - eval_raw(pr, -t + 2 * pr.L).f[1]));
    }
    out.push_back(max_check("weyl.reflection relations CP2 (1001 grid)", dev, 1e-12));
  }
  {
    const MetricProfile pr = make_profile(Space::W2, {1, 0.5});
    double dev = 0;
    for (int i = 0; i < N; ++i) {
      const double t = pr.L * i / (N - 1);
      const MetricBlocks b = eval_raw(pr, t);
      for (auto pick : {+[](const MetricBlocks& m, int j) { return m.f[j]; },
                        +[](const MetricBlocks& m, int j) { return m.g[j]; }}) {
        dev = std::max(dev, std::abs(pick(b, 2) - pick(eval_raw(pr, t + 2 * pr.L), 0)));
        dev = std::max(dev, std::abs(pick(b, 2) - pick(eval_raw(pr, -t + 2 * pr.L), 0)));
        dev = std::max(dev, std::abs(pick(b, 1) - pick(eval_raw(pr, -t), 1)));
        dev = std::max(dev, std::abs(pick(b, 1) - pick(eval_raw(pr, -t + 2 * pr.L), 1)));
      }
      dev = std::max(dev, std::abs(b.h[2] + eval_raw(pr, -t + 2 * pr.L).h[0]));
      dev = std::max(dev, std::abs(b.h[2] - eval_raw(pr, t + 2 * pr.L).h[0]));
      dev = std::max(dev, std::abs(b.h[1] + eval_raw(pr, -t).h[1]));
      dev = std::max(dev, std::abs(b.h[1] - eval_raw(pr, -t + 2 * pr.L).h[1]));
    }
    out.push_back(max_check("weyl.modified D4 relations W2 (1001 grid)", dev, 1e-12));
  }
  {
    // evenness at the ends for E_p / W1 by central differences; h2, h3
    // are odd across t = L (their circle pairs with the w+ action)
    double dev = 0;
    const double d = 1e-5;
    std::vector<MetricProfile> prs;
    for (int p : {1, 2, 10}) prs.push_back(make_profile(Space::Ep, {p, 0.5}));
    prs.push_back(make_profile(Space::W1, {1, 0.5}));
    for (const MetricProfile& pr : prs) {
      const MetricBlocks a0 = eval_raw(pr, d), b0 = eval_raw(pr, -d);
      const MetricBlocks aL = eval_raw(pr, pr.L + d), bL = eval_raw(pr, pr.L - d);
      for (int m = 0; m < 3; ++m) {
        dev = std::max(dev, std::abs(a0.f[m] - b0.f[m]) / (2 * d));
        dev = std::max(dev, std::abs(a0.g[m] - b0.g[m]) / (2 * d));
        dev = std::max(dev, std::abs(a0.h[m] - b0.h[m]) / (2 * d));
        dev = std::max(dev, std::abs(aL.f[m] - bL.f[m]) / (2 * d));
        dev = std::max(dev, std::abs(aL.g[m] - bL.g[m]) / (2 * d));
      }
      dev = std::max(dev, std::abs(aL.h[0] - bL.h[0]) / (2 * d));
      dev = std::max(dev, std::abs(aL.h[1] + bL.h[1]) / (2 * d));
      dev = std::max(dev, std::abs(aL.h[2] + bL.h[2]) / (2 * d));
      dev = std::max(dev, std::abs(eval_raw(pr, pr.L).h[1]));
      dev = std::max(dev, std::abs(eval_raw(pr, pr.L).h[2]));
    }
    out.push_back(max_check("weyl.evenness at t=0,L for E_p/W1 (difference based)", dev, 1e-8));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Check> verify_collapse() {
  std::vector<Check> out;
  double worst = 0;
  std::string worst_tag;
  for (const ParamCase& pc : collapse_cases()) {
    const MetricProfile pr = make_profile(pc.space, pc.params);
    for (OrbitEnd end : {OrbitEnd::Minus, OrbitEnd::Plus}) {
      for (const CollapseDirection& c : collapse_directions(pr, end)) {
        if (c.residual > worst) {
          worst = c.residual;
          worst_tag = pc.tag;
        }
      }
    }
  }
  out.push_back(max_check("collapse.slope quadratic vanishes at both ends (all spaces)", worst,
                          1e-12, true, worst_tag));

  // blocks positive definite on the open interval
  {
    double min_eig = 1e300;
    for (const ParamCase& pc : collapse_cases()) {
      const MetricProfile pr = make_profile(pc.space, pc.params);
      const bool diag = space_is_diagonal(pc.space);
      for (int i = 1; i < 1000; ++i) {
        const double t = pr.L * i / 1000;
        const MetricBlocks b = eval_raw(pr, t);
        for (int m = 0; m < 3; ++m)
          min_eig = std::min(min_eig, block_min_eigenvalue(b, m, diag));
      }
    }
    out.push_back(min_check("collapse.blocks positive definite on (0, L)", min_eig, 0.0));
    out.back().passed = min_eig > 0;
  }

  // inverse block spot values
  {
    const MetricProfile s4 = make_profile(Space::S4);
    const MetricProfile b7 = make_profile(Space::B7);
    double dev = std::abs(inverse_block(s4, 1, kPi / 2).F - 0.25);
    dev = std::max(dev, std::abs(inverse_block(b7, 1, kPi / 2).F - 9.0 / 16.0));
    const MetricBlocks bb = eval_raw(b7, kPi / 2);
    dev = std::max(dev, std::abs((bb.f[0] * bb.g[0] - bb.h[0] * bb.h[0]) - 16.0 / 5.0));
    bool threw = false;
    try {
      inverse_block(b7, 1, 0.0);
    } catch (const std::domain_error&) {
      threw = true;
    }
    out.push_back(max_check("collapse.inverse block values (S4, B7)", dev, 1e-12));
    out.push_back(min_check("collapse.inverse block singular at collapse point", threw ? 1 : 0, 1));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Check> verify_oracle() {
  std::vector<Check> out;
  const int N = 101;
  {
    const MetricProfile pr = make_profile(Space::S4);
    double dev = 0;
    for (int i = 0; i < N; ++i) {
      const double t = pr.L * i / (N - 1);
      const auto o = s4_action_norms(t);
      const MetricBlocks b = eval_raw(pr, t);
      for (int m = 0; m < 3; ++m) dev = std::max(dev, std::abs(o[m] - b.f[m]));
    }
    dev = std::max(dev, std::abs(s4_action_norms(kPi / 2)[0] - 4.0));
    out.push_back(max_check("oracle.S4 commutator norms match closed forms", dev, 1e-12));
  }
  {
    const MetricProfile pr = make_profile(Space::B7);
    double dev = 0, sum_dev = 0;
    for (int i = 0; i < N; ++i) {
      const double t = pr.L * i / (N - 1);
      const auto o = b7_action_norms(t);
      const MetricBlocks b = eval_raw(pr, t);
      dev = std::max({dev, std::abs(o[0] - b.f[0]), std::abs(o[1] - b.g[0]),
                      std::abs(o[2] - b.h[0])});
      const double s2 = std::sin(t) * std::sin(t);
      sum_dev = std::max(sum_dev, std::abs(o[0] + o[1] - 2 * (5 + 4 * s2) / 5));
    }
    out.push_back(max_check("oracle.B7 so(5) projection matches closed forms", dev, 1e-12));
    out.push_back(max_check("oracle.B7 f1+g1 identity", sum_dev, 1e-12));
  }
  {
    double dev = 0, vdev = 0, hor = 0, cross = 0;
    for (int p : {1, 2, 10}) {
      for (double e : {0.5, 0.9}) {
        const MetricProfile pr = make_profile(Space::Ep, {p, e});
        for (int i = 0; i < N; ++i) {
          const double t = (kPi / 2) * i / (N - 1);
          const EschenburgDetails det = eschenburg_details(p, e, t);
          const MetricBlocks b = eval_raw(pr, t);
          for (int m = 0; m < 3; ++m) {
            dev = std::max(dev, std::abs(det.blocks.f[m] - b.f[m]));
            dev = std::max(dev, std::abs(det.blocks.g[m] - b.g[m]));
            dev = std::max(dev, std::abs(det.blocks.h[m] - b.h[m]));
          }
          vdev = std::max(vdev, std::abs(det.v_norm2 - det.v_norm2_closed));
          hor = std::max(hor, det.horizontality);
          cross = std::max(cross, det.max_cross_product);
        }
      }
    }
    out.push_back(max_check("oracle.Eschenburg su(3) matches closed forms (p=1,2,10)", dev, 1e-10));
    out.push_back(max_check("oracle.Eschenburg |v|^2 matches printed formula", vdev, 1e-12));
    out.push_back(max_check("oracle.Eschenburg X2,X3,Y2,Y3 horizontal", hor, 1e-12));
    out.push_back(max_check("oracle.declared-zero inner products vanish", cross, 1e-12));
  }
  {
    double dev = 0;
    for (double e : {0.5, 0.9}) {
      const MetricProfile e1 = make_profile(Space::Ep, {1, e});
      const MetricProfile w1 = make_profile(Space::W1, {1, e});
      for (int i = 0; i < N; ++i) {
        const double t = (kPi / 2) * i / (N - 1);
        const MetricBlocks a = eval_raw(e1, t), b = eval_raw(w1, t);
        for (int m = 0; m < 3; ++m)
          dev = std::max({dev, std::abs(a.f[m] - b.f[m]), std::abs(a.g[m] - b.g[m]),
                          std::abs(a.h[m] - b.h[m])});
      }
    }
    out.push_back(max_check("oracle.E_1 equals the W1 closed forms", dev, 1e-12));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// numerical second derivative of the index-1 inverse block over a grid
double inverse_convexity_min_eig(const MetricProfile& pr, double t_lo, double t_hi,
                                 bool diagonal, double* entrywise_min) {
  const int N = 1001;
  const double step = (t_hi - t_lo) / (N - 1);
  double min_eig = 1e300, min_entry = 1e300;
  auto inv_at = [&](double t) { return inverse_block(pr, 1, t); };
  for (int i = 1; i + 1 < N; ++i) {
    const double t = t_lo + step * i;
    const InverseBlock a = inv_at(t - step), b = inv_at(t), c = inv_at(t + step);
    const double Fpp = (a.F - 2 * b.F + c.F) / (step * step);
    const double Gpp = (a.G - 2 * b.G + c.G) / (step * step);
    const double Hpp = (a.H - 2 * b.H + c.H) / (step * step);
    min_entry = std::min({min_entry, Fpp, diagonal ? Fpp : Gpp});
    if (diagonal) {
      min_eig = std::min(min_eig, Fpp);
    } else {
      const double tr = Fpp + Gpp;
      const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - (Fpp * Gpp - Hpp * Hpp)));
      min_eig = std::min(min_eig, 0.5 * tr - disc);
    }
  }
  if (entrywise_min) *entrywise_min = min_entry;
  return min_eig;
}

}  // namespace

std::vector<Check> verify_convexity() {
  std::vector<Check> out;
  for (Space s : {Space::S4, Space::S7, Space::B7}) {
    const MetricProfile pr = make_profile(s);
    double entry = 0;
    const double eig = inverse_convexity_min_eig(pr, 0.05, 3 * pr.L - 0.05,
                                                 space_is_diagonal(s), &entry);
    out.push_back(min_check("convexity.inverse block PSD second difference " + space_name(s), eig,
                            -1e-6));
  }
  for (const ParamCase& pc : {ParamCase{Space::Ep, {10, 0.5}, "E_10"},
                              ParamCase{Space::W1, {1, 0.5}, "W1"},
                              ParamCase{Space::W2, {1, 0.5}, "W2"}}) {
    const MetricProfile pr = make_profile(pc.space, pc.params);
    // index-1 blocks of E_p / W1 are singular at every multiple of L, so
    // the report window stays between two consecutive singular orbits
    const double hi = (pc.space == Space::W2) ? 4 * pr.L - 0.05 : pr.L - 0.05;
    double entry = 0;
    const double eig = inverse_convexity_min_eig(pr, 0.05, hi, false, &entry);
    Check c = min_check("convexity.report-only " + pc.tag + " (matrix / entrywise)", eig, -1e-6,
                        false);
    char note[64];
    std::snprintf(note, sizeof note, "entrywise min %.3g", entry);
    c.note = note;
    out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Check> verify_hitchin() {
  std::vector<Check> out;
  for (int k : {3, 4, 6}) {
    const std::string tag = "hitchin.k=" + std::to_string(k) + ".";
    const HitchinAnalysis an(k);
    const HitchinDomain dom = hitchin_domain(k);
    const double L = an.L();

    // (i) endpoint collapse pattern
    {
      const double t1_end =
          (k == 3) ? hitchin_raw<double>(3, dom.r_lo + 1e-11).T1 : eval_hitchin(k, dom.r_lo).T1;
      const double far_r = dom.infinite_hi ? 1e10 : dom.r_hi;
      const auto far = hitchin_raw<double>(k, far_r);
      const double small = std::min(far.T2, far.T3);
      const double large = std::max(far.T2, far.T3);
      out.push_back(max_check(tag + "T1 collapses at the smooth end", std::abs(t1_end), 1e-8));
      out.push_back(max_check(tag + "exactly one of T2/T3 collapses at the far end",
                              std::abs(small), 1e-8, true,
                              "other stays at " + std::to_string(large)));
      out.push_back(min_check(tag + "the other of T2/T3 stays positive", large, 1e-2));
    }

    if (k == 3) {
      const auto lim = hitchin_t23_limit_rlo(3);
      out.push_back(max_check(tag + "T2/T3 share the limit at r_lo (0/0 via beta)",
                              std::abs(lim[0] - lim[1]), 1e-6));
      // Cauchy convergence along a geometric approach
      double prev = hitchin_raw<double>(3, dom.r_lo + 1e-5).T2;
      bool cauchy = true;
      double gap_prev = 1e300;
      for (double d = 1e-5 / 4; d > 1e-8; d /= 4) {
        const double cur = hitchin_raw<double>(3, dom.r_lo + d).T2;
        const double gap = std::abs(cur - prev);
        if (gap > gap_prev * 0.9) cauchy = false;
        gap_prev = gap;
        prev = cur;
      }
      out.push_back(min_check(tag + "T2 Cauchy along geometric approach to r_lo", cauchy ? 1 : 0, 1));
    }

    // arclength table sanity and stability
    {
      const ArclengthTable tab = an.table();
      bool increasing = tab.t.front() == 0.0;
      for (size_t i = 1; i < tab.t.size(); ++i)
        if (tab.t[i] <= tab.t[i - 1]) increasing = false;
      out.push_back(min_check(tag + "t(r) strictly increasing from 0", increasing ? 1 : 0, 1));
      const HitchinAnalysis coarse(k, 256);
      out.push_back(max_check(tag + "L stable under grid doubling",
                              std::abs(coarse.L() - an.L()), 1e-8));
    }

    // curvature signs over the folded [0, 3L]
    const CurvatureReport rep = an.curvature_report(1201);
    {
      double min_sec1_base = 1e300, min_sec2 = 1e300, min_sec3 = 1e300;
      for (size_t i = 0; i < rep.t.size(); ++i) {
        if (rep.t[i] <= L) min_sec1_base = std::min(min_sec1_base, rep.sec[0][i]);
        min_sec2 = std::min(min_sec2, rep.sec[1][i]);
        min_sec3 = std::min(min_sec3, rep.sec[2][i]);
      }
      out.push_back(min_check(tag + "sec(gamma',X1*) > 0 on the interior grid", min_sec1_base,
                              0.0));
      out.back().passed = min_sec1_base > 0;
      out.push_back(max_check(tag + "sec(gamma',X2*) negative somewhere", min_sec2, 0.0));
      out.push_back(max_check(tag + "sec(gamma',X3*) negative somewhere", min_sec3, 0.0));
      out.push_back(min_check(tag + "all-positive fraction of [0,3L] >= 0.45",
                              rep.all_positive_fraction, 0.45));
    }
    {
      // sphere curvature = extended sec of the collapsing slot; its
      // negative set should sit inside (0.35 * 3L, 0.95 * 3L)
      bool inside = true;
      for (const SignInterval& iv : rep.negative_intervals[0])
        if (iv.lo < 0.35 * 3 * L || iv.hi > 0.95 * 3 * L) inside = false;
      out.push_back(min_check(tag + "sphere negative-curvature region in the expected band",
                              inside ? 1 : 0, 1, false));
    }

    // chain-rule curvature against plain central differences
    {
      double scale = 0;
      for (int m = 0; m < 3; ++m)
        for (double v : rep.sec[m]) scale = std::max(scale, std::abs(v));
      const double dt = 5e-4 * L;
      double worst = 0;
      for (int m = 1; m <= 3; ++m) {
        for (int j = 1; j <= 19; ++j) {
          const double t = L * (0.05 + 0.9 * j / 19.0) * 0.999;
          auto phi = [&](double tt) {
            const double r = an.r_of_t(tt);
            const auto o = hitchin_raw<double>(k, r);
            const double T = m == 1 ? o.T1 : (m == 2 ? o.T2 : o.T3);
            return std::sqrt(T);
          };
          const double fd = -(phi(t + dt) - 2 * phi(t) + phi(t - dt)) / (dt * dt) / phi(t);
          const double cr = an.sec(m, t);
          if (std::abs(cr) > 0.01 * scale)
            worst = std::max(worst, std::abs(fd - cr) / std::abs(cr));
        }
      }
      out.push_back(max_check(tag + "chain-rule vs central-difference curvature", worst, 1e-4));
    }

    // embedding of the fixed-point 2-sphere
    {
      const RevolutionProfile rp = an.embed(2049);
      double unit_dev = 0;
      for (size_t i = 0; i < rp.t.size(); ++i)
        unit_dev = std::max(unit_dev,
                            std::abs(rp.rho_prime[i] * rp.rho_prime[i] +
                                     rp.z_prime[i] * rp.z_prime[i] - 1.0));
      out.push_back(max_check(tag + "embedding arc-length identity rho'^2+z'^2=1", unit_dev, 1e-8));
      const double d = 3 * L * 1e-4;
      const double slope0 = an.sphere_h(d) / d;
      const double slope1 = -an.sphere_h(3 * L - d) / d;
      out.push_back(max_check(tag + "h'(0+) = 1", std::abs(slope0 - 1.0), 1e-3));
      out.push_back(
          max_check(tag + "h'(3L-) = -1/k", std::abs(slope1 + 1.0 / k), 1e-3));
      const double target = 2 * kPi * (1.0 + 1.0 / k);
      const double total = an.total_curvature();
      out.push_back(max_check(tag + "total curvature = 2pi(1 + 1/k) within 1%",
                              std::abs(total - target) / target, 0.01));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool same_survivors(const std::vector<Survivor>& a, const std::vector<Survivor>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i].slopes == b[i].slopes) || a[i].label != b[i].label) return false;
  return true;
}

}  // namespace

std::vector<Check> verify_classify() {
  std::vector<Check> out;
  const int N = 20;

  const ClassificationResult ex1a = enumerate_family(Family::EX1A, N);
  out.push_back(max_check("classify.EX1A empty (normal weight 1)", double(ex1a.survivors.size()),
                          0.5));

  {
    const ClassificationResult ex1b = enumerate_family(Family::EX1B, N);
    bool shape_ok = !ex1b.survivors.empty();
    long expected = 0;
    for (int p = 2; p <= N; p += 2)
      for (int q : {p - 1, p + 1, -(p - 1), -(p + 1)})
        if (std::abs(q) <= N && std::abs(q) % 2 == 1) ++expected;
    for (const Survivor& s : ex1b.survivors) {
      const int p = s.slopes.plus.p, q = s.slopes.plus.q;
      if (std::abs(p + q) != 1 && std::abs(p - q) != 1) shape_ok = false;
      if (s.label.rfind("E_", 0) != 0) shape_ok = false;
    }
    if (long(ex1b.survivors.size()) != expected) shape_ok = false;
    out.push_back(min_check("classify.EX1B = the |p+-q| = 1 family (E_p)", shape_ok ? 1 : 0, 1));
  }

  const ClassificationResult ex2 = enumerate_family(Family::EX2, N);
  out.push_back(max_check("classify.EX2 excluded altogether", double(ex2.survivors.size()), 0.5));

  {
    const ClassificationResult ex3 = enumerate_family(Family::EX3, N);
    std::vector<Survivor> golden;
    golden.push_back({canonical_form(Family::EX3, {{1, 3}, {2, 1}}), "R"});
    for (int p = 1; p + 1 <= N; ++p)
      golden.push_back({canonical_form(Family::EX3, {{1, 1}, {p, p + 1}}),
                        "Q_" + std::to_string(p)});
    std::sort(golden.begin(), golden.end(), [](const Survivor& a, const Survivor& b) {
      return std::tuple(a.slopes.minus.p, a.slopes.minus.q, a.slopes.plus.p, a.slopes.plus.q) <
             std::tuple(b.slopes.minus.p, b.slopes.minus.q, b.slopes.plus.p, b.slopes.plus.q);
    });
    std::vector<Survivor> got = ex3.survivors;
    std::sort(got.begin(), got.end(), [](const Survivor& a, const Survivor& b) {
      return std::tuple(a.slopes.minus.p, a.slopes.minus.q, a.slopes.plus.p, a.slopes.plus.q) <
             std::tuple(b.slopes.minus.p, b.slopes.minus.q, b.slopes.plus.p, b.slopes.plus.q);
    });
    out.push_back(min_check("classify.EX3 = {R} + {Q_p}", same_survivors(got, golden) ? 1 : 0, 1));
  }

  {
    const ClassificationResult ex4 = enumerate_family(Family::EX4, N);
    std::vector<Survivor> golden;
    golden.push_back({canonical_form(Family::EX4, {{1, -3}, {-3, 1}}), "B7"});
    for (int k = 1; 1 + 2 * k <= N; ++k)
      golden.push_back({canonical_form(Family::EX4, {{1, 1}, {1 + 2 * k, 1 - 2 * k}}),
                        "P_" + std::to_string(k)});
    auto key = [](const Survivor& s) {
      return std::tuple(s.slopes.minus.p, s.slopes.minus.q, s.slopes.plus.p, s.slopes.plus.q);
    };
    std::sort(golden.begin(), golden.end(),
              [&](const Survivor& a, const Survivor& b) { return key(a) < key(b); });
    std::vector<Survivor> got = ex4.survivors;
    std::sort(got.begin(), got.end(),
              [&](const Survivor& a, const Survivor& b) { return key(a) < key(b); });
    out.push_back(min_check("classify.EX4 = {B7} + {P_k}", same_survivors(got, golden) ? 1 : 0, 1));
  }

  {
    // stability in the bound: sporadic survivors fixed, parametric
    // families grow, nothing unlabeled appears
    bool stable = true;
    for (Family f : {Family::EX1B, Family::EX3, Family::EX4}) {
      std::vector<std::string> sporadic_at_10;
      for (int n : {10, 20, 30, 40, 50}) {
        const ClassificationResult r = enumerate_family(f, n);
        std::vector<std::string> sporadic;
        for (const Survivor& s : r.survivors) {
          if (s.label == "none") stable = false;
          if (s.label == "R" || s.label == "B7") sporadic.push_back(s.label);
        }
        if (n == 10)
          sporadic_at_10 = sporadic;
        else if (sporadic != sporadic_at_10)
          stable = false;
      }
    }
    out.push_back(min_check("classify.no new sporadic survivors for N in [10, 50]",
                            stable ? 1 : 0, 1));
  }

  {
    bool agree = true;
    for (Family f : {Family::EX1A, Family::EX1B, Family::EX2, Family::EX3, Family::EX4}) {
      const ClassificationResult fwd = enumerate_family(f, N, false);
      const ClassificationResult rev = enumerate_family(f, N, true);
      if (!same_survivors(fwd.survivors, rev.survivors)) agree = false;
    }
    out.push_back(min_check("classify.filters commute (reversed pass agrees)", agree ? 1 : 0, 1));
  }

  {
    // frame bundle slope bookkeeping
    bool ok = true;
    const BundleSlopes b3 = bundle_slopes(3);
    ok = ok && std::abs(b3.antiselfdual_left.p) == 1 && std::abs(b3.antiselfdual_left.q) == 3 &&
         std::abs(b3.antiselfdual_right.p) == 3 && std::abs(b3.antiselfdual_right.q) == 1;
    const BundleSlopes b4 = bundle_slopes(4);
    SlopePair halved{b4.antiselfdual_right.p / 2, b4.antiselfdual_right.q / 2};
    ok = ok && canonical_form(Family::EX3, {b4.antiselfdual_left, halved}) ==
                   canonical_form(Family::EX3, {{1, 3}, {2, 1}});
    for (int k = 1; k <= 10; ++k) {
      const BundleSlopes b = bundle_slopes(k);
      if (!lemma_c(b.selfdual_left, b.selfdual_right)) ok = false;
    }
    for (int k = 1; k <= 5; ++k) {
      const BundleSlopes bo = bundle_slopes(2 * k - 1);
      ok = ok && canonical_form(Family::EX4, {bo.selfdual_left, bo.selfdual_right}) ==
                     canonical_form(Family::EX4, {{1, 1}, {1 + 2 * k, 1 - 2 * k}});
      const BundleSlopes be = bundle_slopes(2 * k);
      const SlopePair h{be.selfdual_right.p / 2, be.selfdual_right.q / 2};
      ok = ok && canonical_form(Family::EX3, {be.selfdual_left, h}) ==
                     canonical_form(Family::EX3, {{1, 1}, {k, k + 1}});
    }
    out.push_back(min_check("classify.frame-bundle slopes match B7/R/P_k/Q_k", ok ? 1 : 0, 1));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Check> verify_determinism(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<Check> out;
  fs::create_directories(dir);

  const MetricProfile b7 = make_profile(Space::B7);
  const Csv csv = sample_profile(b7, 0, 3 * b7.L, 101);
  const std::string s1 = csv_format(csv);
  const std::string s2 = csv_format(sample_profile(b7, 0, 3 * b7.L, 101));
  csv_write(dir + "/b7_a.csv", csv);
  csv_write(dir + "/b7_b.csv", csv);
  const Csv back = csv_read(dir + "/b7_a.csv");
  bool roundtrip = back.header == csv.header && back.rows.size() == csv.rows.size();
  if (roundtrip)
    for (size_t i = 0; i < csv.rows.size(); ++i)
      for (size_t j = 0; j < csv.rows[i].size(); ++j)
        if (back.rows[i][j] != csv.rows[i][j]) roundtrip = false;
  out.push_back(min_check("determinism.csv emission byte-identical", s1 == s2 ? 1 : 0, 1));
  out.push_back(min_check("determinism.csv round-trip exact", roundtrip ? 1 : 0, 1));

  const std::string svg1 = svg_render(csv, figure_spec(3));
  const std::string svg2 = svg_render(csv, figure_spec(3));
  svg_write(dir + "/fig3.svg", csv, figure_spec(3));
  out.push_back(min_check("determinism.svg emission byte-identical", svg1 == svg2 ? 1 : 0, 1));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Check> run_suite(const std::string& name, const std::string& scratch_dir) {
  if (name == "weyl") return verify_weyl();
  if (name == "collapse") return verify_collapse();
  if (name == "oracle") return verify_oracle();
  if (name == "convexity") return verify_convexity();
  if (name == "hitchin") return verify_hitchin();
  if (name == "classify") return verify_classify();
  if (name == "determinism") return verify_determinism(scratch_dir);
  if (name == "all") {
    std::vector<Check> all;
    for (const char* s :
         {"weyl", "collapse", "oracle", "convexity", "hitchin", "classify", "determinism"}) {
      const auto part = run_suite(s, scratch_dir);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

bool all_hard_passed(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    if (c.hard && !c.passed) return false;
  return true;
}

std::string format_report(const std::vector<Check>& checks) {
  std::string out;
  char line[256];
  for (const Check& c : checks) {
    std::snprintf(line, sizeof line, "[%s] %-60s %s=%.6g %s=%.3g%s%s\n",
                  c.passed ? "PASS" : (c.hard ? "FAIL" : "warn"), c.name.c_str(),
                  c.at_least ? "value" : "max", c.measured, c.at_least ? "min" : "tol", c.tol,
                  c.note.empty() ? "" : "  # ", c.note.c_str());
    out += line;
  }
  return out;
}

}  // namespace cohom1
