#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cohom1/classify.hpp"
#include "cohom1/groups.hpp"
#include "cohom1/hitchin.hpp"
#include "cohom1/oracles.hpp"
#include "cohom1/profiles.hpp"
#include "cohom1/verify.hpp"

namespace py = pybind11;
using namespace cohom1;

namespace {

MetricProfile profile_of(const std::string& space, int p, double eps) {
  ProfileParams params;
  params.p = p;
  params.eps = eps;
  return make_profile(parse_space(space), params);
}

py::dict blocks_dict(const MetricBlocks& b) {
  py::dict d;
  d["f"] = py::make_tuple(b.f[0], b.f[1], b.f[2]);
  d["g"] = py::make_tuple(b.g[0], b.g[1], b.g[2]);
  d["h"] = py::make_tuple(b.h[0], b.h[1], b.h[2]);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "cohomogeneity-one positive-curvature metric toolkit";

  m.def("catalog_names", &catalog_names);
  m.def(
      "space_L",
      [](const std::string& space, int p, double eps) { return profile_of(space, p, eps).L; },
      py::arg("space"), py::arg("p") = 10, py::arg("eps") = 0.5);
  m.def(
      "weyl_order",
      [](const std::string& name, int p, int k) {
        DiagramParams dp;
        dp.p = p;
        dp.k = k;
        return weyl_order(catalog(name, dp));
      },
      py::arg("name"), py::arg("p") = 1, py::arg("k") = 1);

  m.def(
      "eval_profile",
      [](const std::string& space, double t, int p, double eps) {
        return blocks_dict(eval_profile(profile_of(space, p, eps), t));
      },
      py::arg("space"), py::arg("t"), py::arg("p") = 10, py::arg("eps") = 0.5);
  m.def(
      "extend_profile",
      [](const std::string& space, double t, int p, double eps) {
        return blocks_dict(extend_profile(profile_of(space, p, eps), t));
      },
      py::arg("space"), py::arg("t"), py::arg("p") = 10, py::arg("eps") = 0.5);
  m.def(
      "inverse_block",
      [](const std::string& space, int index, double t, int p, double eps) {
        const InverseBlock b = inverse_block(profile_of(space, p, eps), index, t);
        return py::make_tuple(b.F, b.G, b.H);
      },
      py::arg("space"), py::arg("index"), py::arg("t"), py::arg("p") = 10, py::arg("eps") = 0.5);
  m.def(
      "collapse_directions",
      [](const std::string& space, const std::string& end, int p, double eps) {
        const OrbitEnd e = end == "minus" ? OrbitEnd::Minus : OrbitEnd::Plus;
        py::list out;
        for (const CollapseDirection& c : collapse_directions(profile_of(space, p, eps), e))
          out.append(py::make_tuple(c.index, c.a, c.b, c.residual));
        return out;
      },
      py::arg("space"), py::arg("end"), py::arg("p") = 10, py::arg("eps") = 0.5);

  m.def("s4_action_norms", &s4_action_norms, py::arg("t"));
  m.def("b7_action_norms", &b7_action_norms, py::arg("t"));
  m.def(
      "eschenburg_oracle",
      [](int p, double eps, double t) { return blocks_dict(eschenburg_oracle(p, eps, t)); },
      py::arg("p"), py::arg("eps"), py::arg("t"));

  m.def("eval_hitchin", [](int k, double r) {
    const HitchinValues v = eval_hitchin(k, r);
    return py::make_tuple(v.T1, v.T2, v.T3, v.f);
  });

  py::class_<HitchinAnalysis>(m, "Hitchin")
      .def(py::init<int, int>(), py::arg("k"), py::arg("points_per_chart") = 512)
      .def_property_readonly("k", &HitchinAnalysis::k)
      .def_property_readonly("L", &HitchinAnalysis::L)
      .def("r_of_t", &HitchinAnalysis::r_of_t)
      .def("sec", &HitchinAnalysis::sec, py::arg("index"), py::arg("t"))
      .def("sec_extended", &HitchinAnalysis::sec_extended, py::arg("index"), py::arg("t"))
      .def("sphere_h", &HitchinAnalysis::sphere_h)
      .def("sphere_h_prime", &HitchinAnalysis::sphere_h_prime)
      .def("total_curvature", &HitchinAnalysis::total_curvature)
      .def(
          "sphere_profile",
          [](const HitchinAnalysis& an, int n) {
            const SphereProfile sp = an.sphere_profile(n);
            return py::make_tuple(sp.t, sp.h);
          },
          py::arg("grid_n") = 1001)
      .def(
          "embedding",
          [](const HitchinAnalysis& an, int n) {
            const RevolutionProfile rp = an.embed(n);
            return py::make_tuple(rp.t, rp.rho, rp.z);
          },
          py::arg("grid_n") = 1001)
      .def(
          "curvature",
          [](const HitchinAnalysis& an, int n) {
            const CurvatureReport rep = an.curvature_report(n);
            return py::make_tuple(rep.t, rep.sec[0], rep.sec[1], rep.sec[2],
                                  rep.all_positive_fraction);
          },
          py::arg("grid_n") = 1001);

  m.def("lemma_ab", &lemma_ab, py::arg("p"), py::arg("q"), py::arg("k"));
  m.def(
      "lemma_c",
      [](int pm, int qm, int pp, int qp) { return lemma_c({pm, qm}, {pp, qp}); },
      py::arg("p_minus"), py::arg("q_minus"), py::arg("p_plus"), py::arg("q_plus"));
  m.def(
      "enumerate_family",
      [](const std::string& family, int bound) {
        const ClassificationResult r = enumerate_family(parse_family(family), bound);
        py::list out;
        for (const Survivor& s : r.survivors) {
          py::dict d;
          d["minus"] = py::make_tuple(s.slopes.minus.p, s.slopes.minus.q);
          d["plus"] = py::make_tuple(s.slopes.plus.p, s.slopes.plus.q);
          d["label"] = s.label;
          out.append(d);
        }
        return out;
      },
      py::arg("family"), py::arg("bound") = 20);
  m.def("bundle_slopes", [](int k) {
    const BundleSlopes b = bundle_slopes(k);
    py::dict d;
    d["frame"] = py::make_tuple(b.frame_left, b.frame_right);
    d["selfdual"] = py::make_tuple(py::make_tuple(b.selfdual_left.p, b.selfdual_left.q),
                                   py::make_tuple(b.selfdual_right.p, b.selfdual_right.q));
    d["antiselfdual"] =
        py::make_tuple(py::make_tuple(b.antiselfdual_left.p, b.antiselfdual_left.q),
                       py::make_tuple(b.antiselfdual_right.p, b.antiselfdual_right.q));
    return d;
  });

  m.def(
      "verify",
      [](const std::string& suite, const std::string& scratch) {
        py::list out;
        for (const Check& c : run_suite(suite, scratch)) {
          py::dict d;
          d["name"] = c.name;
          d["hard"] = c.hard;
          d["passed"] = c.passed;
          d["measured"] = c.measured;
          d["tol"] = c.tol;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("scratch") = "/tmp/cohom1-verify");
}
