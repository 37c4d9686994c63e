#include "cohom1/sampling.hpp"

#include <stdexcept>

namespace cohom1 {

Csv sample_profile(const MetricProfile& pr, double t0, double t1, int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("sample_profile: grid_n >= 2");
  if (t1 <= t0) throw std::invalid_argument("sample_profile: empty range");
  Csv csv;
  csv.header = {"t", "f1", "f2", "f3", "g1", "g2", "g3", "h1", "h2", "h3"};
  for (int i = 0; i < grid_n; ++i) {
    const double t = t0 + (t1 - t0) * i / (grid_n - 1);
    const MetricBlocks b = extend_profile(pr, t);
    csv.rows.push_back({t, b.f[0], b.f[1], b.f[2], b.g[0], b.g[1], b.g[2], b.h[0], b.h[1], b.h[2]});
  }
  return csv;
}

Csv sample_inverse(const MetricProfile& pr, double t0, double t1, int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("sample_inverse: grid_n >= 2");
  if (t1 <= t0) throw std::invalid_argument("sample_inverse: empty range");
  Csv csv;
  csv.header = {"t", "F1", "G1", "H1", "F2", "G2", "H2", "F3", "G3", "H3"};
  for (int i = 0; i < grid_n; ++i) {
    const double t = t0 + (t1 - t0) * i / (grid_n - 1);
    std::vector<double> row{t};
    for (int idx = 1; idx <= 3; ++idx) {
      const InverseBlock inv = inverse_block(pr, idx, t);
      row.push_back(inv.F);
      row.push_back(inv.G);
      row.push_back(inv.H);
    }
    csv.rows.push_back(std::move(row));
  }
  return csv;
}

HitchinEmit parse_hitchin_emit(const std::string& s) {
  if (s == "curvature") return HitchinEmit::Curvature;
  if (s == "profile") return HitchinEmit::Profile;
  if (s == "embedding") return HitchinEmit::Embedding;
  throw std::invalid_argument("hitchin emit: curvature | profile | embedding");
}

Csv sample_hitchin(const HitchinAnalysis& an, HitchinEmit emit, int grid_n) {
  Csv csv;
  switch (emit) {
    case HitchinEmit::Curvature: {
      const CurvatureReport rep = an.curvature_report(grid_n);
      csv.header = {"t", "sec1", "sec2", "sec3"};
      for (size_t i = 0; i < rep.t.size(); ++i)
        csv.rows.push_back({rep.t[i], rep.sec[0][i], rep.sec[1][i], rep.sec[2][i]});
      break;
    }
    case HitchinEmit::Profile: {
      const SphereProfile sp = an.sphere_profile(grid_n);
      csv.header = {"t", "h"};
      for (size_t i = 0; i < sp.t.size(); ++i) csv.rows.push_back({sp.t[i], sp.h[i]});
      break;
    }
    case HitchinEmit::Embedding: {
      const RevolutionProfile rp = an.embed(grid_n);
      csv.header = {"t", "rho", "z"};
      for (size_t i = 0; i < rp.t.size(); ++i) csv.rows.push_back({rp.t[i], rp.rho[i], rp.z[i]});
      break;
    }
  }
  return csv;
}

void parse_range(const std::string& text, double L, double* t0, double* t1) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("range must look like A:B");
  auto parse_term = [L](std::string s) {
    if (s.empty()) throw std::invalid_argument("empty range endpoint");
    double mult = 1.0;
    if (s.back() == 'L' || s.back() == 'l') {
      mult = L;
      s.pop_back();
      if (s.empty()) s = "1";
    }
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad range endpoint: " + s);
    return v * mult;
  };
  *t0 = parse_term(text.substr(0, colon));
  *t1 = parse_term(text.substr(colon + 1));
}

}  // namespace cohom1
