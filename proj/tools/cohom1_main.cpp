#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cohom1/classify.hpp"
#include "cohom1/groups.hpp"
#include "cohom1/hitchin.hpp"
#include "cohom1/io.hpp"
#include "cohom1/oracles.hpp"
#include "cohom1/profiles.hpp"
#include "cohom1/sampling.hpp"
#include "cohom1/verify.hpp"

namespace {

using namespace cohom1;

int cmd_list() {
  std::printf("%-6s %-10s %-8s %s\n", "space", "L", "|W|", "notes");
  for (const std::string& name : catalog_names()) {
    DiagramParams dp;
    if (name == "E_p") dp.p = 1;
    if (name == "P_k" || name == "Q_k") dp.k = 1;
    const GroupDiagram d = catalog(name, dp);
    std::string Lstr = "-";
    if (name != "P_k" && name != "Q_k" && name != "R") {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", d.L);
      Lstr = buf;
    }
    int order = 0;
    try {
      order = weyl_order(d);
    } catch (...) {
    }
    std::string notes = d.alias;
    if (name == "E_p") notes = "needs --p (shown: p=1)" + (notes.empty() ? "" : "; " + notes);
    if (name == "P_k" || name == "Q_k")
      notes = "needs --k (shown: k=1)" + (notes.empty() ? "" : "; " + notes);
    std::printf("%-6s %-10s %-8d %s\n", name.c_str(), Lstr.c_str(), order, notes.c_str());
  }
  return 0;
}

MetricProfile profile_from_flags(const std::string& space, int p, double eps) {
  const Space s = parse_space(space);
  ProfileParams params;
  params.p = p;
  params.eps = eps;
  return make_profile(s, params);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohomogeneity-one positive-curvature metric toolkit"};
  app.require_subcommand(1);
  // optional key=value configuration; command-line flags win
  app.set_config("--config", "", "key=value config file");

  // list
  auto* list = app.add_subcommand("list", "catalog of group diagrams");

  // sample
  auto* sample = app.add_subcommand("sample", "sample metric functions to CSV");
  std::string s_space, s_range = "0:1L", s_out, s_series = "blocks";
  int s_p = 10, s_grid = 1001;
  double s_eps = 0.5;
  sample->add_option("--space", s_space, "S4|CP2|S7|B7|E_p|W1|W2")->required();
  sample->add_option("--p", s_p, "parameter p for E_p");
  sample->add_option("--eps", s_eps, "scaling parameter");
  sample->add_option("--range", s_range, "A:B, endpoints may use the L suffix (e.g. 0:3L)");
  sample->add_option("--grid", s_grid, "number of rows")->check(CLI::Range(2, 10000000));
  sample->add_option("--series", s_series, "blocks | inverse");
  sample->add_option("--out", s_out, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite = "all", v_scratch;
  verify->add_option("--suite", v_suite, "weyl|collapse|oracle|convexity|hitchin|classify|determinism|all");
  verify->add_option("--scratch", v_scratch, "scratch dir for determinism artifacts");

  // classify
  auto* classify = app.add_subcommand("classify", "enumerate a diagram family");
  std::string c_template = "ex4";
  int c_bound = 20;
  classify->add_option("--template", c_template, "ex1a|ex1b|ex2|ex3|ex4");
  classify->add_option("--bound", c_bound, "slope bound")->check(CLI::Range(3, 1000));

  // hitchin
  auto* hitchin = app.add_subcommand("hitchin", "orbifold metric analysis");
  int h_k = 4, h_grid = 1001;
  std::string h_emit = "curvature", h_out;
  hitchin->add_option("--k", h_k, "cone parameter: 3, 4 or 6")->required();
  hitchin->add_option("--emit", h_emit, "curvature | profile | embedding");
  hitchin->add_option("--grid", h_grid, "number of rows")->check(CLI::Range(65, 10000000));
  hitchin->add_option("--out", h_out, "output file (default stdout)");

  // plot
  auto* plot = app.add_subcommand("plot", "render a CSV as a deterministic SVG");
  std::string p_in, p_out;
  int p_figure = 3;
  plot->add_option("--in", p_in, "input CSV")->required();
  plot->add_option("--figure", p_figure, "figure id 1..12")->check(CLI::Range(1, 12));
  plot->add_option("--out", p_out, "output SVG")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) return cmd_list();

    if (*sample) {
      const MetricProfile pr = profile_from_flags(s_space, s_p, s_eps);
      double t0 = 0, t1 = pr.L;
      parse_range(s_range, pr.L, &t0, &t1);
      Csv csv;
      if (s_series == "blocks")
        csv = sample_profile(pr, t0, t1, s_grid);
      else if (s_series == "inverse")
        csv = sample_inverse(pr, t0, t1, s_grid);
      else
        throw std::invalid_argument("--series must be blocks or inverse");
      if (s_out.empty())
        std::fputs(csv_format(csv).c_str(), stdout);
      else
        csv_write(s_out, csv);
      return 0;
    }

    if (*verify) {
      if (v_scratch.empty())
        v_scratch = (std::filesystem::temp_directory_path() / "cohom1-verify").string();
      const auto checks = run_suite(v_suite, v_scratch);
      std::fputs(format_report(checks).c_str(), stdout);
      const bool ok = all_hard_passed(checks);
      std::printf("%s: %zu checks, %s\n", v_suite.c_str(), checks.size(),
                  ok ? "all hard checks passed" : "HARD FAILURES");
      return ok ? 0 : 1;
    }

    if (*classify) {
      const Family f = parse_family(c_template);
      const ClassificationResult r = enumerate_family(f, c_bound);
      std::printf("family %s, bound %d: %zu surviving diagrams\n", family_name(f).c_str(), c_bound,
                  r.survivors.size());
      for (const Survivor& s : r.survivors) {
        if (f == Family::EX1A || f == Family::EX1B)
          std::printf("  (%d,%d)  %s\n", s.slopes.plus.p, s.slopes.plus.q, s.label.c_str());
        else
          std::printf("  (%d,%d) (%d,%d)  %s\n", s.slopes.minus.p, s.slopes.minus.q,
                      s.slopes.plus.p, s.slopes.plus.q, s.label.c_str());
      }
      std::printf(
          "excluded: %ld zero-slope (product lemma), %ld non-coprime, %ld congruence, %ld "
          "weight/slope conditions, %ld min-slope condition, %ld non-primitive\n",
          r.excluded.zero_slope_product_lemma, r.excluded.not_coprime, r.excluded.congruence,
          r.excluded.weight_or_lemma_ab, r.excluded.lemma_c, r.excluded.not_group_primitive);
      return 0;
    }

    if (*hitchin) {
      const HitchinAnalysis an(h_k);
      const Csv csv = sample_hitchin(an, parse_hitchin_emit(h_emit), h_grid);
      if (h_out.empty())
        std::fputs(csv_format(csv).c_str(), stdout);
      else
        csv_write(h_out, csv);
      return 0;
    }

    if (*plot) {
      const Csv csv = csv_read(p_in);
      svg_write(p_out, csv, figure_spec(p_figure));
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
