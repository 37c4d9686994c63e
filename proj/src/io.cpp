#include "cohom1/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cohom1 {

int Csv::column(const std::string& name) const {
  for (size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return int(i);
  return -1;
}

namespace {

std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt3(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

std::string csv_format(const Csv& table) {
  std::string out;
  for (size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size())
      throw std::invalid_argument("csv_format: ragged row");
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += fmt17(row[i]);
    }
    out += '\n';
  }
  return out;
}

void csv_write(const std::string& path, const Csv& table) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("csv_write: cannot open " + path);
  f << csv_format(table);
  if (!f) throw std::runtime_error("csv_write: write failed for " + path);
}

Csv csv_parse(const std::string& text) {
  Csv out;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (first) {
      out.header = cells;
      first = false;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const std::string& c : cells) {
      size_t pos = 0;
      const double v = std::stod(c, &pos);
      if (pos != c.size()) throw std::runtime_error("csv_parse: bad number '" + c + "'");
      row.push_back(v);
    }
    if (row.size() != out.header.size()) throw std::runtime_error("csv_parse: ragged row");
    out.rows.push_back(std::move(row));
  }
  if (first) throw std::runtime_error("csv_parse: empty input");
  return out;
}

Csv csv_read(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("csv_read: cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return csv_parse(ss.str());
}

FigureSpec figure_spec(int id) {
  const std::vector<std::string> all9 = {"f1", "f2", "f3", "g1", "g2", "g3", "h1", "h2", "h3"};
  switch (id) {
    case 1: return {1, all9, 1, false};
    case 2: return {2, {"g1", "g2", "g3"}, 3, false};
    case 3: return {3, {"f1", "g1", "h1"}, 3, false};
    case 4: return {4, {"F1", "G1", "H1"}, 3, false};
    case 5: return {5, all9, 4, false};
    case 6: return {6, all9, 4, false};
    case 7: return {7, {"F1", "G1", "H1"}, 4, false};
    case 8: return {8, {"sec1", "sec2", "sec3"}, 1, false};
    case 9: return {9, {"sec1", "sec2", "sec3"}, 1, false};
    case 10: return {10, {"sec1", "sec2", "sec3"}, 1, false};
    case 11: return {11, {"h"}, 3, false};
    case 12: return {12, {"rho", "z"}, 1, true};
    default: throw std::invalid_argument("figure_spec: id in 1..12");
  }
}

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#17becf"};

constexpr double kW = 800, kH = 600;
constexpr double kMl = 62, kMr = 18, kMt = 18, kMb = 42;

}  // namespace

std::string svg_render(const Csv& table, const FigureSpec& fig) {
  if (fig.series.empty()) throw std::invalid_argument("svg_render: empty series list");
  if (table.rows.empty()) throw std::invalid_argument("svg_render: empty table");

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" "
         "width=\"800\" height=\"600\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";

  const double x0 = kMl, x1 = kW - kMr, y0 = kH - kMb, y1 = kMt;

  if (!fig.parametric) {
    const int tc = table.column("t");
    if (tc < 0) throw std::invalid_argument("svg_render: CSV lacks a t column");
    std::vector<int> cols;
    for (const std::string& s : fig.series) {
      const int c = table.column(s);
      if (c < 0) throw std::invalid_argument("svg_render: CSV lacks series " + s);
      cols.push_back(c);
    }
    double tmin = table.rows.front()[tc], tmax = table.rows.back()[tc];
    double vmin = 1e300, vmax = -1e300;
    for (const auto& row : table.rows)
      for (int c : cols) {
        vmin = std::min(vmin, row[c]);
        vmax = std::max(vmax, row[c]);
      }
    if (vmax <= vmin) vmax = vmin + 1;
    const double pad = 0.05 * (vmax - vmin);
    vmin -= pad;
    vmax += pad;
    auto px = [&](double t) { return x0 + (x1 - x0) * (t - tmin) / (tmax - tmin); };
    auto py = [&](double v) { return y0 + (y1 - y0) * (v - vmin) / (vmax - vmin); };

    // axes
    out += "<line x1=\"" + fmt3(x0) + "\" y1=\"" + fmt3(y0) + "\" x2=\"" + fmt3(x1) +
           "\" y2=\"" + fmt3(y0) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    out += "<line x1=\"" + fmt3(x0) + "\" y1=\"" + fmt3(y0) + "\" x2=\"" + fmt3(x0) +
           "\" y2=\"" + fmt3(y1) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    // x ticks at multiples of the range unit (caption ranges count L-units)
    const double unit = (tmax - tmin) / fig.range_units;
    for (int u = 0; u <= fig.range_units; ++u) {
      const double t = tmin + unit * u;
      out += "<line x1=\"" + fmt3(px(t)) + "\" y1=\"" + fmt3(y0) + "\" x2=\"" + fmt3(px(t)) +
             "\" y2=\"" + fmt3(y0 + 5) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
      out += "<text x=\"" + fmt3(px(t)) + "\" y=\"" + fmt3(y0 + 20) +
             "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" +
             fmt_tick(t) + "</text>\n";
    }
    for (int u = 0; u <= 4; ++u) {
      const double v = vmin + (vmax - vmin) * u / 4;
      out += "<line x1=\"" + fmt3(x0 - 5) + "\" y1=\"" + fmt3(py(v)) + "\" x2=\"" + fmt3(x0) +
             "\" y2=\"" + fmt3(py(v)) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
      out += "<text x=\"" + fmt3(x0 - 8) + "\" y=\"" + fmt3(py(v) + 4) +
             "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">" + fmt_tick(v) +
             "</text>\n";
    }
    for (size_t s = 0; s < cols.size(); ++s) {
      out += "<polyline id=\"series-" + fig.series[s] + "\" fill=\"none\" stroke=\"" +
             kPalette[s % 9] + "\" stroke-width=\"1.5\" points=\"";
      bool first = true;
      for (const auto& row : table.rows) {
        if (!first) out += ' ';
        first = false;
        out += fmt3(px(row[tc])) + "," + fmt3(py(row[cols[s]]));
      }
      out += "\"/>\n";
      out += "<text x=\"" + fmt3(x1 - 60) + "\" y=\"" + fmt3(y1 + 16 + 16 * double(s)) +
             "\" font-family=\"monospace\" font-size=\"13\" fill=\"" + kPalette[s % 9] + "\">" +
             fig.series[s] + "</text>\n";
    }
  } else {
    // parametric profile curve (rho(t), z(t)) plus its mirror image
    const int rc = table.column(fig.series[0]);
    const int zc = table.column(fig.series[1]);
    if (rc < 0 || zc < 0) throw std::invalid_argument("svg_render: CSV lacks profile series");
    double rmax = 0, zmin = 1e300, zmax = -1e300;
    for (const auto& row : table.rows) {
      rmax = std::max(rmax, std::abs(row[rc]));
      zmin = std::min(zmin, row[zc]);
      zmax = std::max(zmax, row[zc]);
    }
    if (rmax <= 0) rmax = 1;
    if (zmax <= zmin) zmax = zmin + 1;
    const double sx = (x1 - x0) / (2 * rmax * 1.1), sy = (y0 - y1) / ((zmax - zmin) * 1.1);
    const double sc = std::min(sx, sy);
    const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
    auto px = [&](double r) { return cx + sc * r; };
    auto py = [&](double z) { return cy - sc * (z - 0.5 * (zmin + zmax)); };
    for (int mirror = 0; mirror < 2; ++mirror) {
      out += std::string("<polyline id=\"series-profile") + (mirror ? "-mirror" : "") +
             "\" fill=\"none\" stroke=\"" + kPalette[0] + "\" stroke-width=\"1.5\" points=\"";
      bool first = true;
      for (const auto& row : table.rows) {
        if (!first) out += ' ';
        first = false;
        const double r = mirror ? -row[rc] : row[rc];
        out += fmt3(px(r)) + "," + fmt3(py(row[zc]));
      }
      out += "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

void svg_write(const std::string& path, const Csv& table, const FigureSpec& fig) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("svg_write: cannot open " + path);
  f << svg_render(table, fig);
  if (!f) throw std::runtime_error("svg_write: write failed for " + path);
}

}  // namespace cohom1
