#pragma once

#include <string>
#include <vector>

namespace cohom1 {

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  int column(const std::string& name) const;  // -1 when absent
};

// %.17g cells, LF line endings, byte-deterministic for fixed input
std::string csv_format(const Csv& table);
void csv_write(const std::string& path, const Csv& table);
Csv csv_parse(const std::string& text);
Csv csv_read(const std::string& path);

// Figure descriptions: which CSV series a figure draws, plus the number
// of L-units covered by the caption range (x ticks land on multiples of
// the unit).  Figure 12 is a parametric profile curve.
struct FigureSpec {
  int id = 0;
  std::vector<std::string> series;
  int range_units = 1;
  bool parametric = false;
};

FigureSpec figure_spec(int id);

// Fixed 800x600 viewBox, one polyline per series with id "series-<name>",
// axis ticks at multiples of (t_max / range_units); identical bytes for
// identical input.
std::string svg_render(const Csv& table, const FigureSpec& fig);
void svg_write(const std::string& path, const Csv& table, const FigureSpec& fig);

}  // namespace cohom1
