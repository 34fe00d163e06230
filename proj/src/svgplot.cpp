#include "rigidity/svgplot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

constexpr int kW = 800, kH = 500;
constexpr int kMarginL = 60, kMarginR = 20, kMarginT = 20, kMarginB = 45;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b"};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_line_chart(const std::string& csv_text,
                              const std::string& x_column,
                              const std::vector<std::string>& y_columns) {
  if (y_columns.empty()) throw Error("plot: no y columns");
  std::istringstream in(csv_text);
  std::string line;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto cells = split_csv_line(line);
    if (header.empty())
      header = std::move(cells);
    else
      rows.push_back(std::move(cells));
  }
  if (header.empty() || rows.empty()) throw Error("plot: empty table");

  auto col_index = [&](const std::string& name) {
    for (size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return int(i);
    throw Error("plot: missing column " + name);
  };
  int xi = col_index(x_column);
  std::vector<int> yi;
  for (const auto& c : y_columns) yi.push_back(col_index(c));

  auto cell = [&](const std::vector<std::string>& row, int i) {
    if (i >= int(row.size())) throw Error("plot: ragged row");
    try {
      return std::stod(row[i]);
    } catch (const std::exception&) {
      throw Error("plot: non-numeric cell \"" + row[i] + "\"");
    }
  };

  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& row : rows) {
    double x = cell(row, xi);
    for (int c : yi) {
      double y = cell(row, c);
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;

  double pw = kW - kMarginL - kMarginR, ph = kH - kMarginT - kMarginB;
  auto px = [&](double x) { return kMarginL + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) {
    return kMarginT + ph - (y - ymin) / (ymax - ymin) * ph;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
      << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << " " << kH
      << "\">\n"
      << "<rect width=\"" << kW << "\" height=\"" << kH
      << "\" fill=\"white\"/>\n"
      << "<rect x=\"" << kMarginL << "\" y=\"" << kMarginT << "\" width=\""
      << num(pw) << "\" height=\"" << num(ph)
      << "\" fill=\"none\" stroke=\"#333\"/>\n";

  // axis ticks: 5 per axis
  for (int t = 0; t <= 5; ++t) {
    double xv = xmin + (xmax - xmin) * t / 5.0;
    double yv = ymin + (ymax - ymin) * t / 5.0;
    svg << "<line x1=\"" << num(px(xv)) << "\" y1=\"" << kMarginT + ph
        << "\" x2=\"" << num(px(xv)) << "\" y2=\"" << num(kMarginT + ph + 5)
        << "\" stroke=\"#333\"/>\n"
        << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(kMarginT + ph + 20)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << num(xv)
        << "</text>\n"
        << "<line x1=\"" << kMarginL - 5 << "\" y1=\"" << num(py(yv))
        << "\" x2=\"" << kMarginL << "\" y2=\"" << num(py(yv))
        << "\" stroke=\"#333\"/>\n"
        << "<text x=\"" << kMarginL - 8 << "\" y=\"" << num(py(yv) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">" << num(yv)
        << "</text>\n";
  }
  svg << "<text x=\"" << kMarginL + pw / 2 << "\" y=\"" << kH - 8
      << "\" font-size=\"12\" text-anchor=\"middle\">" << x_column
      << "</text>\n";

  for (size_t s = 0; s < yi.size(); ++s) {
    const char* color = kColors[s % (sizeof kColors / sizeof *kColors)];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& row : rows)
      svg << num(px(cell(row, xi))) << "," << num(py(cell(row, yi[s]))) << " ";
    svg << "\"/>\n";
    svg << "<text x=\"" << kMarginL + 10 << "\" y=\""
        << kMarginT + 16 + 16 * int(s) << "\" font-size=\"12\" fill=\"" << color
        << "\">" << y_columns[s] << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace rigidity
