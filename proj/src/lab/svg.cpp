#include "jones/lab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jones/lab/io.hpp"

namespace jones::lab {

namespace {

constexpr double W = 640, H = 420, L = 70, R = 20, T = 40, B = 50;

struct Frame {
  double x0, x1, y0, y1;
  double sx(double x) const { return L + (x - x0) / (x1 - x0) * (W - L - R); }
  double sy(double y) const { return H - B - (y - y0) / (y1 - y0) * (H - T - B); }
};

Frame frame_for(const std::vector<std::pair<double, double>>& pts) {
  Frame f{0, 1, 0, 1};
  if (pts.empty()) return f;
  f.x0 = f.x1 = pts[0].first;
  f.y0 = f.y1 = pts[0].second;
  for (auto& [x, y] : pts) {
    f.x0 = std::min(f.x0, x);
    f.x1 = std::max(f.x1, x);
    f.y0 = std::min(f.y0, y);
    f.y1 = std::max(f.y1, y);
  }
  if (f.x1 == f.x0) f.x1 = f.x0 + 1;
  if (f.y1 == f.y0) f.y1 = f.y0 + 1;
  return f;
}

std::string header(const Frame& f, const std::string& title, const std::string& xl, const std::string& yl) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title << "</text>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"12\">" << xl << "</text>\n";
  os << "<text x=\"16\" y=\"" << H / 2 << "\" transform=\"rotate(-90 16 " << H / 2
     << ")\" text-anchor=\"middle\" font-size=\"12\">" << yl << "</text>\n";
  os << "<text x=\"" << L << "\" y=\"" << H - B + 16 << "\" font-size=\"10\">" << fmt(f.x0) << "</text>\n";
  os << "<text x=\"" << W - R << "\" y=\"" << H - B + 16 << "\" text-anchor=\"end\" font-size=\"10\">" << fmt(f.x1)
     << "</text>\n";
  os << "<text x=\"" << L - 4 << "\" y=\"" << H - B << "\" text-anchor=\"end\" font-size=\"10\">" << fmt(f.y0)
     << "</text>\n";
  os << "<text x=\"" << L - 4 << "\" y=\"" << T + 8 << "\" text-anchor=\"end\" font-size=\"10\">" << fmt(f.y1)
     << "</text>\n";
  return os.str();
}

}  // namespace

std::string svg_scatter(const std::vector<std::pair<double, double>>& pts, const std::string& title,
                        const std::string& xlabel, const std::string& ylabel, bool log_y) {
  std::vector<std::pair<double, double>> p;
  for (auto [x, y] : pts) {
    if (log_y) {
      if (!(y > 0)) continue;
      y = std::log10(y);
    }
    p.push_back({x, y});
  }
  Frame f = frame_for(p);
  std::ostringstream os;
  os << header(f, title, xlabel, log_y ? "log10 " + ylabel : ylabel);
  for (auto [x, y] : p)
    os << "<circle cx=\"" << fmt(f.sx(x)) << "\" cy=\"" << fmt(f.sy(y)) << "\" r=\"2\" fill=\"steelblue\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string svg_line(const std::vector<std::pair<double, double>>& pts, const std::string& title,
                     const std::string& xlabel, const std::string& ylabel) {
  Frame f = frame_for(pts);
  std::ostringstream os;
  os << header(f, title, xlabel, ylabel);
  os << "<polyline fill=\"none\" stroke=\"firebrick\" stroke-width=\"2\" points=\"";
  for (auto [x, y] : pts) os << fmt(f.sx(x)) << ',' << fmt(f.sy(y)) << ' ';
  os << "\"/>\n";
  for (auto [x, y] : pts)
    os << "<circle cx=\"" << fmt(f.sx(x)) << "\" cy=\"" << fmt(f.sy(y)) << "\" r=\"3\" fill=\"firebrick\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace jones::lab
