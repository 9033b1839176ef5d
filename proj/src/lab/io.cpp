#include "jones/lab/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace jones::lab {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

json space_to_json(const NormedSpace& s) {
  json j;
  j["norm"] = "lp";
  if (s.is_infinite_p())
    j["p"] = "inf";
  else
    j["p"] = s.p;
  j["dim"] = s.dim;
  return j;
}

NormedSpace space_from_json(const json& j) {
  if (!j.is_object()) throw InputError("space must be a JSON object");
  if (j.value("norm", std::string("lp")) != "lp") throw InputError("only l_p norms are supported");
  double p = 2.0;
  if (j.contains("p")) {
    const auto& pj = j["p"];
    if (pj.is_string()) {
      if (pj.get<std::string>() != "inf") throw InputError("p must be a number or \"inf\"");
      p = std::numeric_limits<double>::infinity();
    } else if (pj.is_number()) {
      p = pj.get<double>();
    } else {
      throw InputError("p must be a number or \"inf\"");
    }
  }
  int dim = j.value("dim", 2);
  return NormedSpace::lp(dim, p);
}

json point_to_json(const Point& p) {
  json a = json::array();
  for (int i = 0; i < p.dim(); ++i) a.push_back(p[i]);
  return a;
}

Point point_from_json(const json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) throw InputError("point has the wrong dimension");
  Point p(dim);
  for (int i = 0; i < dim; ++i) {
    if (!j[i].is_number()) throw InputError("point coordinates must be numbers");
    p[i] = j[i].get<double>();
  }
  return p;
}

json curve_to_json(const Curve& c) {
  json j;
  j["space"] = space_to_json(c.space());
  j["closed"] = c.closed();
  json v = json::array();
  for (const auto& p : c.vertices()) v.push_back(point_to_json(p));
  j["vertices"] = v;
  return j;
}

Curve curve_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw InputError("curve JSON needs a vertices array");
  NormedSpace s = j.contains("space") ? space_from_json(j["space"]) : NormedSpace::l2();
  std::vector<Point> v;
  for (const auto& p : j["vertices"]) v.push_back(point_from_json(p, s.dim));
  return Curve(s, v, j.value("closed", false));
}

json nets_to_json(const MultiresFamily& f) {
  json j;
  json levels = json::array();
  const auto& h = f.hierarchy();
  for (int k = h.k_min(); k <= h.k_max(); ++k) {
    json lv;
    lv["k"] = k;
    json pts = json::array();
    for (const auto& p : h.level(k)) pts.push_back(point_to_json(p));
    lv["points"] = pts;
    if (h.is_partial(k)) lv["partial"] = true;
    levels.push_back(lv);
  }
  j["levels"] = levels;
  j["inflation"] = f.inflation();
  return j;
}

std::string balls_csv(const MultiresFamily& f) {
  std::ostringstream os;
  int d = f.hierarchy().space().dim;
  const char* names = "xyzwuvst";
  os << "id,level";
  for (int i = 0; i < d; ++i) os << ",c" << names[i];
  os << ",radius\n";
  for (const auto& b : f.balls()) {
    os << b.id.str() << ',' << b.level;
    for (int i = 0; i < d; ++i) os << ',' << fmt(b.center[i]);
    os << ',' << fmt(b.r()) << '\n';
  }
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace jones::lab
