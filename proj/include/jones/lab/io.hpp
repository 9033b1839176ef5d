#pragma once

#include <string>

#include <json.hpp>

#include "jones/curve.hpp"
#include "jones/net.hpp"

namespace jones::lab {

using json = nlohmann::ordered_json;

/// {"norm":"lp","p":2.0,"dim":2}; p = infinity is written as "inf".
json space_to_json(const NormedSpace& s);
NormedSpace space_from_json(const json& j);

json point_to_json(const Point& p);
Point point_from_json(const json& j, int dim);

/// {"space":{...},"closed":false,"vertices":[[x,y],...]}
json curve_to_json(const Curve& c);
Curve curve_from_json(const json& j);

/// {"levels":[{"k":0,"points":[[...]]}],"inflation":A}
json nets_to_json(const MultiresFamily& f);

/// id,level,cx,cy,...,radius
std::string balls_csv(const MultiresFamily& f);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Shortest round-trip decimal form, so outputs are byte-stable.
std::string fmt(double v);

}  // namespace jones::lab
