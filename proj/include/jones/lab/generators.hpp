#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jones/curve.hpp"

namespace jones::lab {

using Params = std::map<std::string, double>;

/// Deterministic polyline by name: segment, zigzag, koch, circle, spiral,
/// plus_sign, radial_spoke, t_junction, random_walk. Throws InputError for
/// unknown names.
Curve generate(const std::string& name, const Params& params, const NormedSpace& space);

std::vector<std::string> generator_names();

Curve segment(const NormedSpace& space, double length = 1.0);
Curve zigzag(const NormedSpace& space, int teeth = 4, double height = 0.25);
/// Leg length 1/(2(1+cos angle)) per level, so the length is (4 leg)^depth.
Curve koch(const NormedSpace& space, int depth, double angle_deg = 60.0);
Curve circle(const NormedSpace& space, int n, double radius = 1.0);
Curve spiral(const NormedSpace& space, double turns, int n);
Curve plus_sign(const NormedSpace& space);
Curve radial_spoke(const NormedSpace& space);
Curve t_junction(const NormedSpace& space, double delta);
Curve random_walk(const NormedSpace& space, int n, uint64_t seed);

/// Curve vertices plus equally spaced points on each segment, in parameter
/// order. spacing <= 0 selects min(min segment length, diam / 64).
std::vector<Point> sample_curve(const Curve& c, double spacing = 0.0);
double default_spacing(const Curve& c);

}  // namespace jones::lab
