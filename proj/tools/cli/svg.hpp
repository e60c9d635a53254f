#pragma once

#include <string>
#include <vector>

#include "dplane/double.hpp"

namespace dplane::cli {

struct BBox {
    double t_min = -10, t_max = 10, x_min = -10, x_max = 10;
};

struct Polyline {
    std::string id;
    std::vector<Double> points;
};

struct SvgOptions {
    bool cone = true;  // dashed asymptotes t = +-x through cone_center
    Double cone_center;
    std::string title;
};

// Horizontal axis x, vertical axis t pointing up; viewBox is the box itself.
std::string render_svg(const std::vector<Polyline>& lines, const BBox& box, const SvgOptions& opt = {});

}  // namespace dplane::cli
