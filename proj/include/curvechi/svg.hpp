#pragma once

#include <string>
#include <vector>

#include "curvechi/burling.hpp"
#include "curvechi/families.hpp"

namespace curvechi {

struct SvgOptions {
    double width = 900;
    double margin = 20;
    bool labels = false;
};

// Curves in black over shaded probe strips, baseline in grey.
std::string render_svg(const CurveFamily& family, const std::vector<Probe>& probes = {}, SvgOptions options = {});

}  // namespace curvechi
