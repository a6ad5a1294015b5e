#pragma once

#include <perfcast/sweep.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace perfcast {

struct ChartOptions {
    std::string title;
    bool show_legend = true;
};

/// Renders optimal-forecast curves (x: true probability, y: optimal
/// forecast, both on [0,1]) as a standalone 640x480 SVG 1.1 document with
/// the y = x diagonal for reference and one polyline per (rule, sweep).
/// Byte output is a pure function of the inputs. Throws
/// std::invalid_argument when there is nothing to plot.
void render_svg(const std::vector<SweepResult>& results, std::ostream& out,
                const ChartOptions& options = {});

} // namespace perfcast
