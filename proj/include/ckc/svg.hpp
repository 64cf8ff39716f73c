#pragma once

#include <iosfwd>
#include <vector>

#include "ckc/io.hpp"

namespace ckc {

/// Draws configurations as polylines from the origin, one stroke color per
/// configuration. When with_circle is set, the circle of radius a_n around
/// the origin is drawn underneath; endpoints of circular configurations
/// land on it.
void write_config_svg(std::ostream& out, const ChainSpec& chain,
                      const std::vector<AngleVector>& configs, bool with_circle);

/// Scatter of the (C_4, C_3) projection with the reachability cut lines
/// C_3 = +-cut drawn across the plot.
void write_region_svg(std::ostream& out, const std::vector<RegionRow>& rows,
                      double cut);

}  // namespace ckc
