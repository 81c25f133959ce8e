#pragma once

#include <ostream>
#include <vector>

#include "rkp/toric.hpp"

namespace rkp {

/// Static SVG 1.1 rendering of the moment-map picture: bounded region
/// filled, unbounded region outlined, the pinch point marked when the two
/// touch at the critical energy. Coordinates are written at 6 decimals;
/// the viewBox spans [0, 1.2 t_hi] x [-1.2 t_hi, 1.2 t_hi] where t_hi is
/// the largest sampled abscissa.
void write_profile_svg(std::ostream& os, const std::vector<DomainProfile>& profiles);

}  // namespace rkp
