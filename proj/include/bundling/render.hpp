#ifndef BUNDLING_RENDER_HPP
#define BUNDLING_RENDER_HPP

#include <string>

#include "bundling/rectangulation.hpp"

namespace bundling {

/// Straight-line SVG drawing of the grounded arrangement, laid out by a
/// barycentric (Tutte-style) relaxation with the first boundary curve's
/// interior as the outer face. Strings are colored, cut-set segments are
/// overlaid as arrows, bundles are shaded. Cosmetic only: nothing downstream
/// depends on coordinates.
std::string render_svg(const DualNet& n, const Rectangulation* rect = nullptr,
                       const Bundling* bundles = nullptr);

}  // namespace bundling

#endif
