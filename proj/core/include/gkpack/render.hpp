#pragma once

#include <string>

#include "gkpack/types.hpp"

namespace gk {

// Renders a packing as a standalone SVG document: one <rect> per placement
// inside a single <g>, viewBox equal to the packing region, fill color
// derived deterministically from the item id. The y axis is flipped so the
// packing origin is the bottom-left corner of the image. An empty packing
// yields an empty group. Placements referencing unknown items are an error.
std::string render_svg(const Instance& inst, const Packing& packing);

}  // namespace gk
