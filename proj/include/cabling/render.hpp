#pragma once

// Mountain-range rendering: rot horizontal, tb vertical, one labeled node
// per populated lattice point with stabilization arrows to the two children.

#include <string>

#include "cabling/atlas.hpp"

namespace cabling {

enum class RenderFormat { ascii, svg, json };
enum class LabelMode { counts, ids };

struct RenderSpec {
    RenderFormat format = RenderFormat::ascii;
    Int tb_floor = 0;
    LabelMode label_mode = LabelMode::counts;
};

RenderFormat parse_render_format(const std::string& text);

// Deterministic text output; SVG coordinates are the only scaled values
// (48 px per lattice unit).
std::string render_mountain_range(const MountainRange& range, const RenderSpec& spec);

}  // namespace cabling
