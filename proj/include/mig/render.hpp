#pragma once

#include "mig/interval.hpp"

#include <string>

namespace mig {

enum class RenderFormat { Ascii, Svg };

RenderFormat render_format_from_string(const std::string &s);

/// Diagram with one lane per track and one labeled bar per interval. The
/// density is characters per unit (ascii) or pixels per unit (svg). Throws
/// InvalidFamily when the family fails validation.
std::string render_family(const IntervalFamily &f, RenderFormat format, int density = 0);

} // namespace mig
