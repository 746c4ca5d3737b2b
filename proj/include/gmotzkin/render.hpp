#ifndef GMOTZKIN_RENDER_HPP
#define GMOTZKIN_RENDER_HPP

// Drawings of a single path. x advances one unit per u, d or h step; a v step
// drops one unit in place.

#include <cstddef>
#include <string>

#include "gmotzkin/path.hpp"

namespace gmotzkin {

// Text art, one row per unit band, top row first. Column 2x+1 carries the
// step leaving abscissa x ('/', '\', '_'); column 2x carries the drops at x
// ('|'). Every line ends with a newline; trailing spaces are trimmed.
std::string render_text(const Path& p);

// SVG 1.1 using only <line> and <circle>.
std::string render_svg(const Path& p);

struct SegmentTally {
    std::size_t advancing = 0;
    std::size_t vertical = 0;
};

// Counts drawn segments in either output of the render functions.
SegmentTally count_text_segments(const std::string& text);
SegmentTally count_svg_segments(const std::string& svg);

}  // namespace gmotzkin

#endif  // GMOTZKIN_RENDER_HPP
