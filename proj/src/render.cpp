#include "gmotzkin/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace gmotzkin {

std::string render_text(const Path& p)
{
    const std::string& w = p.word();
    std::size_t rows = 0;
    std::size_t columns = 0;
    {
        long h = 0, x = 0;
        for (char s : w) {
            if (s == 'u')
                rows = std::max<std::size_t>(rows, h + 1);
            if (s == 'h')
                rows = std::max<std::size_t>(rows, h + 1);
            h += word::step_delta(s);
            x += s == 'v' ? 0 : 1;
        }
        columns = 2 * static_cast<std::size_t>(x) + 1;
    }

    std::vector<std::string> grid(rows, std::string(columns, ' '));
    long h = 0;
    std::size_t x = 0;
    for (char s : w) {
        switch (s) {
            case 'u': grid[h][2 * x + 1] = '/'; break;
            case 'd': grid[h - 1][2 * x + 1] = '\\'; break;
            case 'h': grid[h][2 * x + 1] = '_'; break;
            case 'v': grid[h - 1][2 * x] = '|'; break;
        }
        h += word::step_delta(s);
        x += s == 'v' ? 0 : 1;
    }

    std::string out;
    for (auto row = grid.rbegin(); row != grid.rend(); ++row) {
        std::string line = *row;
        line.erase(line.find_last_not_of(' ') + 1);
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_svg(const Path& p)
{
    constexpr int kUnit = 20;
    constexpr int kMargin = 10;
    const std::string& w = p.word();

    long max_h = 0;
    {
        long h = 0;
        for (char s : w) {
            h += word::step_delta(s);
            max_h = std::max(max_h, h);
        }
    }
    const long width = static_cast<long>(p.length()) * kUnit + 2 * kMargin;
    const long height = max_h * kUnit + 2 * kMargin;
    auto px = [&](long x) { return kMargin + x * kUnit; };
    auto py = [&](long h) { return kMargin + (max_h - h) * kUnit; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\">\n";
    long x = 0, h = 0;
    std::vector<std::pair<long, long>> points{{0, 0}};
    for (char s : w) {
        long nx = x + (s == 'v' ? 0 : 1);
        long nh = h + word::step_delta(s);
        os << "  <line class=\"" << (s == 'v' ? "drop" : "step") << "\" x1=\"" << px(x) << "\" y1=\"" << py(h)
           << "\" x2=\"" << px(nx) << "\" y2=\"" << py(nh) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        x = nx;
        h = nh;
        points.emplace_back(x, h);
    }
    for (auto [cx, ch] : points)
        os << "  <circle cx=\"" << px(cx) << "\" cy=\"" << py(ch) << "\" r=\"3\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

SegmentTally count_text_segments(const std::string& text)
{
    SegmentTally t;
    for (char c : text) {
        if (c == '/' || c == '\\' || c == '_')
            ++t.advancing;
        else if (c == '|')
            ++t.vertical;
    }
    return t;
}

SegmentTally count_svg_segments(const std::string& svg)
{
    auto occurrences = [&](const std::string& needle) {
        std::size_t n = 0;
        for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1))
            ++n;
        return n;
    };
    return {occurrences("class=\"step\""), occurrences("class=\"drop\"")};
}

}  // namespace gmotzkin
