#include "latrect/render.hpp"

#include <sstream>

namespace latrect {

std::string render_ascii(const CellRegion &region, const std::optional<Axis> &axis) {
    const auto box = bounding_box_if_any(region);
    if (!box)
        return {};
    const long long t = axis ? axis->twice() : 0;
    std::string out;
    for (int j = box->d - 1; j >= box->c; --j) {
        for (int i = box->a; i < box->b; ++i) {
            if (axis && axis->kind == Axis::Kind::LatticeVertical && i == axis->x0)
                out += '|';
            const bool filled = region.contains({i, j});
            if (axis && axis->kind == Axis::Kind::HalfVertical && 2LL * i + 1 == t)
                out += filled ? '+' : ':';
            else
                out += filled ? '#' : '.';
        }
        if (axis && axis->kind == Axis::Kind::LatticeVertical && box->b == axis->x0)
            out += '|';
        out += '\n';
    }
    return out;
}

std::string render_svg(const CellRegion &region, const std::optional<Axis> &axis) {
    constexpr int kScale = 20;
    const auto box = bounding_box_if_any(region).value_or(LatticeRect{0, 1, 0, 1});
    // One unit of margin on every side.
    const int width = box.width() + 2;
    const int height = box.height() + 2;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width * kScale << "\" height=\""
        << height * kScale << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<g fill=\"#f2b134\" fill-opacity=\"0.6\" stroke=\"#333333\" stroke-width=\"0.05\">\n";
    for (const auto &cell : region.cells()) {
        const int x = cell.i - box.a + 1;
        const int y = box.d - cell.j;  // flip so higher rows are drawn on top
        svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"1\" height=\"1\"/>\n";
    }
    svg << "</g>\n";
    if (axis) {
        const double x = static_cast<double>(axis->twice() - 2LL * box.a + 2) / 2.0;
        svg << "<line x1=\"" << x << "\" y1=\"0.5\" x2=\"" << x << "\" y2=\"" << height - 0.5
            << "\" stroke=\"#000000\" stroke-width=\"0.08\" stroke-dasharray=\"0.2 0.15\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace latrect
