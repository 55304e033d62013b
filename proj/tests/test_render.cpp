#include <gtest/gtest.h>

#include "latrect/render.hpp"

namespace {

using namespace latrect;

TEST(RenderAscii, Shapes) {
    EXPECT_EQ(render_ascii(build(ShapeSpec::aztec(1))), "##\n##\n");
    EXPECT_EQ(render_ascii(build(ShapeSpec::biscuit(2))), ".#.\n###\n.#.\n");
    EXPECT_EQ(render_ascii(build(ShapeSpec::staircase(3))), "#..\n##.\n###\n");
    EXPECT_EQ(render_ascii(build(ShapeSpec::staircase(2, Orientation::UR))), "##\n.#\n");
    EXPECT_EQ(render_ascii(CellRegion{}), "");
}

TEST(RenderAscii, Axes) {
    EXPECT_EQ(render_ascii(build(ShapeSpec::aztec(1)), Axis::lattice(0)), "#|#\n#|#\n");
    EXPECT_EQ(render_ascii(build(ShapeSpec::biscuit(2)), Axis::half(0)), ".+.\n#+#\n.+.\n");
    EXPECT_EQ(render_ascii(build(ShapeSpec::biscuit_half(2)), Axis::half(0)), ".+.\n#+#\n");
}

TEST(RenderSvg, DeterministicAndComplete) {
    const auto region = build(ShapeSpec::aztec(2));
    const auto svg = render_svg(region, Axis::lattice(0));
    EXPECT_EQ(svg, render_svg(region, Axis::lattice(0)));
    std::size_t rects = 0;
    for (auto pos = svg.find("<rect"); pos != std::string::npos; pos = svg.find("<rect", pos + 1))
        ++rects;
    EXPECT_EQ(rects, 12u);
    EXPECT_NE(svg.find("viewBox=\"0 0 6 6\""), std::string::npos);
    EXPECT_NE(svg.find("<line x1=\"3\""), std::string::npos);
    EXPECT_NE(render_svg(build(ShapeSpec::biscuit(2)), Axis::half(0)).find("<line x1=\"2.5\""), std::string::npos);
    EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
}

}  // namespace
