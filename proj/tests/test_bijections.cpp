#include <gtest/gtest.h>

#include "latrect/bijections.hpp"
#include "latrect/counting.hpp"
#include "latrect/formulas.hpp"

namespace {

using namespace latrect;
using namespace latrect::bijections;

TEST(Quadruple, OrderOneStaircase) {
    EXPECT_EQ(staircase_to_quadruple({0, 1, 0, 1}, 1), (Quadruple{0, 1, 2, 3}));
    EXPECT_EQ(quadruple_to_staircase({0, 1, 2, 3}, 1), (LatticeRect{0, 1, 0, 1}));
}

TEST(Quadruple, RoundTripAndRange) {
    for (int n = 1; n <= 9; ++n)
        for (const auto &r : enumerate_rects(build(ShapeSpec::staircase(n)))) {
            const auto q = staircase_to_quadruple(r, n);
            EXPECT_TRUE(0 <= q.a && q.a < q.b && q.b < q.c && q.c < q.d && q.d <= n + 2) << to_string(q);
            EXPECT_EQ(quadruple_to_staircase(q, n), r);
        }
    EXPECT_THROW(quadruple_to_staircase({0, 2, 2, 3}, 3), std::invalid_argument);
    EXPECT_THROW(staircase_to_quadruple({0, 3, 0, 2}, 3), std::invalid_argument);
}

TEST(TypeL, Examples) {
    EXPECT_EQ(type_l_map({-3, 2, 1, 3}, 5), (LatticeRect{2, 3, 1, 3}));
    EXPECT_EQ(type_l_map({-2, 1, 0, 1}, 3), (LatticeRect{1, 2, 0, 1}));
    EXPECT_EQ(type_l_unmap({2, 3, 1, 3}, 5), (LatticeRect{-3, 2, 1, 3}));
    EXPECT_THROW(type_l_map({-1, 2, 0, 1}, 3), std::invalid_argument);
}

TEST(TypeR, Example) {
    EXPECT_EQ(type_r_map({-1, 3, 1, 3}, 5), (LatticeRect{1, 3, 1, 3}));
    EXPECT_EQ(type_r_unmap({1, 3, 1, 3}, 5), (LatticeRect{-1, 3, 1, 3}));
    EXPECT_THROW(type_r_map({-3, 1, 0, 1}, 4), std::invalid_argument);
}

TEST(TypeC, Example) {
    EXPECT_EQ(type_c_anchor({-2, 2, 0, 1}), (LatticeRect{0, 2, 0, 1}));
    EXPECT_EQ(type_c_unanchor({0, 2, 0, 1}), (LatticeRect{-2, 2, 0, 1}));
    EXPECT_THROW(type_c_anchor({-2, 3, 0, 1}), std::invalid_argument);
}

TEST(BiscuitExpand, InsertsAColumn) {
    EXPECT_EQ(biscuit_expand_map({-1, 3, 1, 3}, 5), (LatticeRect{-2, 3, 1, 3}));
    EXPECT_EQ(biscuit_shrink_map({-2, 3, 1, 3}, 5), (LatticeRect{-1, 3, 1, 3}));
    EXPECT_THROW(biscuit_expand_map({1, 3, 0, 1}, 5), std::invalid_argument);
}

TEST(Verify, AllMapsUpToTwelve) {
    using formulas::s;
    for (auto name : kMapNames)
        for (int n = 1; n <= 12; ++n) {
            const auto report = verify_bijection(name, n);
            EXPECT_TRUE(report.verified()) << name << " n=" << n << " "
                                           << report.counterexample.value_or("");
            EXPECT_FALSE(report.counterexample);
            Count expected;
            if (name == "quadruple")
                expected = s(n);
            else if (name == "type_l" || name == "type_r")
                expected = s(n - 1);
            else if (name == "type_c")
                expected = s(n) - s(n - 1);
            else
                expected = s(n) + s(n - 1);
            EXPECT_EQ(report.domain_size, expected) << name << " n=" << n;
        }
}

TEST(Verify, Limits) {
    EXPECT_THROW(verify_bijection("nosuch", 3), std::invalid_argument);
    EXPECT_THROW(verify_bijection("type_l", 0), std::invalid_argument);
    EXPECT_THROW(verify_bijection("type_l", kMaxExhaustiveOrder + 1), std::invalid_argument);
    EXPECT_TRUE(verify_bijection("quadruple", kMaxExhaustiveOrder).verified());
}

}  // namespace
