#include "latrect/counting.hpp"

#include <cstdint>

#include "latrect/formulas.hpp"

namespace latrect {

std::string_view to_string(CrossingClass k) {
    switch (k) {
    case CrossingClass::L: return "L";
    case CrossingClass::R: return "R";
    case CrossingClass::C: return "C";
    case CrossingClass::NonCrossing: return "noncrossing";
    }
    return "?";
}

std::string_view to_string(Method m) {
    switch (m) {
    case Method::Naive: return "naive";
    case Method::Fast: return "fast";
    case Method::Formula: return "formula";
    }
    return "?";
}

namespace {

/// Cumulative cell counts over the bounding box.
class PrefixTable {
public:
    explicit PrefixTable(const CellRegion &region) : box_(bounding_box(region)) {
        w_ = box_.width();
        h_ = box_.height();
        sums_.assign(static_cast<std::size_t>(w_ + 1) * static_cast<std::size_t>(h_ + 1), 0);
        for (int y = 0; y < h_; ++y) {
            const auto span = *region.row(box_.c + y);
            for (int x = 0; x < w_; ++x) {
                const bool filled = span.lo <= box_.a + x && box_.a + x < span.hi;
                at(x + 1, y + 1) = (filled ? 1 : 0) + at(x, y + 1) + at(x + 1, y) - at(x, y);
            }
        }
    }

    const LatticeRect &box() const { return box_; }

    bool full(const LatticeRect &r) const {
        const int x0 = r.a - box_.a, x1 = r.b - box_.a, y0 = r.c - box_.c, y1 = r.d - box_.c;
        const std::int64_t area = static_cast<std::int64_t>(x1 - x0) * (y1 - y0);
        return at(x1, y1) - at(x0, y1) - at(x1, y0) + at(x0, y0) == area;
    }

private:
    std::int64_t &at(int x, int y) { return sums_[static_cast<std::size_t>(y) * (w_ + 1) + x]; }
    std::int64_t at(int x, int y) const { return sums_[static_cast<std::size_t>(y) * (w_ + 1) + x]; }

    LatticeRect box_;
    int w_ = 0;
    int h_ = 0;
    std::vector<std::int64_t> sums_;
};

}  // namespace

void for_each_rect(const CellRegion &region, const std::function<void(const LatticeRect &)> &visit) {
    if (region.empty())
        return;
    const PrefixTable table(region);
    const auto &box = table.box();
    for (int c = box.c; c < box.d; ++c)
        for (int d = c + 1; d <= box.d; ++d)
            for (int a = box.a; a < box.b; ++a)
                for (int b = a + 1; b <= box.b; ++b) {
                    const LatticeRect r{a, b, c, d};
                    if (table.full(r))
                        visit(r);
                }
}

std::vector<LatticeRect> enumerate_rects(const CellRegion &region) {
    std::vector<LatticeRect> out;
    for_each_rect(region, [&](const LatticeRect &r) { out.push_back(r); });
    return out;
}

Count count_naive(const CellRegion &region) {
    Count total;
    for_each_rect(region, [&](const LatticeRect &) { total += Count(1); });
    return total;
}

Count count_fast(const CellRegion &region) {
    if (region.empty())
        return Count(0);
    const auto box = bounding_box(region);
    const auto width = static_cast<std::size_t>(box.width());

    // heights[x]: filled cells in column x from the current row upward.
    // per_col[x]: rectangles with bottom-right cell (x, row).
    std::vector<std::uint64_t> heights(width, 0);
    std::vector<std::uint64_t> per_col(width, 0);
    std::vector<std::size_t> stack;
    stack.reserve(width);

    Count total;
    RowSpan above{0, 0};
    for (int j = region.end_row() - 1; j >= region.first_row(); --j) {
        const RowSpan span = *region.row(j);
        stack.clear();
        for (int i = span.lo; i < span.hi; ++i) {
            const auto x = static_cast<std::size_t>(i - box.a);
            heights[x] = (above.lo <= i && i < above.hi) ? heights[x] + 1 : 1;
            while (!stack.empty() && heights[stack.back()] >= heights[x])
                stack.pop_back();
            // Every column after the previous lower bar adds heights[x] rectangles.
            const long long left_limit = stack.empty() ? static_cast<long long>(span.lo - box.a) - 1
                                                       : static_cast<long long>(stack.back());
            const std::uint64_t prev = stack.empty() ? 0 : per_col[stack.back()];
            const auto run_width = static_cast<std::uint64_t>(static_cast<long long>(x) - left_limit);
            std::uint64_t run = 0;
            if (__builtin_mul_overflow(heights[x], run_width, &run) ||
                __builtin_add_overflow(prev, run, &per_col[x]))
                throw OverflowError("per-column rectangle count overflow");
            total += Count(per_col[x]);
            stack.push_back(x);
        }
        above = span;
    }
    return total;
}

CrossingClass classify(const LatticeRect &r, const Axis &axis) {
    const long long t = axis.twice();
    const long long left = t - 2LL * r.a;
    const long long right = 2LL * r.b - t;
    if (left <= 0 || right <= 0)
        return CrossingClass::NonCrossing;
    if (left > right)
        return CrossingClass::L;
    if (left < right)
        return CrossingClass::R;
    return CrossingClass::C;
}

CountBreakdown count_breakdown(const CellRegion &region, const Axis &axis) {
    CountBreakdown out;
    for_each_rect(region, [&](const LatticeRect &r) {
        out[classify(r, axis)] += Count(1);
        out.total += Count(1);
    });
    return out;
}

Count count_family(const ShapeSpec &spec, Method method) {
    spec.validate();
    switch (method) {
    case Method::Naive: return count_naive(build(spec));
    case Method::Fast: return count_fast(build(spec));
    case Method::Formula: break;
    }
    const std::int64_t n = spec.order;
    switch (spec.family) {
    case Family::Aztec: return formulas::a(n);
    case Family::Biscuit: return formulas::b(n);
    case Family::Staircase: return formulas::s(n);
    case Family::AztecHalf: return formulas::a_half(n);
    case Family::BiscuitHalf:
        return spec.part == BiscuitPart::Larger ? formulas::b_half(n) : formulas::b_half(n - 1);
    }
    throw std::invalid_argument("no closed form for " + format_shape_spec(spec));
}

}  // namespace latrect
