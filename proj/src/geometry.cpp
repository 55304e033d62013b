#include "latrect/geometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace latrect {

std::string to_string(const LatticeRect &r) {
    return "[" + std::to_string(r.a) + "," + std::to_string(r.b) + "]x[" + std::to_string(r.c) +
           "," + std::to_string(r.d) + "]";
}

CellRegion::CellRegion(int first_row, std::vector<RowSpan> spans) : first_row_(first_row) {
    for (const auto &s : spans)
        if (s.lo > s.hi)
            throw std::invalid_argument("row span with lo > hi");
    auto first = std::find_if(spans.begin(), spans.end(), [](RowSpan s) { return s.width() > 0; });
    auto last = std::find_if(spans.rbegin(), spans.rend(), [](RowSpan s) { return s.width() > 0; });
    if (first == spans.end()) {
        first_row_ = 0;
        return;
    }
    auto end = last.base();
    if (std::any_of(first, end, [](RowSpan s) { return s.width() == 0; }))
        throw std::invalid_argument("row indices of a cell region must be contiguous");
    first_row_ = first_row + static_cast<int>(first - spans.begin());
    spans_.assign(first, end);
}

std::optional<RowSpan> CellRegion::row(int j) const {
    if (j < first_row_ || j >= end_row())
        return std::nullopt;
    return spans_[static_cast<std::size_t>(j - first_row_)];
}

bool CellRegion::contains(Cell cell) const {
    auto span = row(cell.j);
    return span && span->lo <= cell.i && cell.i < span->hi;
}

std::int64_t CellRegion::cell_count() const {
    std::int64_t total = 0;
    for (const auto &s : spans_)
        total += s.width();
    return total;
}

std::vector<Cell> CellRegion::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(cell_count()));
    for (int j = first_row_; j < end_row(); ++j) {
        const auto s = spans_[static_cast<std::size_t>(j - first_row_)];
        for (int i = s.lo; i < s.hi; ++i)
            out.push_back({i, j});
    }
    return out;
}

CellRegion CellRegion::translated(int dx, int dy) const {
    CellRegion out = *this;
    out.first_row_ += dy;
    for (auto &s : out.spans_) {
        s.lo += dx;
        s.hi += dx;
    }
    out.origin_ = {origin_.first + dx, origin_.second + dy};
    return out;
}

CellRegion CellRegion::from_cells(std::vector<Cell> cells) {
    if (cells.empty())
        return {};
    std::sort(cells.begin(), cells.end(),
              [](Cell l, Cell r) { return l.j != r.j ? l.j < r.j : l.i < r.i; });
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    const int first = cells.front().j;
    std::vector<RowSpan> spans(static_cast<std::size_t>(cells.back().j - first + 1));
    std::size_t k = 0;
    while (k < cells.size()) {
        const int j = cells[k].j;
        const int lo = cells[k].i;
        int hi = lo + 1;
        ++k;
        for (; k < cells.size() && cells[k].j == j; ++k) {
            if (cells[k].i != hi)
                throw std::invalid_argument("cells are not row-convex at row " + std::to_string(j));
            ++hi;
        }
        spans[static_cast<std::size_t>(j - first)] = {lo, hi};
    }
    return CellRegion(first, std::move(spans));
}

void ShapeSpec::validate() const {
    const int min_order = family == Family::Staircase ? 0 : 1;
    if (order < min_order)
        throw std::invalid_argument("order must be >= " + std::to_string(min_order) + ", got " +
                                    std::to_string(order));
}

bool operator==(const ShapeSpec &lhs, const ShapeSpec &rhs) {
    if (lhs.family != rhs.family || lhs.order != rhs.order)
        return false;
    switch (lhs.family) {
    case Family::Staircase: return lhs.orientation == rhs.orientation;
    case Family::AztecHalf: return lhs.side == rhs.side;
    case Family::BiscuitHalf: return lhs.part == rhs.part;
    default: return true;
    }
}

namespace {

// Row profile of the canonical Aztec diamond: distance from the middle.
int aztec_level(int j) { return j >= 0 ? j : -j - 1; }

CellRegion make_rows(int first_row, int rows, auto span_of) {
    std::vector<RowSpan> spans;
    spans.reserve(static_cast<std::size_t>(std::max(rows, 0)));
    for (int j = first_row; j < first_row + rows; ++j)
        spans.push_back(span_of(j));
    return CellRegion(first_row, std::move(spans));
}

CellRegion build_staircase(int n, Orientation o) {
    switch (o) {
    case Orientation::DL: return make_rows(0, n, [n](int j) { return RowSpan{0, n - j}; });
    case Orientation::UL: return make_rows(0, n, [](int j) { return RowSpan{0, j + 1}; });
    case Orientation::DR: return make_rows(0, n, [n](int j) { return RowSpan{j, n}; });
    case Orientation::UR: return make_rows(0, n, [n](int j) { return RowSpan{n - 1 - j, n}; });
    }
    throw std::invalid_argument("bad staircase orientation");
}

CellRegion build_aztec_half(int n, HalfSide side) {
    switch (side) {
    case HalfSide::Top: return make_rows(0, n, [n](int j) { return RowSpan{-(n - j), n - j}; });
    case HalfSide::Bottom:
        return make_rows(-n, n, [n](int j) {
            const int w = n - aztec_level(j);
            return RowSpan{-w, w};
        });
    case HalfSide::Left:
        return make_rows(-n, 2 * n, [n](int j) { return RowSpan{-(n - aztec_level(j)), 0}; });
    case HalfSide::Right:
        return make_rows(-n, 2 * n, [n](int j) { return RowSpan{0, n - aztec_level(j)}; });
    }
    throw std::invalid_argument("bad Aztec half side");
}

}  // namespace

CellRegion build(const ShapeSpec &spec) {
    spec.validate();
    const int n = spec.order;
    switch (spec.family) {
    case Family::Aztec:
        return make_rows(-n, 2 * n, [n](int j) {
            const int w = n - aztec_level(j);
            return RowSpan{-w, w};
        });
    case Family::Biscuit:
        return make_rows(-(n - 1), 2 * n - 1, [n](int j) {
            const int k = std::abs(j);
            return RowSpan{k - n + 1, n - k};
        });
    case Family::Staircase: return build_staircase(n, spec.orientation);
    case Family::AztecHalf: return build_aztec_half(n, spec.side);
    case Family::BiscuitHalf:
        // Both parts have the wide row at the bottom; the smaller part is
        // rows 1..n-1 of Biscuit(n).
        if (spec.part == BiscuitPart::Larger)
            return make_rows(0, n, [n](int j) { return RowSpan{j - n + 1, n - j}; });
        return make_rows(1, n - 1, [n](int j) { return RowSpan{j - n + 1, n - j}; });
    }
    throw std::invalid_argument("bad shape family");
}

bool contains_rect(const CellRegion &region, const LatticeRect &r) {
    if (!r.valid())
        return false;
    if (r.c < region.first_row() || r.d > region.end_row())
        return false;
    const auto &spans = region.spans();
    for (int j = r.c; j < r.d; ++j) {
        const auto s = spans[static_cast<std::size_t>(j - region.first_row())];
        if (r.a < s.lo || r.b > s.hi)
            return false;
    }
    return true;
}

std::optional<LatticeRect> bounding_box_if_any(const CellRegion &region) {
    if (region.empty())
        return std::nullopt;
    int lo = region.spans().front().lo;
    int hi = region.spans().front().hi;
    for (const auto &s : region.spans()) {
        lo = std::min(lo, s.lo);
        hi = std::max(hi, s.hi);
    }
    return LatticeRect{lo, hi, region.first_row(), region.end_row()};
}

LatticeRect bounding_box(const CellRegion &region) {
    auto box = bounding_box_if_any(region);
    if (!box)
        throw std::invalid_argument("bounding box of an empty region");
    return *box;
}

std::string to_string(const Axis &axis) {
    if (axis.kind == Axis::Kind::LatticeVertical)
        return "x=" + std::to_string(axis.x0);
    return "x=" + std::to_string(axis.x0) + "+1/2";
}

namespace {

CellRegion clip_columns(const CellRegion &region, int lo, int hi) {
    std::vector<RowSpan> spans;
    spans.reserve(region.row_count());
    for (const auto &s : region.spans()) {
        RowSpan c{std::max(s.lo, lo), std::min(s.hi, hi)};
        if (c.lo > c.hi)
            c = {0, 0};
        spans.push_back(c);
    }
    return CellRegion(region.first_row(), std::move(spans));
}

CellRegion clip_rows(const CellRegion &region, int lo, int hi) {
    std::vector<RowSpan> spans;
    for (int j = std::max(lo, region.first_row()); j < std::min(hi, region.end_row()); ++j)
        spans.push_back(*region.row(j));
    return CellRegion(std::max(lo, region.first_row()), std::move(spans));
}

constexpr int kUnbounded = 1 << 29;

}  // namespace

HalfSplit split_half(const CellRegion &region, const ShapeSpec &spec) {
    if (spec.family != Family::Aztec && spec.family != Family::Biscuit)
        throw std::invalid_argument("split_half needs an Aztec diamond or a square biscuit, got " +
                                    std::string(to_string(spec.family)));
    const auto [px, py] = region.origin();
    HalfSplit out{clip_columns(region, -kUnbounded, px), clip_columns(region, px, kUnbounded),
                  spec.family == Family::Aztec ? Axis::lattice(px) : Axis::half(px)};
    return out;
}

std::vector<PlacedStaircase> split_staircases(const ShapeSpec &spec) {
    spec.validate();
    const int n = spec.order;
    int order_dr = n, order_ul = n, order_ur = n;
    if (spec.family == Family::Biscuit) {
        if (n < 2)
            throw std::invalid_argument("four-staircase split of a biscuit needs order >= 2");
        order_dr = n - 1;
        order_ul = n - 1;
        order_ur = n - 2;
    } else if (spec.family != Family::Aztec) {
        throw std::invalid_argument("split_staircases needs an Aztec diamond or a square biscuit");
    }

    const CellRegion whole = build(spec);
    const auto upper = clip_rows(whole, 0, kUnbounded);
    const auto lower = clip_rows(whole, -kUnbounded, 0);
    return {
        {ShapeSpec::staircase(n, Orientation::DL), clip_columns(upper, 0, kUnbounded)},
        {ShapeSpec::staircase(order_dr, Orientation::DR), clip_columns(upper, -kUnbounded, 0)},
        {ShapeSpec::staircase(order_ul, Orientation::UL), clip_columns(lower, 0, kUnbounded)},
        {ShapeSpec::staircase(order_ur, Orientation::UR), clip_columns(lower, -kUnbounded, 0)},
    };
}

std::string_view to_string(Dihedral g) {
    switch (g) {
    case Dihedral::Identity: return "identity";
    case Dihedral::Rot90Cw: return "rot90cw";
    case Dihedral::Rot180: return "rot180";
    case Dihedral::Rot270Cw: return "rot270cw";
    case Dihedral::FlipX: return "flipx";
    case Dihedral::FlipY: return "flipy";
    case Dihedral::Transpose: return "transpose";
    case Dihedral::AntiTranspose: return "antitranspose";
    }
    return "?";
}

namespace {

bool swaps_axes(Dihedral g) {
    return g == Dihedral::Rot90Cw || g == Dihedral::Rot270Cw || g == Dihedral::Transpose ||
           g == Dihedral::AntiTranspose;
}

std::pair<long long, long long> apply(Dihedral g, long long x, long long y) {
    switch (g) {
    case Dihedral::Identity: return {x, y};
    case Dihedral::Rot90Cw: return {y, -x};
    case Dihedral::Rot180: return {-x, -y};
    case Dihedral::Rot270Cw: return {-y, x};
    case Dihedral::FlipX: return {-x, y};
    case Dihedral::FlipY: return {x, -y};
    case Dihedral::Transpose: return {y, x};
    case Dihedral::AntiTranspose: return {-y, -x};
    }
    return {x, y};
}

}  // namespace

CellRegion transform(const CellRegion &region, Dihedral g, int cx2, int cy2) {
    if (swaps_axes(g) && (cx2 - cy2) % 2 != 0)
        throw std::invalid_argument("axis-swapping symmetry needs a center with equal parities");
    // Work with doubled coordinates of cell centers so half-integer centers stay exact.
    std::vector<Cell> image;
    image.reserve(static_cast<std::size_t>(region.cell_count()));
    for (const auto &cell : region.cells()) {
        const auto [dx, dy] = apply(g, 2LL * cell.i + 1 - cx2, 2LL * cell.j + 1 - cy2);
        image.push_back({static_cast<int>((cx2 + dx - 1) / 2), static_cast<int>((cy2 + dy - 1) / 2)});
    }
    return CellRegion::from_cells(std::move(image));
}

std::pair<int, int> box_center_twice(const CellRegion &region) {
    const auto box = bounding_box(region);
    return {box.a + box.b, box.c + box.d};
}

}  // namespace latrect
