#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latrect {

/// Unit lattice square [i, i+1] x [j, j+1].
struct Cell {
    int i = 0;
    int j = 0;

    friend constexpr bool operator==(const Cell &, const Cell &) = default;
    friend constexpr auto operator<=>(const Cell &, const Cell &) = default;
};

/// Lattice rectangle [a, b] x [c, d] with a < b and c < d.
struct LatticeRect {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    constexpr bool valid() const { return a < b && c < d; }
    constexpr int width() const { return b - a; }
    constexpr int height() const { return d - c; }

    friend constexpr bool operator==(const LatticeRect &, const LatticeRect &) = default;
    friend constexpr auto operator<=>(const LatticeRect &, const LatticeRect &) = default;
};

std::string to_string(const LatticeRect &r);

/// Half-open column interval [lo, hi) of one row.
struct RowSpan {
    int lo = 0;
    int hi = 0;

    constexpr int width() const { return hi - lo; }
    friend constexpr bool operator==(const RowSpan &, const RowSpan &) = default;
};

/// Finite row-convex set of cells: one nonempty interval per row over a
/// contiguous range of rows. Immutable once built.
class CellRegion {
public:
    CellRegion() = default;

    /// Rows first_row, first_row+1, ... take spans[0], spans[1], ...
    /// Empty spans are only accepted at either end and are trimmed.
    CellRegion(int first_row, std::vector<RowSpan> spans);

    bool empty() const { return spans_.empty(); }
    int first_row() const { return first_row_; }
    int end_row() const { return first_row_ + static_cast<int>(spans_.size()); }
    std::size_t row_count() const { return spans_.size(); }
    const std::vector<RowSpan> &spans() const { return spans_; }

    /// Span of row j, or nullopt outside the row range.
    std::optional<RowSpan> row(int j) const;

    bool contains(Cell cell) const;
    std::int64_t cell_count() const;
    std::vector<Cell> cells() const;

    /// Center / quasi-center this region was built around (canonical (0,0)).
    std::pair<int, int> origin() const { return origin_; }

    CellRegion translated(int dx, int dy) const;

    friend bool operator==(const CellRegion &lhs, const CellRegion &rhs) {
        return lhs.first_row_ == rhs.first_row_ && lhs.spans_ == rhs.spans_;
    }

    /// Builds a region from an arbitrary cell list; throws if not row-convex.
    static CellRegion from_cells(std::vector<Cell> cells);

private:
    int first_row_ = 0;
    std::vector<RowSpan> spans_;
    std::pair<int, int> origin_{0, 0};
};

enum class Family { Aztec, Biscuit, Staircase, AztecHalf, BiscuitHalf };

/// Staircase corners name where the right angle sits.
enum class Orientation { UL, UR, DL, DR };
enum class HalfSide { Top, Bottom, Left, Right };
enum class BiscuitPart { Larger, Smaller };

struct ShapeSpec {
    Family family = Family::Aztec;
    int order = 1;
    Orientation orientation = Orientation::DL;  // Staircase only
    HalfSide side = HalfSide::Top;              // AztecHalf only
    BiscuitPart part = BiscuitPart::Larger;     // BiscuitHalf only

    static ShapeSpec aztec(int n) { return {Family::Aztec, n}; }
    static ShapeSpec biscuit(int n) { return {Family::Biscuit, n}; }
    static ShapeSpec staircase(int n, Orientation o = Orientation::DL) {
        ShapeSpec s{Family::Staircase, n};
        s.orientation = o;
        return s;
    }
    static ShapeSpec aztec_half(int n, HalfSide side = HalfSide::Top) {
        ShapeSpec s{Family::AztecHalf, n};
        s.side = side;
        return s;
    }
    static ShapeSpec biscuit_half(int n, BiscuitPart part = BiscuitPart::Larger) {
        ShapeSpec s{Family::BiscuitHalf, n};
        s.part = part;
        return s;
    }

    /// Throws std::invalid_argument. Staircases accept order 0 (the empty
    /// staircase); every other family needs order >= 1.
    void validate() const;

    friend bool operator==(const ShapeSpec &lhs, const ShapeSpec &rhs);
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Shape grammar, case-insensitive:
///   aztec:<n> | biscuit:<n> | staircase:<n>[:ul|ur|dl|dr]
///   aztec-half:<n>[:top|bottom|left|right] | biscuit-half:<n>[:larger|smaller]
ShapeSpec parse_shape_spec(std::string_view text);
std::string format_shape_spec(const ShapeSpec &spec);

std::string_view to_string(Family f);
std::string_view to_string(Orientation o);
std::string_view to_string(HalfSide s);
std::string_view to_string(BiscuitPart p);

CellRegion build(const ShapeSpec &spec);

/// True iff every cell of r lies in region.
bool contains_rect(const CellRegion &region, const LatticeRect &r);

std::optional<LatticeRect> bounding_box_if_any(const CellRegion &region);
/// Throws std::invalid_argument on an empty region.
LatticeRect bounding_box(const CellRegion &region);

/// Vertical line, either the lattice line x = x0 or the half line x = x0 + 1/2.
struct Axis {
    enum class Kind { LatticeVertical, HalfVertical };
    Kind kind = Kind::LatticeVertical;
    int x0 = 0;

    static constexpr Axis lattice(int x) { return {Kind::LatticeVertical, x}; }
    static constexpr Axis half(int x) { return {Kind::HalfVertical, x}; }

    /// Position in half units.
    constexpr long long twice() const {
        return 2LL * x0 + (kind == Kind::HalfVertical ? 1 : 0);
    }
    friend constexpr bool operator==(const Axis &, const Axis &) = default;
};

std::string to_string(const Axis &axis);

struct HalfSplit {
    CellRegion left;
    CellRegion right;
    Axis axis;  // vertical symmetry axis of the whole shape
};

/// Vertical split of Aztec(n) or Biscuit(n) along x = 0 (through the center
/// or quasi-center). Aztec halves are congruent; for the biscuit the right
/// half is the larger one (n^2 vs (n-1)^2 cells).
HalfSplit split_half(const CellRegion &region, const ShapeSpec &spec);

struct PlacedStaircase {
    ShapeSpec spec;
    CellRegion region;
};

/// Cuts Aztec(n) or Biscuit(n >= 2) along both axes through the (quasi-)center
/// into four staircases, one per orientation.
std::vector<PlacedStaircase> split_staircases(const ShapeSpec &spec);

/// Symmetries of the square lattice.
enum class Dihedral { Identity, Rot90Cw, Rot180, Rot270Cw, FlipX, FlipY, Transpose, AntiTranspose };

inline constexpr Dihedral kAllDihedral[] = {
    Dihedral::Identity, Dihedral::Rot90Cw, Dihedral::Rot180,    Dihedral::Rot270Cw,
    Dihedral::FlipX,    Dihedral::FlipY,   Dihedral::Transpose, Dihedral::AntiTranspose,
};

std::string_view to_string(Dihedral g);

/// Applies g about the point (cx2/2, cy2/2); the default is the origin.
/// Throws std::invalid_argument if the image is not row-convex.
CellRegion transform(const CellRegion &region, Dihedral g, int cx2 = 0, int cy2 = 0);

/// Center of the bounding box in half units; for Aztec and Biscuit shapes
/// this is the point they are symmetric about.
std::pair<int, int> box_center_twice(const CellRegion &region);

}  // namespace latrect
