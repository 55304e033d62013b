#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latrect/count.hpp"
#include "latrect/geometry.hpp"

// Rectangle bijections behind the staircase and half-shape counts.
//
// Fixed frames: the staircase of order n is Staircase(n, DL) (rows 0..n-1,
// row j = [0, n-j)); the Aztec half is AztecHalf(n, top) with its axis at
// x = 0; the larger biscuit half is BiscuitHalf(n, larger) with its axis at
// x = 1/2.
namespace latrect::bijections {

struct Quadruple {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    friend constexpr bool operator==(const Quadruple &, const Quadruple &) = default;
    friend constexpr auto operator<=>(const Quadruple &, const Quadruple &) = default;
};

std::string to_string(const Quadruple &q);

/// Rectangle of the order-n staircase -> 0 <= a < b < c < d <= n+2.
///
/// The staircase is first reflected into the frame where it sits under the
/// line y = x + 1 with its long row on top: cell (i, j) -> (i, n+1-j). There
/// a rectangle [a,b]x[c,d] lies inside iff 0 <= a < b <= n, 1 < c < d <= n+2
/// and b + 1 <= c, so its corner coordinates already form the quadruple.
Quadruple staircase_to_quadruple(const LatticeRect &r, int n);
LatticeRect quadruple_to_staircase(const Quadruple &q, int n);

/// Type-L rectangle [a,b]x[c,d] of the Aztec half (a < 0 < b, -a > b) ->
/// [b, -a]x[c,d], the reflected left part minus the right part. The image
/// lies in the order-(n-1) staircase Staircase(n-1, DL) shifted to x >= 1.
LatticeRect type_l_map(const LatticeRect &r, int n);
/// [u,v]x[c,d] in the shifted staircase -> [-v, u]x[c,d].
LatticeRect type_l_unmap(const LatticeRect &r, int n);

/// Type-R rectangles: mirror about the axis, then type_l_map.
LatticeRect type_r_map(const LatticeRect &r, int n);
LatticeRect type_r_unmap(const LatticeRect &r, int n);

/// Type-C rectangle [-b,b]x[c,d] -> its right part [0,b]x[c,d].
LatticeRect type_c_anchor(const LatticeRect &r);
LatticeRect type_c_unanchor(const LatticeRect &r);

/// Rectangle of the larger biscuit half crossing x = 1/2 -> [a-1, b]x[c,d],
/// a rectangle of the Aztec half crossing x = 0 (a column inserted at [-1,0]).
LatticeRect biscuit_expand_map(const LatticeRect &r, int n);
LatticeRect biscuit_shrink_map(const LatticeRect &r, int n);

struct BijectionReport {
    std::string name;
    int n = 0;
    Count domain_size;
    Count image_size;
    bool is_injective = false;
    bool is_surjective = false;
    bool roundtrip_ok = false;
    std::optional<std::string> counterexample;

    bool verified() const {
        return is_injective && is_surjective && roundtrip_ok && domain_size == image_size;
    }
};

inline constexpr std::string_view kMapNames[] = {"quadruple", "type_l", "type_r", "type_c",
                                                 "biscuit_expand"};
inline constexpr int kMaxExhaustiveOrder = 20;

/// Exhaustively checks the named map on its domain and codomain for order n.
/// Throws std::invalid_argument for an unknown name or n outside 1..20.
BijectionReport verify_bijection(std::string_view name, int n);

}  // namespace latrect::bijections
