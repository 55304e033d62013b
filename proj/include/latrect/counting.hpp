#pragma once

#include <array>
#include <functional>
#include <string_view>
#include <vector>

#include "latrect/count.hpp"
#include "latrect/geometry.hpp"

namespace latrect {

/// Position of a rectangle relative to a vertical axis: the part left of the
/// axis is larger (L), smaller (R) or equal (C); NonCrossing when the axis
/// misses the open interior.
enum class CrossingClass { L, R, C, NonCrossing };

inline constexpr CrossingClass kAllClasses[] = {CrossingClass::L, CrossingClass::R, CrossingClass::C,
                                                CrossingClass::NonCrossing};

std::string_view to_string(CrossingClass k);

struct CountBreakdown {
    Count total;
    std::array<Count, 4> by_class{};  // indexed by CrossingClass

    Count &operator[](CrossingClass k) { return by_class[static_cast<std::size_t>(k)]; }
    Count operator[](CrossingClass k) const { return by_class[static_cast<std::size_t>(k)]; }
    Count crossing() const {
        return (*this)[CrossingClass::L] + (*this)[CrossingClass::R] + (*this)[CrossingClass::C];
    }
};

/// Calls visit(r) for every lattice rectangle inside region, by exhaustive
/// enumeration over the bounding box with a prefix-sum inclusion test.
void for_each_rect(const CellRegion &region, const std::function<void(const LatticeRect &)> &visit);

std::vector<LatticeRect> enumerate_rects(const CellRegion &region);

/// Oracle count, O(W^2 H^2) over the bounding box.
Count count_naive(const CellRegion &region);

/// Histogram / monotonic-stack count, O(#cells).
Count count_fast(const CellRegion &region);

CrossingClass classify(const LatticeRect &r, const Axis &axis);

CountBreakdown count_breakdown(const CellRegion &region, const Axis &axis);

enum class Method { Naive, Fast, Formula };

std::string_view to_string(Method m);

Count count_family(const ShapeSpec &spec, Method method);

}  // namespace latrect
