#include "latrect/bijections.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "latrect/counting.hpp"

namespace latrect::bijections {

std::string to_string(const Quadruple &q) {
    return "(" + std::to_string(q.a) + "," + std::to_string(q.b) + "," + std::to_string(q.c) + "," +
           std::to_string(q.d) + ")";
}

namespace {

[[noreturn]] void reject(const std::string &what, const LatticeRect &r) {
    throw std::invalid_argument(what + ": " + latrect::to_string(r));
}

bool in_staircase(const LatticeRect &r, int n) {
    return r.valid() && r.a >= 0 && r.c >= 0 && r.b <= n - r.d + 1;
}

bool in_aztec_half(const LatticeRect &r, int n) {
    return r.valid() && r.c >= 0 && r.d <= n && r.a >= -(n - r.d + 1) && r.b <= n - r.d + 1;
}

bool in_biscuit_half(const LatticeRect &r, int n) {
    return r.valid() && r.c >= 0 && r.d <= n && r.a >= r.d - n && r.b <= n - r.d + 1;
}

LatticeRect mirror(const LatticeRect &r) { return {-r.b, -r.a, r.c, r.d}; }

}  // namespace

Quadruple staircase_to_quadruple(const LatticeRect &r, int n) {
    if (!in_staircase(r, n))
        reject("rectangle is not inside the order-" + std::to_string(n) + " staircase", r);
    return {r.a, r.b, n + 2 - r.d, n + 2 - r.c};
}

LatticeRect quadruple_to_staircase(const Quadruple &q, int n) {
    if (!(0 <= q.a && q.a < q.b && q.b < q.c && q.c < q.d && q.d <= n + 2))
        throw std::invalid_argument("quadruple " + to_string(q) + " violates 0 <= a < b < c < d <= " +
                                    std::to_string(n + 2));
    return {q.a, q.b, n + 2 - q.d, n + 2 - q.c};
}

LatticeRect type_l_map(const LatticeRect &r, int n) {
    if (!in_aztec_half(r, n))
        reject("rectangle is not inside the order-" + std::to_string(n) + " Aztec half", r);
    if (!(r.a < 0 && 0 < r.b && -r.a > r.b))
        reject("rectangle is not of type L", r);
    return {r.b, -r.a, r.c, r.d};
}

LatticeRect type_l_unmap(const LatticeRect &r, int n) {
    if (!in_staircase({r.a - 1, r.b - 1, r.c, r.d}, n - 1))
        reject("rectangle is not inside the shifted order-" + std::to_string(n - 1) + " staircase", r);
    return {-r.b, r.a, r.c, r.d};
}

LatticeRect type_r_map(const LatticeRect &r, int n) {
    if (!(r.a < 0 && 0 < r.b && -r.a < r.b))
        reject("rectangle is not of type R", r);
    return type_l_map(mirror(r), n);
}

LatticeRect type_r_unmap(const LatticeRect &r, int n) { return mirror(type_l_unmap(r, n)); }

LatticeRect type_c_anchor(const LatticeRect &r) {
    if (!(r.valid() && r.b > 0 && -r.a == r.b))
        reject("rectangle is not of type C", r);
    return {0, r.b, r.c, r.d};
}

LatticeRect type_c_unanchor(const LatticeRect &r) {
    if (!(r.valid() && r.a == 0))
        reject("rectangle does not have its left side on the axis", r);
    return {-r.b, r.b, r.c, r.d};
}

LatticeRect biscuit_expand_map(const LatticeRect &r, int n) {
    if (!in_biscuit_half(r, n))
        reject("rectangle is not inside the order-" + std::to_string(n) + " biscuit half", r);
    if (!(r.a <= 0 && r.b >= 1))
        reject("rectangle does not cross x = 1/2", r);
    return {r.a - 1, r.b, r.c, r.d};
}

LatticeRect biscuit_shrink_map(const LatticeRect &r, int n) {
    if (!in_aztec_half(r, n))
        reject("rectangle is not inside the order-" + std::to_string(n) + " Aztec half", r);
    if (!(r.a < 0 && r.b > 0))
        reject("rectangle does not cross x = 0", r);
    return {r.a + 1, r.b, r.c, r.d};
}

namespace {

template <typename X, typename Y>
BijectionReport run_exhaustive(std::string_view name, int n, const std::vector<X> &domain,
                               std::vector<Y> codomain, const std::function<Y(const X &)> &forward,
                               const std::function<X(const Y &)> &inverse) {
    BijectionReport report;
    report.name = std::string(name);
    report.n = n;
    report.domain_size = Count(domain.size());
    report.image_size = Count(codomain.size());
    auto note = [&](std::string text) {
        if (!report.counterexample)
            report.counterexample = std::move(text);
    };

    bool well_defined = true;
    bool roundtrip = true;
    std::vector<Y> images;
    images.reserve(domain.size());
    for (const auto &x : domain) {
        try {
            const Y y = forward(x);
            images.push_back(y);
            if (inverse(y) != x) {
                roundtrip = false;
                note("inverse(forward(" + to_string(x) + ")) != " + to_string(x));
            }
        } catch (const std::invalid_argument &e) {
            well_defined = false;
            roundtrip = false;
            note(to_string(x) + ": " + e.what());
        }
    }
    for (const auto &y : codomain) {
        try {
            if (forward(inverse(y)) != y) {
                roundtrip = false;
                note("forward(inverse(" + to_string(y) + ")) != " + to_string(y));
            }
        } catch (const std::invalid_argument &e) {
            roundtrip = false;
            note(to_string(y) + ": " + e.what());
        }
    }

    std::sort(images.begin(), images.end());
    const auto dup = std::adjacent_find(images.begin(), images.end());
    report.is_injective = well_defined && dup == images.end();
    if (dup != images.end())
        note("two rectangles map to " + to_string(*dup));

    std::sort(codomain.begin(), codomain.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    report.is_surjective = well_defined && images == codomain;
    if (!report.is_surjective && well_defined) {
        std::vector<Y> missed;
        std::set_difference(codomain.begin(), codomain.end(), images.begin(), images.end(),
                            std::back_inserter(missed));
        if (!missed.empty())
            note(to_string(missed.front()) + " is not hit");
        else
            note("image leaves the codomain");
    }
    report.roundtrip_ok = roundtrip;
    return report;
}

std::vector<LatticeRect> rects_where(const CellRegion &region,
                                     const std::function<bool(const LatticeRect &)> &keep) {
    std::vector<LatticeRect> out;
    for_each_rect(region, [&](const LatticeRect &r) {
        if (keep(r))
            out.push_back(r);
    });
    return out;
}

std::vector<LatticeRect> rects_of_class(const CellRegion &region, const Axis &axis, CrossingClass k) {
    return rects_where(region, [&](const LatticeRect &r) { return classify(r, axis) == k; });
}

std::vector<LatticeRect> crossing_rects(const CellRegion &region, const Axis &axis) {
    return rects_where(region,
                       [&](const LatticeRect &r) { return classify(r, axis) != CrossingClass::NonCrossing; });
}

auto all_rects = [](const LatticeRect &) { return true; };

}  // namespace

BijectionReport verify_bijection(std::string_view name, int n) {
    if (n < 1 || n > kMaxExhaustiveOrder)
        throw std::invalid_argument("exhaustive verification needs 1 <= n <= " +
                                    std::to_string(kMaxExhaustiveOrder) + ", got " + std::to_string(n));
    using Map = std::function<LatticeRect(const LatticeRect &)>;
    const Axis delta_axis = Axis::lattice(0);
    const auto aztec_half = build(ShapeSpec::aztec_half(n));
    const auto shifted_staircase = build(ShapeSpec::staircase(n - 1)).translated(1, 0);

    if (name == "quadruple") {
        std::vector<Quadruple> quads;
        for (int a = 0; a <= n + 2; ++a)
            for (int b = a + 1; b <= n + 2; ++b)
                for (int c = b + 1; c <= n + 2; ++c)
                    for (int d = c + 1; d <= n + 2; ++d)
                        quads.push_back({a, b, c, d});
        return run_exhaustive<LatticeRect, Quadruple>(
            name, n, enumerate_rects(build(ShapeSpec::staircase(n))), std::move(quads),
            [n](const LatticeRect &r) { return staircase_to_quadruple(r, n); },
            [n](const Quadruple &q) { return quadruple_to_staircase(q, n); });
    }
    if (name == "type_l") {
        return run_exhaustive<LatticeRect, LatticeRect>(
            name, n, rects_of_class(aztec_half, delta_axis, CrossingClass::L),
            rects_where(shifted_staircase, all_rects), Map([n](const LatticeRect &r) { return type_l_map(r, n); }),
            Map([n](const LatticeRect &r) { return type_l_unmap(r, n); }));
    }
    if (name == "type_r") {
        return run_exhaustive<LatticeRect, LatticeRect>(
            name, n, rects_of_class(aztec_half, delta_axis, CrossingClass::R),
            rects_where(shifted_staircase, all_rects), Map([n](const LatticeRect &r) { return type_r_map(r, n); }),
            Map([n](const LatticeRect &r) { return type_r_unmap(r, n); }));
    }
    if (name == "type_c") {
        return run_exhaustive<LatticeRect, LatticeRect>(
            name, n, rects_of_class(aztec_half, delta_axis, CrossingClass::C),
            rects_where(build(ShapeSpec::staircase(n)), [](const LatticeRect &r) { return r.a == 0; }),
            Map(type_c_anchor), Map(type_c_unanchor));
    }
    if (name == "biscuit_expand") {
        return run_exhaustive<LatticeRect, LatticeRect>(
            name, n, crossing_rects(build(ShapeSpec::biscuit_half(n)), Axis::half(0)),
            crossing_rects(aztec_half, delta_axis),
            Map([n](const LatticeRect &r) { return biscuit_expand_map(r, n); }),
            Map([n](const LatticeRect &r) { return biscuit_shrink_map(r, n); }));
    }
    throw std::invalid_argument("unknown bijection '" + std::string(name) + "'");
}

}  // namespace latrect::bijections
