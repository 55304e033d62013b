#include "latrect/formulas.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace latrect::formulas {

std::string_view to_string(SequenceId id) {
    switch (id) {
    case SequenceId::S: return "s";
    case SequenceId::AHalf: return "a_half";
    case SequenceId::BHalf: return "b_half";
    case SequenceId::A: return "a";
    case SequenceId::B: return "b";
    }
    return "?";
}

std::optional<SequenceId> sequence_from_string(std::string_view name) {
    for (auto id : kAllSequences)
        if (name == to_string(id))
            return id;
    return std::nullopt;
}

std::optional<std::string_view> oeis_id(SequenceId id) {
    switch (id) {
    case SequenceId::AHalf: return "A004320";
    case SequenceId::BHalf: return "A002417";
    case SequenceId::A: return "A330805";
    case SequenceId::B: return "A213840";
    case SequenceId::S: return std::nullopt;
    }
    return std::nullopt;
}

Count binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0)
        throw std::domain_error("binomial arguments must be nonnegative");
    if (k > n)
        return Count(0);
    k = std::min(k, n - k);
    // result * (n-k+i) is divisible by i at every step; dividing out the gcd
    // first keeps the intermediate no larger than the next result.
    Count result(1);
    for (std::int64_t i = 1; i <= k; ++i) {
        const auto num = static_cast<std::uint64_t>(n - k + i);
        const auto den = static_cast<std::uint64_t>(i);
        const auto g = std::gcd(static_cast<std::uint64_t>(result.raw() % den), den);
        result = result.exact_div(g) * Count(num / (den / g));
    }
    return result;
}

namespace {

void require_nonnegative(std::int64_t n) {
    if (n < 0)
        throw std::domain_error("sequence index must be >= 0, got " + std::to_string(n));
}

Count u(std::int64_t v) { return Count(static_cast<std::uint64_t>(v)); }

Count checked_agree(SequenceId id, std::int64_t n, Count first, Count second, const char *what) {
    if (first != second)
        throw std::logic_error(std::string(to_string(id)) + "(" + std::to_string(n) +
                               "): " + what + " disagree: " + first.to_string() + " vs " +
                               second.to_string());
    return first;
}

}  // namespace

Count binomial_form(SequenceId id, std::int64_t n) {
    require_nonnegative(n);
    switch (id) {
    case SequenceId::S: return binomial(n + 3, 4);
    case SequenceId::AHalf: return Count(3) * binomial(n + 3, 4) + binomial(n + 2, 4);
    case SequenceId::BHalf: return binomial(n + 3, 4) + Count(3) * binomial(n + 2, 4);
    case SequenceId::A:
        return Count(9) * binomial(n + 3, 4) + Count(6) * binomial(n + 2, 4) + binomial(n + 1, 4);
    case SequenceId::B:
        return binomial(n + 3, 4) + Count(6) * binomial(n + 2, 4) + Count(9) * binomial(n + 1, 4);
    }
    throw std::invalid_argument("unknown sequence");
}

Count polynomial_form(SequenceId id, std::int64_t n) {
    require_nonnegative(n);
    const Count m = u(n);
    switch (id) {
    case SequenceId::S: return (m * u(n + 1) * u(n + 2) * u(n + 3)).exact_div(24);
    case SequenceId::AHalf: return (m * u(n + 1) * u(n + 2) * u(n + 2)).exact_div(6);
    case SequenceId::BHalf: return (m * m * u(n + 1) * u(n + 2)).exact_div(6);
    case SequenceId::A: {
        // 4n^2 + 12n + 11 is always positive.
        const Count quad = Count(4) * m * m + Count(12) * m + Count(11);
        return (m * u(n + 1) * quad).exact_div(6);
    }
    case SequenceId::B: {
        // 4n^2 - 4n + 3 = 4n(n-1) + 3 stays nonnegative for n >= 0.
        const Count quad = n == 0 ? Count(3) : Count(4) * m * u(n - 1) + Count(3);
        return (m * u(n + 1) * quad).exact_div(6);
    }
    }
    throw std::invalid_argument("unknown sequence");
}

std::optional<Count> recurrence_form(SequenceId id, std::int64_t n) {
    require_nonnegative(n);
    if (n == 0)
        return id == SequenceId::A || id == SequenceId::B ? std::optional<Count>(Count(0)) : std::nullopt;
    switch (id) {
    case SequenceId::A: return Count(3) * a_half(n) + a_half(n - 1);
    case SequenceId::B: return b_half(n) + Count(3) * b_half(n - 1);
    default: return std::nullopt;
    }
}

Count s(std::int64_t n) {
    return checked_agree(SequenceId::S, n, binomial_form(SequenceId::S, n),
                         polynomial_form(SequenceId::S, n), "binomial and polynomial forms");
}

Count a_half(std::int64_t n) {
    const Count via_s = Count(3) * s(n) + (n > 0 ? s(n - 1) : Count(0));
    const Count binom = checked_agree(SequenceId::AHalf, n, via_s, binomial_form(SequenceId::AHalf, n),
                                      "3s(n)+s(n-1) and the binomial form");
    return checked_agree(SequenceId::AHalf, n, binom, polynomial_form(SequenceId::AHalf, n),
                         "binomial and polynomial forms");
}

Count b_half(std::int64_t n) {
    const Count via_s = s(n) + (n > 0 ? Count(3) * s(n - 1) : Count(0));
    const Count binom = checked_agree(SequenceId::BHalf, n, via_s, binomial_form(SequenceId::BHalf, n),
                                      "s(n)+3s(n-1) and the binomial form");
    return checked_agree(SequenceId::BHalf, n, binom, polynomial_form(SequenceId::BHalf, n),
                         "binomial and polynomial forms");
}

Count a(std::int64_t n) {
    const Count binom = binomial_form(SequenceId::A, n);
    checked_agree(SequenceId::A, n, binom, polynomial_form(SequenceId::A, n), "binomial and polynomial forms");
    return checked_agree(SequenceId::A, n, binom, *recurrence_form(SequenceId::A, n),
                         "closed form and half-shape recurrence");
}

Count b(std::int64_t n) {
    const Count binom = binomial_form(SequenceId::B, n);
    checked_agree(SequenceId::B, n, binom, polynomial_form(SequenceId::B, n), "binomial and polynomial forms");
    return checked_agree(SequenceId::B, n, binom, *recurrence_form(SequenceId::B, n),
                         "closed form and half-shape recurrence");
}

Count evaluate(SequenceId id, std::int64_t n) {
    switch (id) {
    case SequenceId::S: return s(n);
    case SequenceId::AHalf: return a_half(n);
    case SequenceId::BHalf: return b_half(n);
    case SequenceId::A: return a(n);
    case SequenceId::B: return b(n);
    }
    throw std::invalid_argument("unknown sequence");
}

}  // namespace latrect::formulas
