#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latrect {

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Exact nonnegative 128-bit integer. Every arithmetic operation is checked
/// and throws OverflowError instead of wrapping.
class Count {
public:
    using value_type = unsigned __int128;

    constexpr Count() = default;
    constexpr Count(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent
    static constexpr Count from_raw(value_type v) {
        Count c;
        c.value_ = v;
        return c;
    }

    constexpr value_type raw() const { return value_; }

    /// Narrowing read; throws if the value does not fit.
    std::uint64_t to_u64() const;

    friend constexpr bool operator==(Count, Count) = default;
    friend constexpr std::strong_ordering operator<=>(Count lhs, Count rhs) {
        return lhs.value_ <=> rhs.value_;
    }

    Count &operator+=(Count rhs);
    Count &operator-=(Count rhs);
    Count &operator*=(Count rhs);

    friend Count operator+(Count lhs, Count rhs) { return lhs += rhs; }
    friend Count operator-(Count lhs, Count rhs) { return lhs -= rhs; }
    friend Count operator*(Count lhs, Count rhs) { return lhs *= rhs; }

    /// Division that must be exact; a nonzero remainder is a logic error.
    Count exact_div(std::uint64_t divisor) const;

    std::string to_string() const;

    /// Parses a plain decimal literal (digits only).
    static Count parse(std::string_view text);

    friend std::ostream &operator<<(std::ostream &os, Count c) { return os << c.to_string(); }

private:
    value_type value_ = 0;
};

}  // namespace latrect
