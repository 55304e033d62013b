#include "latrect/count.hpp"

#include <algorithm>
#include <limits>

namespace latrect {

std::uint64_t Count::to_u64() const {
    if (value_ > std::numeric_limits<std::uint64_t>::max())
        throw OverflowError("count does not fit in 64 bits: " + to_string());
    return static_cast<std::uint64_t>(value_);
}

Count &Count::operator+=(Count rhs) {
    if (__builtin_add_overflow(value_, rhs.value_, &value_))
        throw OverflowError("128-bit count overflow in addition");
    return *this;
}

Count &Count::operator-=(Count rhs) {
    if (rhs.value_ > value_)
        throw OverflowError("count underflow: " + to_string() + " - " + rhs.to_string());
    value_ -= rhs.value_;
    return *this;
}

Count &Count::operator*=(Count rhs) {
    if (__builtin_mul_overflow(value_, rhs.value_, &value_))
        throw OverflowError("128-bit count overflow in multiplication");
    return *this;
}

Count Count::exact_div(std::uint64_t divisor) const {
    if (divisor == 0)
        throw std::domain_error("division by zero");
    if (value_ % divisor != 0)
        throw std::logic_error(to_string() + " is not divisible by " + std::to_string(divisor));
    return from_raw(value_ / divisor);
}

std::string Count::to_string() const {
    if (value_ == 0)
        return "0";
    std::string digits;
    for (value_type v = value_; v != 0; v /= 10)
        digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Count Count::parse(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty integer literal");
    Count out;
    for (char ch : text) {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("invalid digit '" + std::string(1, ch) + "' in integer literal");
        out *= Count(10);
        out += Count(static_cast<std::uint64_t>(ch - '0'));
    }
    return out;
}

}  // namespace latrect
