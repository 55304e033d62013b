#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "latrect/count.hpp"

namespace latrect::formulas {

/// The five rectangle-count sequences: staircase s, Aztec half, larger biscuit
/// half, Aztec diamond, square biscuit.
enum class SequenceId { S, AHalf, BHalf, A, B };

inline constexpr SequenceId kAllSequences[] = {SequenceId::S, SequenceId::AHalf, SequenceId::BHalf,
                                               SequenceId::A, SequenceId::B};

std::string_view to_string(SequenceId id);
std::optional<SequenceId> sequence_from_string(std::string_view name);

/// OEIS A-number the sequence is identified with; S has none.
std::optional<std::string_view> oeis_id(SequenceId id);

/// C(n, k), zero when k > n.
Count binomial(std::int64_t n, std::int64_t k);

// Every sequence accepts n = 0 and returns 0 there (the empty shape).
// Negative n throws std::domain_error.

/// s(n) = C(n+3, 4).
Count s(std::int64_t n);

/// 3 s(n) + s(n-1), cross-checked against n(n+1)(n+2)^2 / 6.
Count a_half(std::int64_t n);

/// s(n) + 3 s(n-1), cross-checked against n^2 (n+1)(n+2) / 6.
Count b_half(std::int64_t n);

/// 9 C(n+3,4) + 6 C(n+2,4) + C(n+1,4), cross-checked against
/// n(n+1)(4n^2+12n+11) / 6 and 3 a_half(n) + a_half(n-1).
Count a(std::int64_t n);

/// C(n+3,4) + 6 C(n+2,4) + 9 C(n+1,4), cross-checked against
/// n(n+1)(4n^2-4n+3) / 6 and b_half(n) + 3 b_half(n-1).
Count b(std::int64_t n);

Count evaluate(SequenceId id, std::int64_t n);

// The individual forms, without cross-checking.
Count binomial_form(SequenceId id, std::int64_t n);
Count polynomial_form(SequenceId id, std::int64_t n);
/// Half-shape recurrence for A and B; nullopt for the others.
std::optional<Count> recurrence_form(SequenceId id, std::int64_t n);

}  // namespace latrect::formulas
