#include "latrect/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace latrect {

std::string_view to_string(Family f) {
    switch (f) {
    case Family::Aztec: return "aztec";
    case Family::Biscuit: return "biscuit";
    case Family::Staircase: return "staircase";
    case Family::AztecHalf: return "aztec-half";
    case Family::BiscuitHalf: return "biscuit-half";
    }
    return "?";
}

std::string_view to_string(Orientation o) {
    switch (o) {
    case Orientation::UL: return "ul";
    case Orientation::UR: return "ur";
    case Orientation::DL: return "dl";
    case Orientation::DR: return "dr";
    }
    return "?";
}

std::string_view to_string(HalfSide s) {
    switch (s) {
    case HalfSide::Top: return "top";
    case HalfSide::Bottom: return "bottom";
    case HalfSide::Left: return "left";
    case HalfSide::Right: return "right";
    }
    return "?";
}

std::string_view to_string(BiscuitPart p) {
    return p == BiscuitPart::Larger ? "larger" : "smaller";
}

namespace {

struct Token {
    std::string text;  // lower-cased
    std::size_t pos;
};

std::vector<Token> split_fields(std::string_view text) {
    std::vector<Token> out;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= text.size(); ++k) {
        if (k == text.size() || text[k] == ':') {
            std::string field(text.substr(start, k - start));
            std::transform(field.begin(), field.end(), field.begin(),
                           [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
            out.push_back({std::move(field), start});
            start = k + 1;
        }
    }
    return out;
}

template <typename Enum, std::size_t N>
Enum parse_variant(const Token &tok, const Enum (&choices)[N], std::string_view what) {
    for (Enum e : choices)
        if (tok.text == to_string(e))
            return e;
    std::string allowed;
    for (Enum e : choices) {
        if (!allowed.empty())
            allowed += "|";
        allowed += to_string(e);
    }
    throw ParseError("invalid " + std::string(what) + " '" + tok.text + "', expected one of " + allowed,
                     tok.pos);
}

int parse_order(const Token &tok) {
    const auto &s = tok.text;
    if (s.empty())
        throw ParseError("missing order", tok.pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError("order '" + s + "' is too large", tok.pos);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.front() == '+')
        throw ParseError("order '" + s + "' is not an integer", tok.pos);
    if (value < 1)
        throw ParseError("order must be >= 1, got " + s, tok.pos);
    return value;
}

}  // namespace

ShapeSpec parse_shape_spec(std::string_view text) {
    const auto fields = split_fields(text);
    const auto &head = fields.front();
    static constexpr Family kFamilies[] = {Family::Aztec, Family::Biscuit, Family::Staircase,
                                           Family::AztecHalf, Family::BiscuitHalf};
    if (head.text.empty())
        throw ParseError("missing shape family", 0);
    const Family family = parse_variant(head, kFamilies, "shape family");
    if (fields.size() < 2)
        throw ParseError("missing ':<order>' after '" + head.text + "'", text.size());

    ShapeSpec spec;
    spec.family = family;
    spec.order = parse_order(fields[1]);

    const bool has_variant = family == Family::Staircase || family == Family::AztecHalf ||
                             family == Family::BiscuitHalf;
    const std::size_t max_fields = has_variant ? 3 : 2;
    if (fields.size() > max_fields)
        throw ParseError("unexpected field '" + fields[max_fields].text + "'", fields[max_fields].pos);

    if (fields.size() == 3) {
        const auto &tok = fields[2];
        switch (family) {
        case Family::Staircase: {
            static constexpr Orientation kChoices[] = {Orientation::UL, Orientation::UR, Orientation::DL,
                                                       Orientation::DR};
            spec.orientation = parse_variant(tok, kChoices, "staircase orientation");
            break;
        }
        case Family::AztecHalf: {
            static constexpr HalfSide kChoices[] = {HalfSide::Top, HalfSide::Bottom, HalfSide::Left,
                                                    HalfSide::Right};
            spec.side = parse_variant(tok, kChoices, "Aztec half side");
            break;
        }
        case Family::BiscuitHalf: {
            static constexpr BiscuitPart kChoices[] = {BiscuitPart::Larger, BiscuitPart::Smaller};
            spec.part = parse_variant(tok, kChoices, "biscuit half part");
            break;
        }
        default: break;
        }
    }
    return spec;
}

std::string format_shape_spec(const ShapeSpec &spec) {
    std::string out = std::string(to_string(spec.family)) + ":" + std::to_string(spec.order);
    switch (spec.family) {
    case Family::Staircase: out += ":" + std::string(to_string(spec.orientation)); break;
    case Family::AztecHalf: out += ":" + std::string(to_string(spec.side)); break;
    case Family::BiscuitHalf: out += ":" + std::string(to_string(spec.part)); break;
    default: break;
    }
    return out;
}

}  // namespace latrect
