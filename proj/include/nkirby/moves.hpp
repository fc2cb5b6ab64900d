#pragma once

#include "nkirby/diagram.hpp"

#include <string>
#include <variant>
#include <vector>

namespace nkirby {

enum class Sign : int { Plus = 1, Minus = -1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign flip(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr Sign sign_of(std::int64_t v) noexcept { return v < 0 ? Sign::Minus : Sign::Plus; }

/// Slide framed component `i` over a parallel copy of `j`, oriented by `sign`,
/// along a band whose homotopy class is `conjugator` (k = 2 only).
struct SlideFramed {
    std::string i;
    std::string j;
    Sign sign = Sign::Plus;
    Letters conjugator;

    friend bool operator==(const SlideFramed&, const SlideFramed&) = default;
};

/// Slide dotted component `a` over `b`: the substitution b -> b a^sign
/// (hence b^-1 -> a^-sign b^-1) in every framed word.
struct SlideDotted {
    std::string a;
    std::string b;
    Sign sign = Sign::Plus;

    friend bool operator==(const SlideDotted&, const SlideDotted&) = default;
};

struct CancelPair {
    std::string e;
    std::string f;

    friend bool operator==(const CancelPair&, const CancelPair&) = default;
};

struct CreatePair {
    std::string e;
    std::string f;

    friend bool operator==(const CreatePair&, const CreatePair&) = default;
};

using Move = std::variant<SlideFramed, SlideDotted, CancelPair, CreatePair>;
using Certificate = std::vector<Move>;

Diagram slide_framed(const Diagram& d, const std::string& i, const std::string& j, Sign sign,
                     const Letters& conjugator = {});
Diagram slide_dotted(const Diagram& d, const std::string& a, const std::string& b, Sign sign);
Diagram cancel_pair(const Diagram& d, const std::string& e, const std::string& f);
Diagram create_pair(const Diagram& d, const std::string& e, const std::string& f);

Diagram apply(const Diagram& d, const Move& move);

/// Left-to-right replay. On failure throws ReplayFailure carrying the index
/// of the offending move; the input diagram is never partially modified.
Diagram apply(const Diagram& d, const Certificate& cert);

std::string to_string(const Move& move);

}  // namespace nkirby
