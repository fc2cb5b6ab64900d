#pragma once

#include "nkirby/framing.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nkirby {

/// A generator (dotted component id) raised to +1 or -1.
struct Letter {
    std::string id;
    int sign = 1;

    Letter inverse() const { return Letter{id, -sign}; }

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Letter order used for canonical forms: by id, then + before -.
bool letter_less(const Letter& a, const Letter& b) noexcept;

using Letters = std::vector<Letter>;

Letters inverse(const Letters& w);
Letters concat(const Letters& a, const Letters& b);
Letters free_reduce(const Letters& w);
Letters rename(const Letters& w, std::string_view from, std::string_view to);

/// Result of conjugacy normalisation: `word` equals
/// free_reduce(conjugator * input * conjugator^-1).
struct TrackedWord {
    Letters word;
    Letters conjugator;
};

/// Free + cyclic reduction followed by the lexicographically minimal rotation.
TrackedWord cyclic_normalize(const Letters& w);

/// Letters sorted by id with opposite signs cancelled.
Letters abelianize(const Letters& w);

/// Attaching data of a framed component, stored in canonical form for the
/// handle index: a conjugacy class representative for k = 2 and an
/// abelianised word for k >= 3.
class Word {
public:
    Word() = default;

    const Letters& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    std::int64_t exponent_sum(std::string_view id) const noexcept;
    bool mentions(std::string_view id) const noexcept;

    /// `e1 e2^-1` style; empty string for the empty word.
    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    friend Word normalize_word(const DimSpec& dim, const Letters& raw);
    friend TrackedWord normalize_word_tracked(const DimSpec& dim, const Letters& raw);

    explicit Word(Letters letters) : letters_(std::move(letters)) {}

    Letters letters_;
};

Word normalize_word(const DimSpec& dim, const Letters& raw);

/// Like normalize_word, also reporting a conjugator g with
/// result == free_reduce(g * raw * g^-1). For k >= 3 the conjugator is empty.
TrackedWord normalize_word_tracked(const DimSpec& dim, const Letters& raw);

std::string to_string(const Letters& w);

/// Compares letter lists lexicographically under letter_less.
bool letters_less(const Letters& a, const Letters& b) noexcept;

}  // namespace nkirby
