#include "nkirby/word.hpp"

#include <algorithm>
#include <map>

namespace nkirby {

bool letter_less(const Letter& a, const Letter& b) noexcept {
    if (a.id != b.id) return a.id < b.id;
    // + sorts before -
    return a.sign > b.sign;
}

bool letters_less(const Letters& a, const Letters& b) noexcept {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
}

Letters inverse(const Letters& w) {
    Letters out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

Letters concat(const Letters& a, const Letters& b) {
    Letters out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Letters free_reduce(const Letters& w) {
    Letters out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        if (!out.empty() && out.back().id == l.id && out.back().sign == -l.sign) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

Letters rename(const Letters& w, std::string_view from, std::string_view to) {
    Letters out = w;
    for (Letter& l : out) {
        if (l.id == from) l.id = std::string(to);
    }
    return out;
}

TrackedWord cyclic_normalize(const Letters& w) {
    Letters cur = free_reduce(w);
    Letters g;

    // strip a ... a^-1 from both ends: cur = a u a^-1 -> u = a^-1 cur a
    std::size_t lo = 0;
    std::size_t hi = cur.size();
    while (hi - lo >= 2 && cur[lo].id == cur[hi - 1].id && cur[lo].sign == -cur[hi - 1].sign) {
        g.insert(g.begin(), cur[lo].inverse());
        ++lo;
        --hi;
    }
    cur = Letters(cur.begin() + static_cast<std::ptrdiff_t>(lo), cur.begin() + static_cast<std::ptrdiff_t>(hi));

    const std::size_t len = cur.size();
    std::size_t best = 0;
    auto rotation_less = [&](std::size_t r, std::size_t s) {
        for (std::size_t i = 0; i < len; ++i) {
            const Letter& a = cur[(r + i) % len];
            const Letter& b = cur[(s + i) % len];
            if (letter_less(a, b)) return true;
            if (letter_less(b, a)) return false;
        }
        return false;
    };
    for (std::size_t r = 1; r < len; ++r) {
        if (rotation_less(r, best)) best = r;
    }

    if (best != 0) {
        // cur = x y with |x| = best; y x = x^-1 cur x
        Letters x(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(best));
        Letters rotated(cur.begin() + static_cast<std::ptrdiff_t>(best), cur.end());
        rotated.insert(rotated.end(), x.begin(), x.end());
        g = concat(inverse(x), g);
        cur = std::move(rotated);
    }
    return TrackedWord{std::move(cur), free_reduce(g)};
}

Letters abelianize(const Letters& w) {
    std::map<std::string, std::int64_t> exponents;
    for (const Letter& l : w) exponents[l.id] += l.sign;
    Letters out;
    for (const auto& [id, e] : exponents) {
        const int sign = e > 0 ? 1 : -1;
        for (std::int64_t i = 0; i < (e > 0 ? e : -e); ++i) out.push_back(Letter{id, sign});
    }
    return out;
}

std::int64_t Word::exponent_sum(std::string_view id) const noexcept {
    std::int64_t sum = 0;
    for (const Letter& l : letters_) {
        if (l.id == id) sum += l.sign;
    }
    return sum;
}

bool Word::mentions(std::string_view id) const noexcept {
    return std::any_of(letters_.begin(), letters_.end(), [&](const Letter& l) { return l.id == id; });
}

std::string to_string(const Letters& w) {
    std::string out;
    for (const Letter& l : w) {
        if (!out.empty()) out += ' ';
        out += l.id;
        if (l.sign < 0) out += "^-1";
    }
    return out;
}

std::string Word::to_string() const { return nkirby::to_string(letters_); }

TrackedWord normalize_word_tracked(const DimSpec& dim, const Letters& raw) {
    if (dim.k() >= 3) return TrackedWord{abelianize(raw), {}};
    return cyclic_normalize(raw);
}

Word normalize_word(const DimSpec& dim, const Letters& raw) {
    return Word(normalize_word_tracked(dim, raw).word);
}

}  // namespace nkirby
