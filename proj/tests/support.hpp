#pragma once

// Independent oracles and random generators shared by the unit and
// acceptance tests. Nothing here calls into the library's algorithms.

#include "nkirby/diagram.hpp"
#include "nkirby/int_matrix.hpp"
#include "nkirby/moves.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using nkirby::Diagram;
using nkirby::DimSpec;
using nkirby::IntMatrix;
using nkirby::Letter;
using nkirby::Letters;

/// "0", "Z/2" or "Z": pi_{k-1}(O(n-k)) for n >= 2k+1, written out by hand.
inline std::string bott_oracle(int k) {
    switch (k % 8) {
        case 0: case 4: return "Z";
        case 1: case 2: return "Z/2";
        default: return "0";
    }
}

inline std::int64_t gcd_oracle(const std::vector<std::int64_t>& xs) {
    std::int64_t g = 0;
    for (auto x : xs) g = std::gcd(g, x);
    return g;
}

/// Fraction-free Gaussian elimination.
inline std::int64_t bareiss_det(IntMatrix m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    __int128 sign = 1;
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
    __int128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

/// |Z^3 / im(M)| for non-singular 3x3 M: since |det| Z^3 lies in im(M), the
/// quotient is (Z/D)^3 modulo the subgroup spanned by the columns, which is
/// enumerated by closure.
inline std::int64_t cokernel_order_bruteforce(const IntMatrix& m) {
    const std::int64_t d = std::llabs(bareiss_det(m));
    const auto mod = [d](std::int64_t x) { return ((x % d) + d) % d; };
    const auto index = [d](std::int64_t a, std::int64_t b, std::int64_t c) {
        return static_cast<std::size_t>((a * d + b) * d + c);
    };
    std::vector<bool> seen(static_cast<std::size_t>(d * d * d), false);
    std::vector<std::array<std::int64_t, 3>> stack{{0, 0, 0}};
    seen[0] = true;
    std::int64_t count = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (std::size_t c = 0; c < 3; ++c) {
            const std::array<std::int64_t, 3> w{mod(v[0] + m(0, c)), mod(v[1] + m(1, c)), mod(v[2] + m(2, c))};
            const std::size_t at = index(w[0], w[1], w[2]);
            if (!seen[at]) {
                seen[at] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return d * d * d / count;
}

struct RandomDiagramConfig {
    int max_dotted = 3;
    int max_framed = 4;
    int max_word = 6;
    int max_framing = 3;
};

inline int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Diagram random_diagram(std::mt19937_64& rng, int k, const RandomDiagramConfig& cfg = {}) {
    Diagram d{DimSpec(2 * k + 1, k)};
    const int a = pick(rng, 0, cfg.max_dotted);
    const int m = pick(rng, 0, cfg.max_framed);
    for (int i = 1; i <= a; ++i) d.insert_dotted("e" + std::to_string(i));
    for (int j = 1; j <= m; ++j) {
        Letters w;
        if (a > 0) {
            const int len = pick(rng, 0, cfg.max_word);
            for (int l = 0; l < len; ++l) w.push_back(Letter{"e" + std::to_string(pick(rng, 1, a)), pick(rng, 0, 1) ? 1 : -1});
        }
        d.insert_framed("f" + std::to_string(j), w, nkirby::normalize(d.group(), pick(rng, -cfg.max_framing, cfg.max_framing)));
    }
    return d;
}

inline std::size_t total_length(const Diagram& d) {
    std::size_t n = 0;
    for (const auto& f : d.framed()) n += f.word.size();
    return n;
}

/// Picks a random applicable move; word growth is capped so long
/// certificates stay cheap.
inline nkirby::Move random_move(std::mt19937_64& rng, const Diagram& d, int& fresh) {
    using namespace nkirby;
    const bool small = total_length(d) < 60;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const int kind = pick(rng, 0, 4);
        if (kind == 0 && d.framed().size() >= 2) {
            const auto& fs = d.framed();
            const std::size_t i = static_cast<std::size_t>(pick(rng, 0, static_cast<int>(fs.size()) - 1));
            std::size_t j = static_cast<std::size_t>(pick(rng, 0, static_cast<int>(fs.size()) - 2));
            if (j >= i) ++j;
            if (!small && !fs[j].word.empty()) continue;
            Letters conj;
            if (d.dim().k() == 2 && !d.dotted().empty()) {
                const int len = pick(rng, 0, 2);
                for (int l = 0; l < len; ++l) {
                    const auto& e = d.dotted()[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(d.dotted().size()) - 1))];
                    conj.push_back(Letter{e.id, pick(rng, 0, 1) ? 1 : -1});
                }
            }
            return SlideFramed{fs[i].id, fs[j].id, pick(rng, 0, 1) ? Sign::Plus : Sign::Minus, conj};
        }
        if (kind == 1 && d.dotted().size() >= 2 && small) {
            const auto& es = d.dotted();
            const std::size_t a = static_cast<std::size_t>(pick(rng, 0, static_cast<int>(es.size()) - 1));
            std::size_t b = static_cast<std::size_t>(pick(rng, 0, static_cast<int>(es.size()) - 2));
            if (b >= a) ++b;
            return SlideDotted{es[a].id, es[b].id, pick(rng, 0, 1) ? Sign::Plus : Sign::Minus};
        }
        if (kind == 2 && d.dotted().size() < 5) {
            ++fresh;
            return CreatePair{"c" + std::to_string(fresh), "g" + std::to_string(fresh)};
        }
        if (kind == 3) {
            for (const auto& f : d.framed()) {
                if (f.word.size() != 1) continue;
                const std::string e = f.word.letters().front().id;
                bool alone = true;
                for (const auto& g : d.framed())
                    if (g.id != f.id && g.word.mentions(e)) alone = false;
                if (alone) return CancelPair{e, f.id};
            }
        }
        if (kind == 4 && d.framed().size() >= 2) continue;
    }
    // nothing cheap applies; a create is always legal
    ++fresh;
    return CreatePair{"c" + std::to_string(fresh), "g" + std::to_string(fresh)};
}

}  // namespace testsupport
