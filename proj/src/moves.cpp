#include "nkirby/moves.hpp"

#include "nkirby/error.hpp"

#include <type_traits>

namespace nkirby {

namespace {

void require_calculus(const Diagram& d) {
    if (d.dim().is_source()) {
        throw Error(ErrorCode::InvalidDim, "moves are defined for n >= 2k+1; induce the source diagram first");
    }
}

const FramedComponent& framed_or_throw(const Diagram& d, const std::string& id) {
    const FramedComponent* f = d.find_framed(id);
    if (!f) throw Error(ErrorCode::UnknownComponent, "no framed component '" + id + "'");
    return *f;
}

void dotted_or_throw(const Diagram& d, const std::string& id) {
    if (!d.has_dotted(id)) throw Error(ErrorCode::UnknownComponent, "no dotted component '" + id + "'");
}

Letters power(const Letters& w, Sign sign) { return sign == Sign::Plus ? w : inverse(w); }

}  // namespace

Diagram slide_framed(const Diagram& d, const std::string& i, const std::string& j, Sign sign,
                     const Letters& conjugator) {
    require_calculus(d);
    const FramedComponent& fi = framed_or_throw(d, i);
    const FramedComponent& fj = framed_or_throw(d, j);
    if (i == j) throw Error(ErrorCode::SelfSlide, "cannot slide '" + i + "' over itself");
    if (!conjugator.empty() && d.dim().k() != 2) {
        throw Error(ErrorCode::InvalidMove, "band conjugators only exist for k = 2");
    }
    d.check_generators(conjugator);

    Letters w = fi.word.letters();
    w = concat(w, conjugator);
    w = concat(w, power(fj.word.letters(), sign));
    w = concat(w, inverse(conjugator));
    const Framing t = add(fi.framing, sign == Sign::Plus ? fj.framing : neg(fj.framing));

    Diagram out = d;
    out.set_framed(i, w, t);
    return out;
}

Diagram slide_dotted(const Diagram& d, const std::string& a, const std::string& b, Sign sign) {
    require_calculus(d);
    dotted_or_throw(d, a);
    dotted_or_throw(d, b);
    if (a == b) throw Error(ErrorCode::SelfSlide, "cannot slide '" + a + "' over itself");

    Diagram out = d;
    out.rewrite_words([&](const Letters& w) {
        Letters r;
        r.reserve(w.size() * 2);
        // b -> b a^sign, so b^-1 -> a^-sign b^-1
        for (const Letter& l : w) {
            if (l.id != b) {
                r.push_back(l);
            } else if (l.sign > 0) {
                r.push_back(l);
                r.push_back(Letter{a, to_int(sign)});
            } else {
                r.push_back(Letter{a, -to_int(sign)});
                r.push_back(l);
            }
        }
        return r;
    });
    return out;
}

Diagram cancel_pair(const Diagram& d, const std::string& e, const std::string& f) {
    require_calculus(d);
    dotted_or_throw(d, e);
    const FramedComponent& ff = framed_or_throw(d, f);
    const Letters& w = ff.word.letters();
    if (w.size() != 1 || w.front().id != e) {
        throw Error(ErrorCode::NotCancelling,
                    "'" + f + "' must pass exactly once through '" + e + "' (word is '" + ff.word.to_string() + "')");
    }
    for (const auto& other : d.framed()) {
        if (other.id != f && other.word.mentions(e)) {
            throw Error(ErrorCode::NotCancelling, "'" + other.id + "' also passes through '" + e + "'");
        }
    }
    Diagram out = d;
    out.remove_framed(f);
    out.remove_dotted(e);
    return out;
}

Diagram create_pair(const Diagram& d, const std::string& e, const std::string& f) {
    require_calculus(d);
    if (e == f) throw Error(ErrorCode::DuplicateId, "pair ids must differ");
    Diagram out = d;
    out.insert_dotted(e);
    out.insert_framed(f, Letters{Letter{e, 1}}, normalize(out.group(), 0));
    return out;
}

Diagram apply(const Diagram& d, const Move& move) {
    return std::visit(
        [&](const auto& m) -> Diagram {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, SlideFramed>) return slide_framed(d, m.i, m.j, m.sign, m.conjugator);
            if constexpr (std::is_same_v<T, SlideDotted>) return slide_dotted(d, m.a, m.b, m.sign);
            if constexpr (std::is_same_v<T, CancelPair>) return cancel_pair(d, m.e, m.f);
            if constexpr (std::is_same_v<T, CreatePair>) return create_pair(d, m.e, m.f);
        },
        move);
}

Diagram apply(const Diagram& d, const Certificate& cert) {
    Diagram cur = d;
    for (std::size_t idx = 0; idx < cert.size(); ++idx) {
        try {
            cur = apply(cur, cert[idx]);
        } catch (const Error& err) {
            throw ReplayFailure(idx, err.code(), err.what());
        }
    }
    return cur;
}

std::string to_string(const Move& move) {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            auto sign = [](Sign s) { return s == Sign::Plus ? std::string("+") : std::string("-"); };
            if constexpr (std::is_same_v<T, SlideFramed>) {
                std::string s = "slide-framed " + m.i + " " + m.j + " " + sign(m.sign);
                if (!m.conjugator.empty()) s += " conj " + nkirby::to_string(m.conjugator);
                return s;
            }
            if constexpr (std::is_same_v<T, SlideDotted>) return "slide-dotted " + m.a + " " + m.b + " " + sign(m.sign);
            if constexpr (std::is_same_v<T, CancelPair>) return "cancel " + m.e + " " + m.f;
            if constexpr (std::is_same_v<T, CreatePair>) return "create " + m.e + " " + m.f;
        },
        move);
}

}  // namespace nkirby
