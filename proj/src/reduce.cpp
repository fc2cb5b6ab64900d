#include "nkirby/reduce.hpp"

#include "nkirby/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

namespace nkirby {

namespace {

/// Working diagram plus the moves that produced it from the input.
class Session {
public:
    explicit Session(Diagram d) : diagram_(std::move(d)) {}

    const Diagram& diagram() const noexcept { return diagram_; }

    void apply(Move m) {
        diagram_ = nkirby::apply(diagram_, m);
        cert_.push_back(std::move(m));
    }

    void slide(const std::string& i, const std::string& j, Sign sign, Letters conj = {}) {
        apply(SlideFramed{i, j, sign, std::move(conj)});
    }

    Reduction finish(NormalForm form) && {
        return Reduction{std::move(form), std::move(cert_), std::move(diagram_)};
    }

private:
    Diagram diagram_;
    Certificate cert_;
};

using Key = std::function<std::int64_t(const Diagram&, const std::string&)>;

std::int64_t framing_key(const Diagram& d, const std::string& id) { return d.find_framed(id)->framing.value(); }

Key pass_key(std::string e) {
    return [e = std::move(e)](const Diagram& d, const std::string& id) {
        return d.find_framed(id)->word.exponent_sum(e);
    };
}

std::vector<std::string> framed_ids(const Diagram& d) {
    std::vector<std::string> ids;
    for (const auto& f : d.framed()) ids.push_back(f.id);
    return ids;
}

/// Euclid's algorithm realised by framed slides: afterwards key(ids[0]) is the
/// gcd (up to sign) and every other key is zero. No moves when the keys are
/// already of that shape.
void euclid(Session& s, const std::vector<std::string>& ids, const Key& key) {
    while (true) {
        std::optional<std::size_t> piv;
        std::int64_t pv = 0;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const std::int64_t v = key(s.diagram(), ids[i]);
            if (v != 0 && (!piv || std::llabs(v) < std::llabs(pv))) {
                piv = i;
                pv = v;
            }
        }
        if (!piv) return;

        bool others = false;
        for (std::size_t o = 0; o < ids.size(); ++o) {
            if (o == *piv) continue;
            const std::int64_t v = key(s.diagram(), ids[o]);
            if (v == 0) continue;
            others = true;
            const std::int64_t q = v / pv;
            const Sign sign = q > 0 ? Sign::Minus : Sign::Plus;
            for (std::int64_t n = 0; n < std::llabs(q); ++n) s.slide(ids[o], ids[*piv], sign);
        }
        if (!others) {
            if (*piv != 0) {
                s.slide(ids[0], ids[*piv], Sign::Plus);
                s.slide(ids[*piv], ids[0], Sign::Minus);
            }
            return;
        }
    }
}

/// Negates every linking entry and the framing of `id`: borrow a cancelling
/// pair, rotate the two rows by -I (two quarter turns of three slides each),
/// then cancel the pair again.
void negate_row(Session& s, const std::string& id) {
    const std::string e = fresh_id(s.diagram(), "ze");
    const std::string f = fresh_id(s.diagram(), "zf");
    s.apply(CreatePair{e, f});
    for (int turn = 0; turn < 2; ++turn) {
        s.slide(f, id, Sign::Plus);
        s.slide(id, f, Sign::Minus);
        s.slide(f, id, Sign::Plus);
    }
    s.apply(CancelPair{e, f});
}

void make_nonnegative(Session& s, const std::string& id, const Key& key) {
    if (key(s.diagram(), id) < 0) negate_row(s, id);
}

Framing zero_framing(const Diagram& d) { return normalize(d.group(), 0); }

NormalForm simple_stage(Session& s) {
    const auto ids = framed_ids(s.diagram());
    euclid(s, ids, framing_key);
    if (ids.empty()) return SimpleFamily{0, zero_framing(s.diagram())};
    make_nonnegative(s, ids[0], framing_key);
    return SimpleFamily{ids.size(), s.diagram().find_framed(ids[0])->framing};
}

NormalForm one_dotted_stage(Session& s) {
    const std::string e = s.diagram().dotted().front().id;
    const auto ids = framed_ids(s.diagram());
    const Key passes = pass_key(e);
    const Framing zero = zero_framing(s.diagram());

    euclid(s, ids, passes);
    if (!ids.empty()) make_nonnegative(s, ids[0], passes);
    const std::int64_t p = ids.empty() ? 0 : passes(s.diagram(), ids[0]);

    if (p == 1) {
        s.apply(CancelPair{e, ids[0]});
        return simple_stage(s);
    }
    auto framing = [&](const std::string& id) { return s.diagram().find_framed(id)->framing; };
    if (p == 0) {
        euclid(s, ids, framing_key);
        if (ids.empty()) return DottedFamily{0, zero, zero, 0};
        make_nonnegative(s, ids[0], framing_key);
        return DottedFamily{0, framing(ids[0]), zero, ids.size()};
    }
    const std::vector<std::string> rest(ids.begin() + 1, ids.end());
    euclid(s, rest, framing_key);
    if (!rest.empty()) make_nonnegative(s, rest[0], framing_key);
    return DottedFamily{p, framing(ids[0]), rest.empty() ? zero : framing(rest[0]), ids.size()};
}

// ---- k >= 3: Smith normal form by slides ---------------------------------

struct Pivot {
    std::string row;
    std::string col;
};

std::int64_t entry(const Diagram& d, const std::string& row, const std::string& col) {
    return d.find_framed(row)->word.exponent_sum(col);
}

void diagonalize(Session& s, std::vector<std::string> rows, std::vector<std::string> cols,
                 std::vector<Pivot>& pivots) {
    while (true) {
        std::optional<std::pair<std::string, std::string>> best;
        std::int64_t bv = 0;
        for (const auto& r : rows)
            for (const auto& c : cols) {
                const std::int64_t v = entry(s.diagram(), r, c);
                if (v != 0 && (!best || std::llabs(v) < std::llabs(bv))) {
                    best = {r, c};
                    bv = v;
                }
            }
        if (!best) return;
        auto [pr, pc] = *best;

        while (true) {
            const std::int64_t pv = entry(s.diagram(), pr, pc);
            for (const auto& r : rows) {
                if (r == pr) continue;
                const std::int64_t q = entry(s.diagram(), r, pc) / pv;
                const Sign sign = q > 0 ? Sign::Minus : Sign::Plus;
                for (std::int64_t n = 0; n < std::llabs(q); ++n) s.slide(r, pr, sign);
            }
            for (const auto& c : cols) {
                if (c == pc) continue;
                const std::int64_t q = entry(s.diagram(), pr, c) / pv;
                const Sign sign = q > 0 ? Sign::Minus : Sign::Plus;
                for (std::int64_t n = 0; n < std::llabs(q); ++n) s.apply(SlideDotted{c, pc, sign});
            }

            // a non-zero remainder is strictly smaller than the pivot: move there
            std::optional<std::pair<std::string, std::string>> next;
            std::int64_t nv = 0;
            auto consider = [&](const std::string& r, const std::string& c) {
                const std::int64_t v = entry(s.diagram(), r, c);
                if (v != 0 && (!next || std::llabs(v) < std::llabs(nv))) {
                    next = {r, c};
                    nv = v;
                }
            };
            for (const auto& r : rows)
                if (r != pr) consider(r, pc);
            for (const auto& c : cols)
                if (c != pc) consider(pr, c);
            if (!next) break;
            std::tie(pr, pc) = *next;
        }

        if (entry(s.diagram(), pr, pc) < 0) negate_row(s, pr);
        pivots.push_back(Pivot{pr, pc});
        rows.erase(std::find(rows.begin(), rows.end(), pr));
        cols.erase(std::find(cols.begin(), cols.end(), pc));
    }
}

void smith_by_slides(Session& s, std::vector<Pivot>& pivots) {
    std::vector<std::string> cols;
    for (const auto& e : s.diagram().dotted()) cols.push_back(e.id);
    diagonalize(s, framed_ids(s.diagram()), cols, pivots);

    // enforce the divisibility chain
    while (true) {
        std::optional<std::pair<std::size_t, std::size_t>> bad;
        for (std::size_t i = 0; i < pivots.size() && !bad; ++i)
            for (std::size_t j = i + 1; j < pivots.size() && !bad; ++j) {
                const std::int64_t di = entry(s.diagram(), pivots[i].row, pivots[i].col);
                const std::int64_t dj = entry(s.diagram(), pivots[j].row, pivots[j].col);
                if (dj % di != 0 && di % dj != 0) bad = {i, j};
            }
        if (!bad) return;
        const Pivot pi = pivots[bad->first];
        const Pivot pj = pivots[bad->second];
        pivots.erase(pivots.begin() + static_cast<std::ptrdiff_t>(bad->second));
        pivots.erase(pivots.begin() + static_cast<std::ptrdiff_t>(bad->first));
        s.slide(pi.row, pj.row, Sign::Plus);
        diagonalize(s, {pi.row, pj.row}, {pi.col, pj.col}, pivots);
    }
}

// ---- k = 2: best-effort simplification ------------------------------------

std::size_t total_length(const Diagram& d) {
    std::size_t n = 0;
    for (const auto& f : d.framed()) n += f.word.size();
    return n;
}

/// Finds a framed component passing once through a dotted one, clears every
/// other occurrence of that generator by slides over it, and cancels the pair.
bool try_cancel(Session& s) {
    for (const auto& f : s.diagram().framed()) {
        if (f.word.size() != 1) continue;
        const std::string fid = f.id;
        const Letter through = f.word.letters().front();

        while (true) {
            const FramedComponent* other = nullptr;
            for (const auto& g : s.diagram().framed())
                if (g.id != fid && g.word.mentions(through.id)) {
                    other = &g;
                    break;
                }
            if (!other) break;
            const Letters& w = other->word.letters();
            const auto pos = static_cast<std::size_t>(
                std::find_if(w.begin(), w.end(), [&](const Letter& l) { return l.id == through.id; }) - w.begin());
            // w = u x^s v: conjugating by v^-1 puts the parallel copy right after x^s
            const Letters tail(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
            const Sign sign = -w[pos].sign * through.sign > 0 ? Sign::Plus : Sign::Minus;
            const std::string gid = other->id;
            s.slide(gid, fid, sign, inverse(tail));
        }
        s.apply(CancelPair{through.id, fid});
        return true;
    }
    return false;
}

bool has_single_letter_word(const Diagram& d) {
    return std::any_of(d.framed().begin(), d.framed().end(), [](const auto& f) { return f.word.size() == 1; });
}

/// One improving step: a dotted slide that exposes a cancelling pair, or a
/// framed slide that shortens the total word length.
bool improve(Session& s, std::size_t budget) {
    const Diagram& d = s.diagram();
    for (const auto& a : d.dotted())
        for (const auto& b : d.dotted()) {
            if (a.id == b.id) continue;
            for (Sign sign : {Sign::Plus, Sign::Minus}) {
                if (budget == 0) return false;
                --budget;
                if (has_single_letter_word(slide_dotted(d, a.id, b.id, sign))) {
                    s.apply(SlideDotted{a.id, b.id, sign});
                    return true;
                }
            }
        }

    const std::size_t before = total_length(d);
    for (const auto& fi : d.framed())
        for (const auto& fj : d.framed()) {
            if (fi.id == fj.id) continue;
            const Letters& w = fi.word.letters();
            for (Sign sign : {Sign::Plus, Sign::Minus})
                for (std::size_t pos = 0; pos <= w.size(); ++pos) {
                    if (budget == 0) return false;
                    --budget;
                    const Letters conj = inverse(Letters(w.begin() + static_cast<std::ptrdiff_t>(pos), w.end()));
                    if (total_length(slide_framed(d, fi.id, fj.id, sign, conj)) < before) {
                        s.slide(fi.id, fj.id, sign, conj);
                        return true;
                    }
                }
        }
    return false;
}

NormalForm residue_stage(Session& s) {
    const std::size_t a = s.diagram().dotted().size();
    if (a == 0) return simple_stage(s);
    if (a == 1) return one_dotted_stage(s);
    std::vector<std::string> unlinked;
    for (const auto& f : s.diagram().framed())
        if (f.word.empty()) unlinked.push_back(f.id);
    euclid(s, unlinked, framing_key);
    if (!unlinked.empty()) make_nonnegative(s, unlinked[0], framing_key);
    return GeneralForm{s.diagram()};
}

void require_calculus(const Diagram& d) {
    if (d.dim().is_source()) {
        throw Error(ErrorCode::InvalidDim, "reduction needs n >= 2k+1; induce the source diagram first");
    }
}

}  // namespace

Reduction reduce_simple(const Diagram& d) {
    require_calculus(d);
    if (!d.dotted().empty()) throw Error(ErrorCode::NotSimpleFamily, "diagram has dotted components");
    Session s(d);
    NormalForm nf = simple_stage(s);
    return std::move(s).finish(std::move(nf));
}

Reduction reduce_one_dotted(const Diagram& d, const ReduceOptions&) {
    require_calculus(d);
    if (d.dotted().size() != 1) {
        throw Error(ErrorCode::NotOneDottedFamily,
                    "expected exactly one dotted component, found " + std::to_string(d.dotted().size()));
    }
    Session s(d);
    NormalForm nf = one_dotted_stage(s);
    return std::move(s).finish(std::move(nf));
}

Reduction reduce_general(const Diagram& d, const ReduceOptions& opts) {
    require_calculus(d);
    Session s(d);
    if (d.dim().k() >= 3) {
        std::vector<Pivot> pivots;
        smith_by_slides(s, pivots);
        for (const Pivot& p : pivots)
            if (entry(s.diagram(), p.row, p.col) == 1) s.apply(CancelPair{p.col, p.row});
    } else {
        // every accepted step either cancels a pair or shortens a word
        while (true) {
            if (try_cancel(s)) continue;
            if (s.diagram().dotted().size() <= 1) break;
            if (!improve(s, opts.slide_budget)) break;
        }
    }
    NormalForm nf = residue_stage(s);
    return std::move(s).finish(std::move(nf));
}

Reduction reduce(const Diagram& d, const ReduceOptions& opts) {
    switch (d.dotted().size()) {
        case 0: return reduce_simple(d);
        case 1: return reduce_one_dotted(d, opts);
        default: return reduce_general(d, opts);
    }
}

bool same_normal_form(const NormalForm& a, const NormalForm& b) {
    if (a.index() != b.index()) return false;
    if (const auto* ga = std::get_if<GeneralForm>(&a)) {
        return canonically_equal(ga->diagram, std::get<GeneralForm>(b).diagram);
    }
    if (const auto* sa = std::get_if<SimpleFamily>(&a)) return *sa == std::get<SimpleFamily>(b);
    return std::get<DottedFamily>(a) == std::get<DottedFamily>(b);
}

std::string to_string(const NormalForm& nf) {
    std::ostringstream os;
    if (const auto* sf = std::get_if<SimpleFamily>(&nf)) {
        os << "K(" << sf->t.value() << ") m=" << sf->m;
    } else if (const auto* df = std::get_if<DottedFamily>(&nf)) {
        os << "K(" << df->p << ';' << df->a_fr.value() << ',' << df->b.value() << ") m=" << df->m;
    } else {
        const Diagram& g = std::get<GeneralForm>(nf).diagram;
        const LinkingMatrix lm = linking_matrix(g);
        os << "General a=" << g.dotted().size() << " m=" << g.framed().size() << " linking=" << lm.entries.to_string();
    }
    return os.str();
}

// ---- recognition -----------------------------------------------------------

namespace {

std::string exponent(const std::string& e) { return e.size() == 1 ? "^" + e : "^{" + e + "}"; }

std::string sphere(int d) { return "S" + exponent(std::to_string(d)); }

/// B^{n - offset}
std::string ball(int n, int offset, bool symbolic) {
    if (!symbolic) return "B" + exponent(std::to_string(n - offset));
    if (offset == 0) return "B^n";
    return "B" + exponent("n-" + std::to_string(offset));
}

Factor bundle(const Framing& t) {
    if (t.is_zero()) return Factor{FactorKind::TrivialBundle, 0, 0, {}};
    return Factor{FactorKind::TwistedBundle, 0, t.value(), {}};
}

Factor dotted_block(std::int64_t p, const Framing& a, int k) {
    if (k == 2 && a.is_zero()) return Factor{FactorKind::LensProduct, p, 0, {}};
    return Factor{FactorKind::Residual, p, a.value(), {}};
}

bool factor_less(const Factor& x, const Factor& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.p != y.p) return x.p < y.p;
    if (x.twist != y.twist) return x.twist < y.twist;
    return x.detail < y.detail;
}

ManifoldName make_name(const DimSpec& dim, std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), factor_less);
    return ManifoldName{dim.n(), dim.k(), framing_group(dim), std::move(factors)};
}

/// Componentwise naming for diagrams that are a disjoint union of unlinked
/// dotted handles, unlinked framed unknots and single dotted/framed blocks.
std::optional<ManifoldName> split_name(const Diagram& d) {
    std::vector<Factor> factors;
    for (const auto& e : d.dotted()) {
        std::vector<const FramedComponent*> users;
        for (const auto& f : d.framed())
            if (f.word.mentions(e.id)) users.push_back(&f);
        if (users.empty()) {
            factors.push_back(Factor{FactorKind::DottedHandle, 0, 0, {}});
        } else if (users.size() > 1) {
            return std::nullopt;
        }
    }
    for (const auto& f : d.framed()) {
        const Letters& w = f.word.letters();
        if (w.empty()) {
            factors.push_back(bundle(f.framing));
            continue;
        }
        const bool one_generator = std::all_of(w.begin(), w.end(), [&](const Letter& l) {
            return l.id == w.front().id && l.sign == w.front().sign;
        });
        if (!one_generator) return std::nullopt;
        const auto p = static_cast<std::int64_t>(w.size());
        if (p >= 2) factors.push_back(dotted_block(p, f.framing, d.dim().k()));
    }
    return make_name(d.dim(), std::move(factors));
}

}  // namespace

ManifoldName recognize(const NormalForm& nf, const DimSpec& dim) {
    const int k = dim.k();
    std::vector<Factor> factors;
    auto trivial_copies = [&](std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) factors.push_back(Factor{FactorKind::TrivialBundle, 0, 0, {}});
    };
    if (const auto* sf = std::get_if<SimpleFamily>(&nf)) {
        if (sf->m > 0) {
            factors.push_back(bundle(sf->t));
            trivial_copies(sf->m - 1);
        }
    } else if (const auto* df = std::get_if<DottedFamily>(&nf)) {
        if (df->p == 0) {
            factors.push_back(Factor{FactorKind::DottedHandle, 0, 0, {}});
            if (df->m >= 1) factors.push_back(bundle(df->a_fr));
        } else if (df->p >= 2) {
            factors.push_back(dotted_block(df->p, df->a_fr, k));
        }
        if (df->m >= 2) {
            factors.push_back(bundle(df->b));
            trivial_copies(df->m - 2);
        }
    } else {
        const Diagram& g = std::get<GeneralForm>(nf).diagram;
        if (auto name = split_name(g)) return *name;
        factors.push_back(Factor{FactorKind::Unrecognized, 0, 0, to_string(nf)});
    }
    return make_name(dim, std::move(factors));
}

ManifoldName recognize(const Diagram& d, const ReduceOptions& opts) {
    require_calculus(d);
    if (auto name = split_name(d)) return *name;
    return recognize(reduce(d, opts).form, d.dim());
}

namespace {

std::string render_factor(const ManifoldName& m, const Factor& f, bool symbolic) {
    switch (f.kind) {
        case FactorKind::DottedHandle: return sphere(m.k - 1) + "×" + ball(m.n, m.k - 1, symbolic);
        case FactorKind::TrivialBundle: return sphere(m.k) + "×" + ball(m.n, m.k, symbolic);
        case FactorKind::TwistedBundle: {
            // over Z the twist is part of the name
            const std::string mark = m.group == FramingGroup::Z ? "~_" + std::to_string(f.twist) : "~";
            return sphere(m.k) + mark + "×" + ball(m.n, m.k, symbolic);
        }
        case FactorKind::LensProduct: return "L(" + std::to_string(f.p) + ",1)°×" + ball(m.n, 3, symbolic);
        case FactorKind::Residual: return "K(" + std::to_string(f.p) + ";" + std::to_string(f.twist) + ")";
        case FactorKind::Unrecognized: return "unrecognized: " + f.detail;
    }
    return {};
}

}  // namespace

std::string ManifoldName::to_string(const NameStyle& style) const {
    if (factors.empty()) return ball(n, 0, style.symbolic_n);
    if (factors.size() == 1) return render_factor(*this, factors.front(), style.symbolic_n);

    std::string out;
    for (std::size_t i = 0; i < factors.size();) {
        std::size_t run = 1;
        if (style.compact)
            while (i + run < factors.size() && factors[i + run] == factors[i]) ++run;
        if (!out.empty()) out += "♮";
        if (run > 1) out += "♮^" + std::to_string(run);
        out += "(" + render_factor(*this, factors[i], style.symbolic_n) + ")";
        i += run;
    }
    return out;
}

}  // namespace nkirby
