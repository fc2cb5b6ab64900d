#include "nkirby/invariants.hpp"

#include "nkirby/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace nkirby {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

/// row_dst += q * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) = checked::add(m(dst, c), checked::mul(q, m(src, c)));
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) = checked::add(m(r, dst), checked::mul(q, m(r, src)));
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = checked::mul(-1, m(r, c));
}

class SmithRunner {
public:
    SmithRunner(const IntMatrix& m, bool transforms) : d_(m), track_(transforms) {
        if (track_) {
            u_ = IntMatrix::identity(m.rows());
            v_ = IntMatrix::identity(m.cols());
        }
    }

    SmithForm run() && {
        const std::size_t lim = std::min(d_.rows(), d_.cols());
        for (std::size_t t = 0; t < lim; ++t) {
            if (!bring_min_to(t)) break;
            settle(t);
            if (d_(t, t) < 0) {
                negate_row(d_, t);
                if (track_) negate_row(u_, t);
            }
        }
        SmithForm out{std::move(d_), std::nullopt, std::nullopt};
        if (track_) {
            out.u = std::move(u_);
            out.v = std::move(v_);
        }
        return out;
    }

private:
    void row_swap(std::size_t a, std::size_t b) {
        swap_rows(d_, a, b);
        if (track_) swap_rows(u_, a, b);
    }
    void col_swap(std::size_t a, std::size_t b) {
        swap_cols(d_, a, b);
        if (track_) swap_cols(v_, a, b);
    }
    void row_add(std::size_t dst, std::size_t src, std::int64_t q) {
        add_row(d_, dst, src, q);
        if (track_) add_row(u_, dst, src, q);
    }
    void col_add(std::size_t dst, std::size_t src, std::int64_t q) {
        add_col(d_, dst, src, q);
        if (track_) add_col(v_, dst, src, q);
    }

    /// Moves the smallest non-zero entry of the trailing block to (t, t).
    bool bring_min_to(std::size_t t) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t r = t; r < d_.rows(); ++r)
            for (std::size_t c = t; c < d_.cols(); ++c)
                if (d_(r, c) != 0 && (!best || std::llabs(d_(r, c)) < std::llabs(d_(best->first, best->second))))
                    best = {r, c};
        if (!best) return false;
        row_swap(t, best->first);
        col_swap(t, best->second);
        return true;
    }

    /// Clears row and column t and makes d(t,t) divide the trailing block.
    void settle(std::size_t t) {
        while (true) {
            const std::int64_t p = d_(t, t);
            for (std::size_t r = t + 1; r < d_.rows(); ++r)
                if (d_(r, t) != 0) row_add(r, t, -(d_(r, t) / p));
            for (std::size_t c = t + 1; c < d_.cols(); ++c)
                if (d_(t, c) != 0) col_add(c, t, -(d_(t, c) / p));

            std::optional<std::pair<std::size_t, std::size_t>> rem;
            for (std::size_t r = t + 1; r < d_.rows() && !rem; ++r)
                if (d_(r, t) != 0) rem = {r, t};
            for (std::size_t c = t + 1; c < d_.cols() && !rem; ++c)
                if (d_(t, c) != 0) rem = {t, c};
            if (rem) {
                row_swap(t, rem->first);
                col_swap(t, rem->second);
                continue;
            }

            std::optional<std::size_t> bad_row;
            for (std::size_t r = t + 1; r < d_.rows() && !bad_row; ++r)
                for (std::size_t c = t + 1; c < d_.cols(); ++c)
                    if (d_(r, c) % p != 0) {
                        bad_row = r;
                        break;
                    }
            if (!bad_row) return;
            row_add(t, *bad_row, 1);
        }
    }

    IntMatrix d_;
    IntMatrix u_;
    IntMatrix v_;
    bool track_;
};

std::string relator_string(const Letters& w) {
    std::string out;
    for (const Letter& l : w) out += l.id + (l.sign < 0 ? "^-1" : "");
    return out;
}

}  // namespace

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::vector<std::string> parts;
    if (rank == 1) parts.emplace_back("Z");
    if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
    for (std::int64_t t : torsion) parts.push_back("Z/" + std::to_string(t));
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "+") + p;
    return out;
}

AbelianGroup make_group(std::size_t rank, std::vector<std::int64_t> factors) {
    std::vector<std::int64_t> finite;
    for (std::int64_t f : factors) {
        if (f == 0) {
            ++rank;
        } else if (std::llabs(f) > 1) {
            finite.push_back(std::llabs(f));
        }
    }
    IntMatrix diag(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
    AbelianGroup g{rank, {}};
    for (std::int64_t e : smith_normal_form(diag).diagonal())
        if (e > 1) g.torsion.push_back(e);
    return g;
}

std::vector<std::int64_t> SmithForm::diagonal() const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
}

std::size_t SmithForm::rank() const {
    const auto diag = diagonal();
    return static_cast<std::size_t>(std::count_if(diag.begin(), diag.end(), [](std::int64_t e) { return e != 0; }));
}

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms) {
    return SmithRunner(m, with_transforms).run();
}

AbelianGroup cokernel(const IntMatrix& m) {
    const SmithForm s = smith_normal_form(m);
    AbelianGroup g{m.rows() - s.rank(), {}};
    for (std::int64_t e : s.diagonal())
        if (e > 1) g.torsion.push_back(e);
    return g;
}

std::map<int, AbelianGroup> homology(const Diagram& d) {
    const int k = d.dim().k();
    const IntMatrix boundary = linking_matrix(d).entries.transpose();
    const SmithForm s = smith_normal_form(boundary);
    std::map<int, AbelianGroup> h;
    h[0] = AbelianGroup{1, {}};
    h[k - 1] = cokernel(boundary);
    h[k] = AbelianGroup{d.framed().size() - s.rank(), {}};
    return h;
}

AbelianGroup pi_km1(const Diagram& d) {
    const int k = d.dim().k();
    if (k < 3) throw Error(ErrorCode::RequiresK3, "pi_{k-1} is only abelian-computable for k >= 3; use the pi_1 presentation");
    return homology(d).at(k - 1);
}

std::string Presentation::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? "," : "") + generators[i];
    if (!relators.empty()) {
        out += " | ";
        for (std::size_t i = 0; i < relators.size(); ++i) out += (i ? ", " : "") + relator_string(relators[i]);
    }
    return out + ">";
}

Presentation pi_1_presentation(const Diagram& d) {
    if (d.dim().k() != 2) throw Error(ErrorCode::RequiresK2, "pi_1 presentations are only non-trivial for k = 2");
    Presentation p;
    for (std::size_t i = 0; i < d.dotted().size(); ++i) p.generators.push_back("x" + std::to_string(i + 1));
    for (const auto& f : d.framed()) {
        Letters w;
        for (const Letter& l : f.word.letters()) {
            w.push_back(Letter{p.generators[*d.dotted_index(l.id)], l.sign});
        }
        w = free_reduce(w);
        if (!w.empty()) p.relators.push_back(std::move(w));
    }
    return p;
}

AbelianGroup abelianization(const Presentation& p) {
    IntMatrix m(p.generators.size(), p.relators.size());
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        for (const Letter& l : p.relators[r]) {
            const auto it = std::find(p.generators.begin(), p.generators.end(), l.id);
            if (it == p.generators.end()) throw Error(ErrorCode::UnknownGenerator, "relator uses unknown generator '" + l.id + "'");
            m(static_cast<std::size_t>(it - p.generators.begin()), r) += l.sign;
        }
    }
    return cokernel(m);
}

std::map<int, AbelianGroup> chain_homology(const std::vector<IntMatrix>& boundaries) {
    std::map<int, AbelianGroup> h;
    if (boundaries.empty()) return h;
    for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
        if (boundaries[i].cols() != boundaries[i + 1].rows()) {
            throw Error(ErrorCode::NotAComplex, "boundary maps " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                                                    " have incompatible shapes");
        }
        if (!(boundaries[i] * boundaries[i + 1]).is_zero()) {
            throw Error(ErrorCode::NotAComplex, "boundary maps " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                                                    " do not compose to zero");
        }
    }

    std::vector<SmithForm> snf;
    for (const auto& b : boundaries) snf.push_back(smith_normal_form(b));

    const std::size_t top = boundaries.size();
    for (std::size_t i = 0; i <= top; ++i) {
        const std::size_t dim = i < top ? boundaries[i].rows() : boundaries[top - 1].cols();
        const std::size_t rank_out = i > 0 ? snf[i - 1].rank() : 0;  // rank of C_i -> C_{i-1}
        const std::size_t rank_in = i < top ? snf[i].rank() : 0;     // rank of C_{i+1} -> C_i
        AbelianGroup g{dim - rank_out - rank_in, {}};
        if (i < top)
            for (std::int64_t e : snf[i].diagonal())
                if (e > 1) g.torsion.push_back(e);
        h[static_cast<int>(i)] = std::move(g);
    }
    return h;
}

std::vector<IntMatrix> zero_boundary_complex(const std::vector<std::size_t>& ranks) {
    std::vector<IntMatrix> out;
    for (std::size_t i = 0; i + 1 < ranks.size(); ++i) out.emplace_back(ranks[i], ranks[i + 1]);
    return out;
}

namespace {

bool is_ball(const Diagram& d, const ReduceOptions& opts) {
    const Reduction r = reduce(d, opts);
    return r.result.dotted().empty() && r.result.framed().empty();
}

std::string dims(int n) { return std::to_string(n) + "-dimensional"; }

}  // namespace

BoundaryDescription boundary_description(const Diagram& d, const ReduceOptions& opts) {
    BoundaryDescription out;
    const int n = d.dim().n();
    const int k = d.dim().k();
    if (d.dim().is_source()) {
        out.lines.push_back("boundary of a 4-dimensional 2-handlebody; no double or open book statement applies");
        return out;
    }

    const std::string kh = std::to_string(k) + "-handlebody";
    if (is_ball(d, opts)) {
        out.lines.push_back("boundary is S^" + std::to_string(n - 1) + ", the double of B^" + std::to_string(n - 1));
        if (n >= 2 * k + 2) out.lines.push_back("open book of S^" + std::to_string(n - 1) + " with contractible page");
        return out;
    }

    if (n - 1 >= 2 * k + 1) {
        out.double_base = transport(d, n - 1);
        out.lines.push_back("boundary is the double of the " + dims(n - 1) + " " + kh + " given by the same diagram");
    } else {
        out.lines.push_back("boundary is the double of a " + dims(n - 1) + " " + kh);
    }
    if (n >= 2 * k + 2) {
        if (n - 2 >= 2 * k + 1) {
            out.page = transport(d, n - 2);
            out.lines.push_back("boundary admits an open book whose page is the " + dims(n - 2) + " " + kh +
                                " given by the same diagram");
        } else {
            out.lines.push_back("boundary admits an open book whose page is a " + dims(n - 2) + " " + kh);
        }
    }
    return out;
}

bool weak_equiv(const Diagram& d1, const Diagram& d2) {
    if (!d1.dim().is_source() || !d2.dim().is_source()) {
        throw Error(ErrorCode::StructureMismatch, "weak equivalence compares source 4-dimensional diagrams");
    }
    if (d1.dotted().size() != d2.dotted().size() || d1.framed().size() != d2.framed().size()) {
        throw Error(ErrorCode::StructureMismatch, "diagrams have different numbers of components");
    }
    for (std::size_t i = 0; i < d1.framed().size(); ++i) {
        Letters w = d1.framed()[i].word.letters();
        for (Letter& l : w) l.id = d2.dotted()[*d1.dotted_index(l.id)].id;
        if (w != d2.framed()[i].word.letters()) return false;
        const std::int64_t diff = d1.framed()[i].framing.value() - d2.framed()[i].framing.value();
        if (diff % 2 != 0) return false;
    }
    return true;
}

Verdict equivalent(const Diagram& d1, const Diagram& d2, const ReduceOptions& opts) {
    if (!(d1.dim() == d2.dim())) {
        throw Error(ErrorCode::DimMismatch, "cannot compare " + d1.dim().to_string() + " with " + d2.dim().to_string());
    }
    Reduction r1 = reduce(d1, opts);
    Reduction r2 = reduce(d2, opts);
    if (canonically_equal(r1.result, r2.result)) {
        return Diffeomorphic{std::move(r1.certificate), std::move(r2.certificate), std::move(r1.result)};
    }

    const int k = d1.dim().k();
    const auto h1 = homology(d1);
    const auto h2 = homology(d2);
    for (int deg : {k - 1, k}) {
        if (!(h1.at(deg) == h2.at(deg))) {
            const std::string name = k >= 3 && deg == k - 1 ? "pi_" + std::to_string(deg) : "H_" + std::to_string(deg);
            return Distinguished{name, h1.at(deg).to_string(), h2.at(deg).to_string()};
        }
    }

    std::ostringstream os;
    os << "normal forms " << to_string(r1.form) << " and " << to_string(r2.form)
       << " are not known to be equivalent; homology agrees";
    if (k == 2) {
        os << "; presentations " << pi_1_presentation(d1).to_string() << " and "
           << pi_1_presentation(d2).to_string();
    }
    return Unknown{os.str()};
}

std::string to_string(const Verdict& v) {
    if (const auto* d = std::get_if<Diffeomorphic>(&v)) {
        return "Diffeomorphic (" + std::to_string(d->first.size()) + " + " + std::to_string(d->second.size()) + " moves)";
    }
    if (const auto* d = std::get_if<Distinguished>(&v)) {
        return "Distinguished by " + d->invariant + ": " + d->first + " vs " + d->second;
    }
    return "Unknown: " + std::get<Unknown>(v).report;
}

}  // namespace nkirby
