#include "nkirby/cli.hpp"
#include "nkirby/error.hpp"
#include "nkirby/invariants.hpp"
#include "nkirby/io.hpp"
#include "nkirby/reduce.hpp"

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>

using namespace nkirby;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::string first_failure;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

int failures = 0;

void report(int id, const std::string& title, double limit_ms, const std::function<void(Check&)>& body) {
    Check c;
    const auto start = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (limit_ms > 0) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "took %.1f ms, limit %.0f ms", ms, limit_ms);
        c.expect(ms < limit_ms, buf);
    }
    std::printf("%s criterion %d: %s (%.1f ms)%s%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), ms,
                c.ok ? "" : ": ", c.first_failure.c_str());
    if (!c.ok) ++failures;
}

/// Every invariant the move set must preserve.
struct Fingerprint {
    std::map<int, AbelianGroup> h;
    AbelianGroup pi;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Diagram& d) {
    Fingerprint f;
    f.h = homology(d);
    f.pi = d.dim().k() >= 3 ? pi_km1(d) : abelianization(pi_1_presentation(d));
    return f;
}

struct Case {
    Diagram input;
    Diagram moved;
    Certificate cert;
};

/// >= 500 diagrams, k cycling through 2..5, each pushed through a random
/// certificate of at least 20 moves.
std::vector<Case> corpus() {
    std::mt19937_64 rng(20251016);
    std::vector<Case> out;
    for (int i = 0; i < 520; ++i) {
        const int k = 2 + i % 4;
        const Diagram d = testsupport::random_diagram(rng, k);
        Diagram cur = d;
        Certificate cert;
        int fresh = 0;
        for (int m = 0; m < 24; ++m) {
            cert.push_back(testsupport::random_move(rng, cur, fresh));
            cur = nkirby::apply(cur, cert.back());
        }
        out.push_back({d, cur, cert});
    }
    return out;
}

Diagram random_source(std::mt19937_64& rng) {
    Diagram d{DimSpec::source_4d()};
    const int a = testsupport::pick(rng, 0, 3);
    for (int i = 1; i <= a; ++i) d = add_dotted(d, "e" + std::to_string(i));
    const int m = testsupport::pick(rng, 1, 4);
    for (int j = 1; j <= m; ++j) {
        Letters w;
        if (a > 0)
            for (int l = testsupport::pick(rng, 0, 5); l > 0; --l)
                w.push_back(Letter{"e" + std::to_string(testsupport::pick(rng, 1, a)), testsupport::pick(rng, 0, 1) ? 1 : -1});
        d = add_framed(d, "f" + std::to_string(j), w, static_cast<std::int64_t>(testsupport::pick(rng, -3000, 3000)));
    }
    return d;
}

Diagram shift_framings(const Diagram& d, const std::vector<std::int64_t>& by) {
    Diagram out{d.dim()};
    for (const auto& e : d.dotted()) out = add_dotted(out, e.id);
    for (std::size_t i = 0; i < d.framed().size(); ++i) {
        const auto& f = d.framed()[i];
        out = add_framed(out, f.id, f.word.letters(), f.framing.value() + by[i]);
    }
    return out;
}

}  // namespace

int main() {
    std::vector<Case> cases;

    report(1, "framing group follows the Bott table for k = 2..18", 1.0, [](Check& c) {
        for (int k = 2; k <= 18; ++k)
            c.expect(to_string(framing_group(2 * k + 1, k)) == testsupport::bott_oracle(k), "k=" + std::to_string(k));
    });

    report(2, "moves conserve homology and pi_{k-1} on 520 diagrams with 24-move certificates", 10000.0, [&](Check& c) {
        cases = corpus();
        std::size_t moves = 0, slides = 0;
        for (std::size_t i = 0; i < cases.size(); ++i) {
            c.expect(cases[i].cert.size() >= 20, "short certificate");
            c.expect(canonically_equal(nkirby::apply(cases[i].input, cases[i].cert), cases[i].moved), "replay " + std::to_string(i));
            c.expect(fingerprint(cases[i].input) == fingerprint(cases[i].moved), "case " + std::to_string(i));
            for (const Move& m : cases[i].cert) {
                ++moves;
                if (std::holds_alternative<SlideFramed>(m) || std::holds_alternative<SlideDotted>(m)) ++slides;
            }
        }
        c.expect(cases.size() >= 500, "too few diagrams");
        c.expect(2 * slides >= moves, "certificates are mostly slides: " + std::to_string(slides) + "/" + std::to_string(moves));
    });

    report(3, "every reducer replays and is idempotent", 10000.0, [&](Check& c) {
        using Reducer = std::function<Reduction(const Diagram&)>;
        const Reducer simple = [](const Diagram& d) { return reduce_simple(d); };
        const Reducer one = [](const Diagram& d) { return reduce_one_dotted(d); };
        const Reducer general = [](const Diagram& d) { return reduce_general(d); };
        const Reducer dispatch = [](const Diagram& d) { return reduce(d); };
        std::size_t runs = 0;
        for (std::size_t i = 0; i < cases.size(); ++i) {
            for (const Diagram& d : {cases[i].input, cases[i].moved}) {
                std::vector<std::pair<const char*, Reducer>> reducers{{"general", general}, {"reduce", dispatch}};
                if (d.dotted().empty()) reducers.push_back({"simple", simple});
                if (d.dotted().size() == 1) reducers.push_back({"one-dotted", one});
                for (const auto& [name, fn] : reducers) {
                    const std::string tag = std::string(name) + " on case " + std::to_string(i);
                    const Reduction r = fn(d);
                    c.expect(canonically_equal(nkirby::apply(d, r.certificate), r.result), tag + " replay");
                    const bool same_family = (std::string(name) != "simple" || r.result.dotted().empty()) &&
                                             (std::string(name) != "one-dotted" || r.result.dotted().size() == 1);
                    const Reduction again = same_family ? fn(r.result) : reduce(r.result);
                    c.expect(again.certificate.empty(), tag + " idempotence");
                    ++runs;
                }
            }
        }
        c.expect(runs >= 2 * cases.size() * 2, "too few reductions");
    });

    report(4, "pi_{k-1}(K(p;a,b)) is Z, 0, Z/p for p = 0, 1, 2..12", 0, [](Check& c) {
        for (int k : {3, 4, 5}) {
            for (int p = 0; p <= 12; ++p) {
                const std::string expect = p == 0 ? "Z" : p == 1 ? "0" : "Z/" + std::to_string(p);
                const Diagram d = example("Kpab", {{"n", 2 * k + 1}, {"k", k}, {"p", p}, {"a", 1}, {"b", 1}});
                c.expect(pi_km1(d).to_string() == expect, "p=" + std::to_string(p) + " k=" + std::to_string(k));
                c.expect(pi_km1(reduce(d).result).to_string() == expect, "reduced p=" + std::to_string(p));
            }
        }
    });

    report(5, "Smith form matches brute-force cokernel orders on 3x3 matrices", 5000.0, [](Check& c) {
        std::mt19937_64 rng(77);
        int tested = 0;
        while (tested < 250) {
            IntMatrix m(3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) m(i, j) = testsupport::pick(rng, -4, 4);
            if (testsupport::bareiss_det(m) == 0) continue;
            ++tested;
            const SmithForm s = smith_normal_form(m, true);
            const auto diag = s.diagonal();
            std::int64_t order = 1;
            for (auto x : diag) order *= x;
            const std::string tag = "matrix " + std::to_string(tested);
            c.expect(order == testsupport::cokernel_order_bruteforce(m), tag + " order");
            AbelianGroup g = cokernel(m);
            std::int64_t gorder = 1;
            for (auto t : g.torsion) gorder *= t;
            c.expect(g.rank == 0 && gorder == order, tag + " cokernel");
            for (std::size_t i = 0; i + 1 < diag.size(); ++i) c.expect(diag[i] > 0 && diag[i + 1] % diag[i] == 0, tag + " chain");
            c.expect(std::llabs(testsupport::bareiss_det(*s.u)) == 1, tag + " u unimodular");
            c.expect(std::llabs(testsupport::bareiss_det(*s.v)) == 1, tag + " v unimodular");
            c.expect(*s.u * m * *s.v == s.d, tag + " u m v = d");
        }
    });

    report(6, "worked examples reproduce their stated results", 0, [](Check& c) {
        const NameStyle symbolic{true, false};
        for (const char* name : {"K1", "K2"}) {
            const Reduction r = reduce(example(name));
            c.expect(r.result.dotted().empty() && r.result.framed().empty(), std::string(name) + " reduces to nothing");
            c.expect(recognize(example(name)).to_string(symbolic) == "B^n", std::string(name) + " is B^n");
        }
        c.expect(pi_1_presentation(example("K3")).to_string() == "<x1,x2 | x1x2x1x2^-1x1^-1x2^-1>", "K3 presentation");
        c.expect(pi_1_presentation(example("K4")).to_string() == "<x1,x2 | x1x2^-1>", "K4 presentation");
        c.expect(recognize(example("K4")).to_string(symbolic) == "S^1×B^{n-1}", "K4 name");

        const Verdict v = equivalent(example("K5", {{"n", 7}, {"k", 3}}), example("K6", {{"n", 7}, {"k", 3}}));
        c.expect(std::holds_alternative<Diffeomorphic>(v), "K5/K6 verdict");
        if (const auto* dif = std::get_if<Diffeomorphic>(&v)) {
            c.expect(recognize(dif->common).to_string(NameStyle{false, true}) == "♮^2(S^2×B^5)♮(S^3×B^4)", "K5/K6 name");
        }

        const std::vector<std::pair<std::string, std::string>> a6{
            {"A6-circle", "S^1×B^{n-1}"},
            {"A6-sphere", "S^2×B^{n-2}"},
            {"A6-twisted", "S^2~×B^{n-2}"},
            {"A6-ball", "B^n"},
            {"A6-lens", "L(2,1)°×B^{n-3}"},
            {"A6-sum", "(S^2×B^{n-2})♮(S^2~×B^{n-2})"},
            {"A6-twisted-sum", "(S^2~×B^{n-2})♮(S^2~×B^{n-2})"},
        };
        for (const auto& [name, expect] : a6) {
            for (int n : {5, 6, 8}) {
                const std::string got = recognize(example(name, {{"n", n}})).to_string(symbolic);
                c.expect(got == expect, name + " at n=" + std::to_string(n) + " gave " + got);
            }
        }
        for (int p = 3; p <= 7; ++p)
            c.expect(recognize(example("A6-lens", {{"p", p}})).to_string(symbolic) == "L(" + std::to_string(p) + ",1)°×B^{n-3}",
                     "lens p=" + std::to_string(p));
    });

    report(7, "punctured S^{n-k}×S^k has H_{n-k} = Z^2 when n = 2k and Z when n < 2k", 0, [](Check& c) {
        for (int k = 2; k <= 8; ++k) {
            for (int n = k + 1; n <= 2 * k; ++n) {
                // one 0-cell, one (n-k)-cell and one k-cell; the top cell is removed
                std::vector<std::size_t> ranks(static_cast<std::size_t>(k + 1), 0);
                ranks[0] = 1;
                ranks[static_cast<std::size_t>(n - k)] += 1;
                ranks[static_cast<std::size_t>(k)] += 1;
                const auto h = chain_homology(zero_boundary_complex(ranks));
                const std::string expect = n == 2 * k ? "Z^2" : "Z";
                c.expect(h.at(n - k).to_string() == expect, "n=" + std::to_string(n) + " k=" + std::to_string(k));
            }
        }
    });

    report(8, "weak equivalence and induced diagrams", 0, [](Check& c) {
        const Diagram a = add_framed(Diagram(DimSpec::source_4d()), "J", {}, -1);
        const Diagram b = add_framed(Diagram(DimSpec::source_4d()), "J", {}, 2025);
        const Diagram odd = add_framed(Diagram(DimSpec::source_4d()), "J", {}, 2024);
        c.expect(weak_equiv(a, b), "-1 vs 2025");
        c.expect(!weak_equiv(a, odd), "-1 vs 2024");
        c.expect(induce(a, 5, 2) == induce(b, 5, 2), "induced unknots");

        std::mt19937_64 rng(8);
        for (int i = 0; i < 200; ++i) {
            const Diagram d = random_source(rng);
            std::vector<std::int64_t> even, parity;
            for (std::size_t j = 0; j < d.framed().size(); ++j) {
                even.push_back(2 * testsupport::pick(rng, -50, 50));
                parity.push_back(j == 0 ? 1 : 0);
            }
            const Diagram same = shift_framings(d, even);
            const Diagram other = shift_framings(d, parity);
            const std::string tag = "source " + std::to_string(i);
            c.expect(weak_equiv(d, same), tag + " even shift");
            c.expect(!weak_equiv(d, other), tag + " odd shift");
            for (int n : {5, 6, 7, 9})
                c.expect(induce(d, n, 2) == induce(same, n, 2), tag + " induce n=" + std::to_string(n));
            c.expect(!(induce(d, 5, 2) == induce(other, 5, 2)), tag + " induce separates parity");
        }
    });

    report(9, "text format round-trips and records are byte-stable", 5000.0, [&](Check& c) {
        std::size_t n = 0;
        for (const Case& cs : cases) {
            for (const Diagram& d : {cs.input, cs.moved}) {
                c.expect(parse_diagram(print_diagram(d)) == d, "round-trip " + std::to_string(n));
                ++n;
            }
        }
        c.expect(n >= 500, "too few diagrams");
        for (std::size_t i = 0; i < cases.size(); i += 5)
            c.expect(invariant_records(cases[i].moved) == invariant_records(cases[i].moved), "records " + std::to_string(i));
        const auto dir = std::filesystem::temp_directory_path() / "nkirby_acceptance_records";
        std::filesystem::create_directories(dir);
        for (const auto& name : example_names()) {
            const std::string path = (dir / (name + ".kd")).string();
            write_text(path, example_text(name));
            std::string runs[2];
            for (auto& text : runs) {
                std::ostringstream out, err;
                c.expect(run_cli({"invariants", path, "--format", "records"}, out, err) == 0, "cli " + name);
                text = out.str();
            }
            c.expect(!runs[0].empty() && runs[0] == runs[1], "cli records " + name);
        }
        std::filesystem::remove_all(dir);
    });

    return failures == 0 ? 0 : 1;
}
