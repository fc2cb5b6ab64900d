#include "nkirby/io.hpp"

#include "nkirby/error.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <regex>
#include <sstream>

namespace nkirby {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

/// Splits into non-empty token lines, dropping `#` comments.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string raw(text.substr(pos, end - pos));
        ++number;
        pos = end + 1;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream is(raw);
        Line line{number, {}};
        for (std::string tok; is >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
        if (end == text.size()) break;
    }
    return out;
}

[[noreturn]] void syntax(std::size_t line, const std::string& msg) {
    throw ParseFailure(ErrorCode::SyntaxError, line, msg);
}

[[noreturn]] void semantic(std::size_t line, const std::string& msg) {
    throw ParseFailure(ErrorCode::SemanticError, line, msg);
}

std::string checked_id(const Line& l, const std::string& tok) {
    static const std::regex id_re("[A-Za-z][A-Za-z0-9_]*");
    if (!std::regex_match(tok, id_re)) syntax(l.number, "invalid identifier '" + tok + "'");
    return tok;
}

std::int64_t parse_int(const Line& l, const std::string& tok) {
    std::int64_t v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && tok.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) syntax(l.number, "expected an integer, got '" + tok + "'");
    return v;
}

Letter parse_letter(const Line& l, const std::string& tok) {
    constexpr std::string_view inv = "^-1";
    if (tok.size() > inv.size() && tok.compare(tok.size() - inv.size(), inv.size(), inv) == 0) {
        return Letter{checked_id(l, tok.substr(0, tok.size() - inv.size())), -1};
    }
    return Letter{checked_id(l, tok), 1};
}

Letters parse_letters(const Line& l, std::size_t from) {
    Letters w;
    for (std::size_t i = from; i < l.tokens.size(); ++i) w.push_back(parse_letter(l, l.tokens[i]));
    return w;
}

Sign parse_sign(const Line& l, const std::string& tok) {
    if (tok == "+") return Sign::Plus;
    if (tok == "-") return Sign::Minus;
    syntax(l.number, "expected '+' or '-', got '" + tok + "'");
}

void expect_arity(const Line& l, std::size_t n) {
    if (l.tokens.size() != n) {
        syntax(l.number, "'" + l.tokens[0] + "' takes " + std::to_string(n - 1) + " arguments");
    }
}

DimSpec parse_dim(const Line& l) {
    if (l.tokens.size() != 3 && l.tokens.size() != 4) syntax(l.number, "expected 'dim N K' or 'dim 4 2 source'");
    const std::int64_t n = parse_int(l, l.tokens[1]);
    const std::int64_t k = parse_int(l, l.tokens[2]);
    if (l.tokens.size() == 4) {
        if (l.tokens[3] != "source") syntax(l.number, "unexpected '" + l.tokens[3] + "' after dim");
        if (n != 4 || k != 2) semantic(l.number, "only (4,2) diagrams can be marked source");
        return DimSpec::source_4d();
    }
    try {
        return DimSpec(static_cast<int>(n), static_cast<int>(k));
    } catch (const Error& e) {
        semantic(l.number, e.what());
    }
}

/// Runs a diagram mutation, re-tagging domain errors with the line number.
void on_line(const Line& l, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ParseFailure&) {
        throw;
    } catch (const Error& e) {
        semantic(l.number, e.what());
    }
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines.front().tokens[0] != "dim") {
        syntax(lines.empty() ? 0 : lines.front().number, "the first directive must be 'dim'");
    }
    Diagram d(parse_dim(lines.front()));

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        const std::string& verb = l.tokens[0];
        if (verb == "dim") {
            syntax(l.number, "duplicate 'dim' directive");
        } else if (verb == "dotted") {
            expect_arity(l, 2);
            const std::string id = checked_id(l, l.tokens[1]);
            on_line(l, [&] { d.insert_dotted(id); });
        } else if (verb == "framed") {
            if (l.tokens.size() < 5 || l.tokens[2] != "framing" || l.tokens[4] != "word") {
                syntax(l.number, "expected 'framed <id> framing <int> word <letters>'");
            }
            const std::string id = checked_id(l, l.tokens[1]);
            const std::int64_t t = parse_int(l, l.tokens[3]);
            const Letters w = parse_letters(l, 5);
            on_line(l, [&] { d.insert_framed(id, w, normalize(d.group(), t)); });
        } else {
            syntax(l.number, "unknown directive '" + verb + "'");
        }
    }
    return d;
}

std::string print_diagram(const Diagram& d) {
    std::ostringstream os;
    os << "dim " << d.dim().n() << ' ' << d.dim().k();
    if (d.dim().is_source()) os << " source";
    os << '\n';
    for (const auto& e : d.dotted()) os << "dotted " << e.id << '\n';
    for (const auto& f : d.framed()) {
        os << "framed " << f.id << " framing " << f.framing.value() << " word";
        for (const Letter& l : f.word.letters()) os << ' ' << l.id << (l.sign < 0 ? "^-1" : "");
        os << '\n';
    }
    return os.str();
}

Certificate parse_certificate(std::string_view text) {
    Certificate cert;
    for (const Line& l : tokenize(text)) {
        const std::string& verb = l.tokens[0];
        if (verb == "slide-framed") {
            if (l.tokens.size() < 4) syntax(l.number, "expected 'slide-framed <i> <j> +|- [conj <letters>]'");
            Letters conj;
            if (l.tokens.size() > 4) {
                if (l.tokens[4] != "conj") syntax(l.number, "expected 'conj' after the sign");
                conj = parse_letters(l, 5);
            }
            cert.push_back(SlideFramed{checked_id(l, l.tokens[1]), checked_id(l, l.tokens[2]), parse_sign(l, l.tokens[3]),
                                       std::move(conj)});
        } else if (verb == "slide-dotted") {
            expect_arity(l, 4);
            cert.push_back(SlideDotted{checked_id(l, l.tokens[1]), checked_id(l, l.tokens[2]), parse_sign(l, l.tokens[3])});
        } else if (verb == "cancel") {
            expect_arity(l, 3);
            cert.push_back(CancelPair{checked_id(l, l.tokens[1]), checked_id(l, l.tokens[2])});
        } else if (verb == "create") {
            expect_arity(l, 3);
            cert.push_back(CreatePair{checked_id(l, l.tokens[1]), checked_id(l, l.tokens[2])});
        } else {
            syntax(l.number, "unknown move '" + verb + "'");
        }
    }
    return cert;
}

std::string print_certificate(const Certificate& cert) {
    std::string out;
    for (const Move& m : cert) out += to_string(m) + '\n';
    return out;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

Diagram read_diagram(const std::filesystem::path& path) { return parse_diagram(read_text(path)); }

Certificate read_certificate(const std::filesystem::path& path) { return parse_certificate(read_text(path)); }

Diagram induce(const Diagram& d4, int n, int k) {
    if (!d4.dim().is_source()) throw Error(ErrorCode::InvalidDim, "induce expects a 'dim 4 2 source' diagram");
    Diagram out{DimSpec(n, k)};
    for (const auto& e : d4.dotted()) out.insert_dotted(e.id);
    for (const auto& f : d4.framed()) {
        out.insert_framed(f.id, f.word.letters(), project_4d(f.framing.value(), out.group()));
    }
    return out;
}

// ---- bundled examples --------------------------------------------------------

namespace {

struct Param {
    std::string name;
    std::int64_t fallback;
};

struct Builder {
    Diagram d;

    void dotted(const std::string& id) { d.insert_dotted(id); }
    void framed(const std::string& id, const Letters& w, std::int64_t t) {
        d.insert_framed(id, w, normalize(d.group(), t));
    }
};

Letters word(std::initializer_list<std::pair<const char*, int>> letters) {
    Letters w;
    for (const auto& [id, sign] : letters) w.push_back(Letter{id, sign});
    return w;
}

Letters power(const std::string& id, std::int64_t p) {
    Letters w;
    for (std::int64_t i = 0; i < std::llabs(p); ++i) w.push_back(Letter{id, p < 0 ? -1 : 1});
    return w;
}

struct ExampleDef {
    std::string name;
    std::string summary;
    std::vector<Param> params;
    std::function<void(Builder&, const std::function<std::int64_t(const std::string&)>&)> build;
};

const std::vector<ExampleDef>& catalogue() {
    using Get = std::function<std::int64_t(const std::string&)>;
    static const std::vector<ExampleDef> defs = {
        {"K1", "one dotted circle, one framed circle with word e1 e1 e1^-1", {{"n", 5}, {"k", 2}},
         [](Builder& b, const Get&) {
             b.dotted("e1");
             b.framed("f1", word({{"e1", 1}, {"e1", 1}, {"e1", -1}}), 0);
         }},
        {"K2", "cancelling pair: framed circle through the dotted circle once", {{"n", 5}, {"k", 2}},
         [](Builder& b, const Get&) {
             b.dotted("e1");
             b.framed("f1", word({{"e1", 1}}), 0);
         }},
        {"K3", "two dotted circles, framed word e1 e2 e1 e2^-1 e1^-1 e2^-1", {{"n", 5}, {"k", 2}},
         [](Builder& b, const Get&) {
             b.dotted("e1");
             b.dotted("e2");
             b.framed("f1", word({{"e1", 1}, {"e2", 1}, {"e1", 1}, {"e2", -1}, {"e1", -1}, {"e2", -1}}), 0);
         }},
        {"K4", "two dotted circles, framed word e1 e2^-1", {{"n", 5}, {"k", 2}},
         [](Builder& b, const Get&) {
             b.dotted("e1");
             b.dotted("e2");
             b.framed("f1", word({{"e1", 1}, {"e2", -1}}), 0);
         }},
        {"K5", "two dotted circles, framed commutator e1 e2 e1^-1 e2^-1", {{"n", 5}, {"k", 2}},
         [](Builder& b, const Get&) {
             b.dotted("e1");
             b.dotted("e2");
             b.framed("f1", word({{"e1", 1}, {"e2", 1}, {"e1", -1}, {"e2", -1}}), 0);
         }},
        {"K6", "two dotted circles and an unlinked 0-framed circle", {{"n", 5}, {"k", 2}},
         [](Builder& b, const Get&) {
             b.dotted("e1");
             b.dotted("e2");
             b.framed("f1", {}, 0);
         }},
        {"Kt", "m unlinked framed circles, the first with framing t", {{"n", 5}, {"k", 2}, {"t", 1}, {"m", 1}},
         [](Builder& b, const Get& get) {
             for (std::int64_t i = 1; i <= get("m"); ++i) b.framed("f" + std::to_string(i), {}, i == 1 ? get("t") : 0);
         }},
        {"Kpab", "dotted circle, N1 passing p times with framing a, unlinked E2 with framing b",
         {{"n", 5}, {"k", 2}, {"p", 2}, {"a", 0}, {"b", 0}},
         [](Builder& b, const Get& get) {
             b.dotted("e1");
             b.framed("N1", power("e1", get("p")), get("a"));
             b.framed("E2", {}, get("b"));
         }},
        {"A6-circle", "dotted circle", {{"n", 5}}, [](Builder& b, const Get&) { b.dotted("e1"); }},
        {"A6-sphere", "0-framed unknot", {{"n", 5}}, [](Builder& b, const Get&) { b.framed("f1", {}, 0); }},
        {"A6-twisted", "1-framed unknot", {{"n", 5}}, [](Builder& b, const Get&) { b.framed("f1", {}, 1); }},
        {"A6-ball", "dotted circle with a t-framed circle through it once", {{"n", 5}, {"t", 0}},
         [](Builder& b, const Get& get) {
             b.dotted("e1");
             b.framed("f1", word({{"e1", 1}}), get("t"));
         }},
        {"A6-lens", "dotted circle with a 0-framed circle through it p times", {{"n", 5}, {"p", 2}},
         [](Builder& b, const Get& get) {
             b.dotted("e1");
             b.framed("f1", power("e1", get("p")), 0);
         }},
        {"A6-sum", "unlinked unknots with framings 0 and 1", {{"n", 5}},
         [](Builder& b, const Get&) {
             b.framed("f1", {}, 0);
             b.framed("f2", {}, 1);
         }},
        {"A6-twisted-sum", "unlinked unknots with framings 1 and 1", {{"n", 5}},
         [](Builder& b, const Get&) {
             b.framed("f1", {}, 1);
             b.framed("f2", {}, 1);
         }},
    };
    return defs;
}

const ExampleDef& find_example(const std::string& name) {
    for (const auto& def : catalogue())
        if (def.name == name) return def;
    throw Error(ErrorCode::UnknownExample, "no example named '" + name + "'");
}

std::pair<Diagram, std::string> build_example(const std::string& name, const ExampleParams& params) {
    const ExampleDef& def = find_example(name);
    std::map<std::string, std::int64_t> values;
    for (const Param& p : def.params) values[p.name] = p.fallback;
    for (const auto& [key, value] : params) {
        if (!values.count(key)) throw Error(ErrorCode::UnknownExample, "example '" + name + "' has no parameter '" + key + "'");
        values[key] = value;
    }
    const int n = static_cast<int>(values.at("n"));
    const int k = values.count("k") ? static_cast<int>(values.at("k")) : 2;
    Builder b{Diagram(DimSpec(n, k))};
    def.build(b, [&](const std::string& key) { return values.at(key); });

    std::string header = "# " + def.name + ": " + def.summary + "\n";
    if (def.params.size() > 1 || def.params.front().name != "n") {
        header += "# parameters:";
        for (const Param& p : def.params) header += " " + p.name + "=" + std::to_string(values.at(p.name));
        header += "\n";
    }
    return {std::move(b.d), header};
}

}  // namespace

std::vector<std::string> example_names() {
    std::vector<std::string> out;
    for (const auto& def : catalogue()) out.push_back(def.name);
    return out;
}

std::string example_text(const std::string& name, const ExampleParams& params) {
    auto [d, header] = build_example(name, params);
    return header + print_diagram(d);
}

Diagram example(const std::string& name, const ExampleParams& params) { return build_example(name, params).first; }

}  // namespace nkirby
