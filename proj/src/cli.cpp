#include "nkirby/cli.hpp"

#include "nkirby/error.hpp"
#include "nkirby/invariants.hpp"
#include "nkirby/io.hpp"
#include "nkirby/reduce.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

namespace nkirby {

namespace {

struct Records {
    std::ostringstream os;
    void put(const std::string& key, const std::string& value) { os << key << '=' << value << '\n'; }
};

std::string torsion_list(const AbelianGroup& g) {
    std::string out;
    for (std::size_t i = 0; i < g.torsion.size(); ++i) out += (i ? "," : "") + std::to_string(g.torsion[i]);
    return out;
}

/// pi_{k-1} as a string: the abelian group when it is known to be abelian,
/// otherwise the presentation of the reduced diagram.
std::string pi_km1_string(const Diagram& d, const Diagram& reduced) {
    if (d.dim().k() >= 3) return pi_km1(d).to_string();
    if (reduced.dotted().size() <= 1) return homology(reduced).at(1).to_string();
    return pi_1_presentation(reduced).to_string();
}

struct Summary {
    std::map<int, AbelianGroup> h;
    std::string pi;
    std::optional<std::string> presentation;
    std::optional<std::string> normal_form;
    std::optional<std::string> name;
};

Summary summarize(const Diagram& d) {
    Summary s;
    s.h = homology(d);
    if (d.dim().k() == 2) s.presentation = pi_1_presentation(d).to_string();
    if (d.dim().is_source()) {
        s.pi = pi_km1_string(d, d);
        return s;
    }
    const Reduction r = reduce(d);
    s.pi = pi_km1_string(d, r.result);
    s.normal_form = to_string(r.form);
    s.name = recognize(d).to_string();
    return s;
}

}  // namespace

std::string invariant_records(const Diagram& d) {
    const int k = d.dim().k();
    const Summary s = summarize(d);
    Records rec;
    rec.put("dim.n", std::to_string(d.dim().n()));
    rec.put("dim.k", std::to_string(k));
    rec.put("h.0", s.h.at(0).to_string());
    rec.put("h.k-1.rank", std::to_string(s.h.at(k - 1).rank));
    rec.put("h.k-1.torsion", torsion_list(s.h.at(k - 1)));
    rec.put("h.k.rank", std::to_string(s.h.at(k).rank));
    rec.put("pi.k-1", s.pi);
    if (s.presentation) rec.put("pi.1", *s.presentation);
    if (s.normal_form) rec.put("normal_form", *s.normal_form);
    if (s.name) rec.put("name", *s.name);
    return rec.os.str();
}

namespace {

std::string invariant_text(const Diagram& d) {
    const int k = d.dim().k();
    const Summary s = summarize(d);
    std::ostringstream os;
    os << "dimension " << d.dim().to_string() << ", framing group " << to_string(d.group()) << '\n';
    for (const auto& [deg, g] : s.h) os << "H_" << deg << " = " << g.to_string() << '\n';
    os << "pi_" << k - 1 << " = " << s.pi << '\n';
    if (s.presentation) os << "presentation " << *s.presentation << '\n';
    if (s.normal_form) os << "normal form " << *s.normal_form << '\n';
    if (s.name) os << "name " << *s.name << '\n';
    for (const auto& line : boundary_description(d).lines) os << line << '\n';
    return os.str();
}

std::string verdict_records(const Diagram& d1, const Diagram& d2) {
    const Verdict v = equivalent(d1, d2);
    Records rec;
    if (const auto* dif = std::get_if<Diffeomorphic>(&v)) {
        rec.put("verdict", "diffeomorphic");
        rec.put("normal_form", to_string(reduce(dif->common).form));
        rec.put("name", recognize(dif->common).to_string());
        rec.put("moves.1", std::to_string(dif->first.size()));
        rec.put("moves.2", std::to_string(dif->second.size()));
    } else if (const auto* dis = std::get_if<Distinguished>(&v)) {
        rec.put("verdict", "distinguished");
        rec.put("invariant", dis->invariant);
        rec.put("value.1", dis->first);
        rec.put("value.2", dis->second);
    } else {
        rec.put("verdict", "unknown");
        rec.put("report", std::get<Unknown>(v).report);
    }
    return rec.os.str();
}

ExampleParams parse_params(const std::vector<std::string>& raw) {
    ExampleParams params;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("parameter", "expected key=value, got '" + item + "'");
        try {
            std::size_t used = 0;
            const std::string value = item.substr(eq + 1);
            const long long v = std::stoll(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
            params[item.substr(0, eq)] = v;
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("parameter", "'" + item + "' needs an integer value");
        }
    }
    return params;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kirby diagrams of high-dimensional handlebodies", "nkirby"};
    app.require_subcommand(1);

    std::function<void()> action;

    std::string file;
    auto* validate = app.add_subcommand("validate", "parse a diagram file and report its shape");
    validate->add_option("file", file, "diagram file")->required();
    validate->callback([&] {
        action = [&] {
            const Diagram d = read_diagram(file);
            out << "ok " << d.dim().to_string() << " group " << to_string(d.group()) << " dotted " << d.dotted().size()
                << " framed " << d.framed().size() << '\n';
        };
    });

    std::string cert_out;
    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a diagram to normal form");
    reduce_cmd->add_option("file", file, "diagram file")->required();
    reduce_cmd->add_option("--emit-cert", cert_out, "write the certificate here");
    reduce_cmd->callback([&] {
        action = [&] {
            const Reduction r = reduce(read_diagram(file));
            if (!cert_out.empty()) write_text(cert_out, print_certificate(r.certificate));
            out << "# normal form " << to_string(r.form) << '\n'
                << "# " << r.certificate.size() << " moves\n"
                << print_diagram(r.result);
        };
    });

    std::string format = "text";
    auto* inv = app.add_subcommand("invariants", "homology, pi_{k-1}, normal form, name and boundary");
    inv->add_option("file", file, "diagram file")->required();
    inv->add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));
    inv->callback([&] {
        action = [&] {
            const Diagram d = read_diagram(file);
            out << (format == "records" ? invariant_records(d) : invariant_text(d));
        };
    });

    std::string second;
    auto* equiv = app.add_subcommand("equiv", "decide whether two diagrams give diffeomorphic manifolds");
    equiv->add_option("a", file, "first diagram")->required();
    equiv->add_option("b", second, "second diagram")->required();
    equiv->add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));
    equiv->callback([&] {
        action = [&] {
            const Diagram d1 = read_diagram(file);
            const Diagram d2 = read_diagram(second);
            out << verdict_records(d1, d2);
            if (format == "text") out << "# " << to_string(equivalent(d1, d2)) << '\n';
        };
    });

    int target_n = 0;
    int target_k = 0;
    auto* induce_cmd = app.add_subcommand("induce", "induce an (n,k) diagram from a source 4-dimensional one");
    induce_cmd->add_option("file", file, "source diagram")->required();
    induce_cmd->add_option("--n", target_n, "target dimension")->required();
    induce_cmd->add_option("--k", target_k, "target handle index")->required();
    induce_cmd->callback([&] { action = [&] { out << print_diagram(induce(read_diagram(file), target_n, target_k)); }; });

    bool symbolic = false;
    bool compact = false;
    auto* recog = app.add_subcommand("recognize", "name the manifold");
    recog->add_option("file", file, "diagram file")->required();
    recog->add_flag("--symbolic", symbolic, "write ball dimensions in terms of n");
    recog->add_flag("--compact", compact, "collapse repeated summands");
    recog->callback([&] {
        action = [&] { out << recognize(read_diagram(file)).to_string(NameStyle{symbolic, compact}) << '\n'; };
    });

    std::string cert_in;
    auto* replay = app.add_subcommand("replay", "apply a certificate to a diagram");
    replay->add_option("file", file, "diagram file")->required();
    replay->add_option("--cert", cert_in, "certificate file")->required();
    replay->callback([&] {
        action = [&] { out << print_diagram(nkirby::apply(read_diagram(file), read_certificate(cert_in))); };
    });

    std::string example_name;
    std::vector<std::string> raw_params;
    std::string dir;
    auto* ex = app.add_subcommand("examples", "list or print the bundled example diagrams");
    ex->add_option("name", example_name, "example name");
    ex->add_option("params", raw_params, "key=value parameters");
    ex->add_option("--dir", dir, "write .kd files into this directory");
    ex->callback([&] {
        const ExampleParams params = parse_params(raw_params);
        action = [&, params] {
            if (example_name.empty() && dir.empty()) {
                for (const auto& n : example_names()) out << n << '\n';
                return;
            }
            const std::vector<std::string> names =
                example_name.empty() ? example_names() : std::vector<std::string>{example_name};
            for (const auto& n : names) {
                const std::string text = example_text(n, params);
                if (dir.empty()) {
                    out << text;
                } else {
                    std::filesystem::create_directories(dir);
                    const auto path = std::filesystem::path(dir) / (n + ".kd");
                    write_text(path, text);
                    out << path.string() << '\n';
                }
            }
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out, help_err;
        const int code = app.exit(e, help_out, help_err);
        if (code == 0) {
            out << help_out.str();
            return 0;
        }
        err << help_err.str();
        return 2;
    }

    try {
        action();
    } catch (const ParseFailure& e) {
        err << "error: " << e.name() << ": line " << e.line() << ": " << e.what() << '\n';
        return 1;
    } catch (const ReplayFailure& e) {
        err << "error: " << e.name() << ": move " << e.index() + 1 << ": " << error_name(e.cause()) << ": " << e.what()
            << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: IoError: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace nkirby
