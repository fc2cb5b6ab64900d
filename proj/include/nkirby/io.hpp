#pragma once

#include "nkirby/diagram.hpp"
#include "nkirby/moves.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nkirby {

/// Diagram text format (.kd):
///
///   dim 5 2                 (or `dim 4 2 source`)
///   dotted e1
///   framed f1 framing 0 word e1 e2^-1
///
/// `#` starts a comment. Throws ParseFailure with SyntaxError or
/// SemanticError and the offending line.
Diagram parse_diagram(std::string_view text);
std::string print_diagram(const Diagram& d);

/// Certificate text format (.kc), one move per line:
///   slide-framed f1 f2 + [conj e1 e2^-1]
///   slide-dotted e1 e2 -
///   cancel e1 f1
///   create e3 f3
Certificate parse_certificate(std::string_view text);
std::string print_certificate(const Certificate& cert);

/// Throws IoError.
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

Diagram read_diagram(const std::filesystem::path& path);
Certificate read_certificate(const std::filesystem::path& path);

/// The (n,k) diagram with the same components as a source-4d diagram.
/// Framings go through project_4d, words are renormalized for k.
Diagram induce(const Diagram& d4, int n, int k);

using ExampleParams = std::map<std::string, std::int64_t>;

std::vector<std::string> example_names();

/// File text for a bundled example, with descriptive comments. Unknown
/// parameters are rejected; throws UnknownExample for unknown names.
std::string example_text(const std::string& name, const ExampleParams& params = {});
Diagram example(const std::string& name, const ExampleParams& params = {});

}  // namespace nkirby
