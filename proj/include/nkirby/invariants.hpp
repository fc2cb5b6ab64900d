#pragma once

#include "nkirby/diagram.hpp"
#include "nkirby/int_matrix.hpp"
#include "nkirby/moves.hpp"
#include "nkirby/reduce.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nkirby {

/// Z^rank + Z/d1 + ... + Z/ds with d1 | d2 | ... and every di >= 2.
struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<std::int64_t> torsion;

    bool is_trivial() const noexcept { return rank == 0 && torsion.empty(); }
    /// "0", "Z", "Z^2", "Z/4", "Z+Z/2+Z/4"
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Builds the canonical group from arbitrary invariant factors (0 counts as a
/// free summand, 1 is dropped). The factors need not form a chain.
AbelianGroup make_group(std::size_t rank, std::vector<std::int64_t> factors);

struct SmithForm {
    IntMatrix d;
    /// Set only when transforms were requested: u * m * v == d.
    std::optional<IntMatrix> u;
    std::optional<IntMatrix> v;

    /// Diagonal entries, min(rows, cols) of them.
    std::vector<std::int64_t> diagonal() const;
    std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = false);

/// Z^rows / im(m).
AbelianGroup cokernel(const IntMatrix& m);

/// Handle chain complex: C_0 = Z, C_{k-1} = Z^dotted, C_k = Z^framed with the
/// transposed linking matrix as the only non-zero boundary. Degrees 0, k-1
/// and k are always present; all others are trivial.
std::map<int, AbelianGroup> homology(const Diagram& d);

/// Throws RequiresK3.
AbelianGroup pi_km1(const Diagram& d);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Letters> relators;

    /// "<x1,x2 | x1x2^-1>"
    std::string to_string() const;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// One generator x_i per dotted component (in order), one relator per framed
/// word; trivial relators dropped. Throws RequiresK2.
Presentation pi_1_presentation(const Diagram& d);

AbelianGroup abelianization(const Presentation& p);

/// boundaries[i] is the map C_{i+1} -> C_i, a dim(C_i) x dim(C_{i+1}) matrix.
/// Throws NotAComplex on shape mismatch or when consecutive maps do not
/// compose to zero.
std::map<int, AbelianGroup> chain_homology(const std::vector<IntMatrix>& boundaries);

/// All-zero boundaries for chain groups of the given ranks.
std::vector<IntMatrix> zero_boundary_complex(const std::vector<std::size_t>& ranks);

struct BoundaryDescription {
    std::vector<std::string> lines;
    /// The (n-1)-dimensional diagram whose double is the boundary.
    std::optional<Diagram> double_base;
    /// The (n-2)-dimensional page of the open book.
    std::optional<Diagram> page;
};

BoundaryDescription boundary_description(const Diagram& d, const ReduceOptions& opts = {});

/// Source-4d diagrams only. Components are paired by position; words must
/// agree and framings be congruent mod 2. Throws StructureMismatch when the
/// component structure differs.
bool weak_equiv(const Diagram& d1, const Diagram& d2);

struct Diffeomorphic {
    Certificate first;
    Certificate second;
    Diagram common;
};

struct Distinguished {
    std::string invariant;
    std::string first;
    std::string second;
};

struct Unknown {
    std::string report;
};

using Verdict = std::variant<Diffeomorphic, Distinguished, Unknown>;

/// Throws DimMismatch.
Verdict equivalent(const Diagram& d1, const Diagram& d2, const ReduceOptions& opts = {});

std::string to_string(const Verdict& v);

}  // namespace nkirby
