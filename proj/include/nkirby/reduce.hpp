#pragma once

#include "nkirby/diagram.hpp"
#include "nkirby/moves.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace nkirby {

/// K(t): one t-framed unknot and m-1 zero-framed unknots, nothing dotted.
struct SimpleFamily {
    std::size_t m = 0;
    Framing t;

    friend bool operator==(const SimpleFamily&, const SimpleFamily&) = default;
};

/// K(p;a,b): one dotted component, N1 passing p times with framing a_fr,
/// E2 unlinked with framing b, and m-2 unlinked zero-framed components.
struct DottedFamily {
    std::int64_t p = 0;
    Framing a_fr;
    Framing b;
    std::size_t m = 0;

    friend bool operator==(const DottedFamily&, const DottedFamily&) = default;
};

/// Anything the complete reducers do not cover; holds the simplified diagram.
struct GeneralForm {
    Diagram diagram;
};

using NormalForm = std::variant<SimpleFamily, DottedFamily, GeneralForm>;

/// Structural equality; General forms compare by canonical diagram equality.
bool same_normal_form(const NormalForm& a, const NormalForm& b);
std::string to_string(const NormalForm& nf);

struct Reduction {
    NormalForm form;
    Certificate certificate;
    Diagram result;
};

struct ReduceOptions {
    /// Candidate slides examined per step by the k = 2 simplifier.
    std::size_t slide_budget = 64;
};

/// No dotted components: Euclid on the framings. Throws NotSimpleFamily.
Reduction reduce_simple(const Diagram& d);

/// Exactly one dotted component: Euclid on the pass counts, then on the
/// framings of the unlinked components. Throws NotOneDottedFamily.
Reduction reduce_one_dotted(const Diagram& d, const ReduceOptions& opts = {});

/// Smith-normal-form reduction by slides for k >= 3 (complete); best-effort
/// simplification for k = 2. Never fails on a valid diagram.
Reduction reduce_general(const Diagram& d, const ReduceOptions& opts = {});

/// Picks the reducer by the number of dotted components.
Reduction reduce(const Diagram& d, const ReduceOptions& opts = {});

enum class FactorKind {
    DottedHandle,   // S^{k-1} x B^{n-k+1}
    TrivialBundle,  // S^k x B^{n-k}
    TwistedBundle,  // non-trivial B^{n-k}-bundle over S^k
    LensProduct,    // L(p,1)° x B^{n-3}, k = 2
    Residual,       // one dotted handle with a p-fold k-handle, p >= 2
    Unrecognized,
};

struct Factor {
    FactorKind kind = FactorKind::Unrecognized;
    std::int64_t p = 0;
    std::int64_t twist = 0;
    std::string detail;

    friend bool operator==(const Factor&, const Factor&) = default;
};

struct NameStyle {
    /// Print ball dimensions in terms of n (B^{n-2}) instead of numbers.
    bool symbolic_n = false;
    /// Collapse repeated factors into ♮^c(X).
    bool compact = false;
};

/// Boundary connected sum of factors; no factors means B^n.
struct ManifoldName {
    int n = 0;
    int k = 0;
    FramingGroup group = FramingGroup::Trivial;
    std::vector<Factor> factors;

    std::string to_string(const NameStyle& style = {}) const;

    friend bool operator==(const ManifoldName&, const ManifoldName&) = default;
};

ManifoldName recognize(const NormalForm& nf, const DimSpec& dim);

/// Names a diagram directly when it already splits into recognisable pieces,
/// otherwise names its normal form.
ManifoldName recognize(const Diagram& d, const ReduceOptions& opts = {});

}  // namespace nkirby
