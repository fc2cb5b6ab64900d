#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace nkirby {

/// Ambient dimension n and handle index k of a diagram.
///
/// Standard diagrams require k >= 2 and n >= 2k+1. The one exception is the
/// source-4d role, a (4,2) diagram with plain integer framings that is only
/// used as import material for `induce` and `weak_equiv`.
class DimSpec {
public:
    /// Throws Error(InvalidDim) outside the standard range.
    DimSpec(int n, int k);

    static DimSpec source_4d() noexcept;

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    bool is_source() const noexcept { return source_; }

    std::string to_string() const;

    friend bool operator==(const DimSpec&, const DimSpec&) = default;

private:
    DimSpec(int n, int k, bool source) noexcept : n_(n), k_(k), source_(source) {}

    int n_;
    int k_;
    bool source_ = false;
};

/// pi_{k-1}(O(n-k)) in the stable range.
enum class FramingGroup { Trivial, Z2, Z };

std::string to_string(FramingGroup group);

FramingGroup framing_group(const DimSpec& dim) noexcept;

/// Validating overload: throws Error(InvalidDim) when (n,k) is out of range.
FramingGroup framing_group(int n, int k);

/// An element of a framing group, always held in canonical form:
/// 0 for Trivial, {0,1} for Z2, any integer for Z.
class Framing {
public:
    Framing() = default;

    std::int64_t value() const noexcept { return value_; }
    FramingGroup group() const noexcept { return group_; }
    bool is_zero() const noexcept { return value_ == 0; }

    std::string to_string() const { return std::to_string(value_); }

    friend bool operator==(const Framing&, const Framing&) = default;

private:
    friend Framing normalize(FramingGroup group, std::int64_t x) noexcept;

    Framing(std::int64_t value, FramingGroup group) noexcept : value_(value), group_(group) {}

    std::int64_t value_ = 0;
    FramingGroup group_ = FramingGroup::Trivial;
};

Framing normalize(FramingGroup group, std::int64_t x) noexcept;

/// Group operations; both throw Error(GroupMismatch) / Error(Overflow).
Framing add(const Framing& a, const Framing& b);
Framing neg(const Framing& a);

/// Image of an integer (4,2) framing m under the stabilisation map
/// pi_1(O(2)) -> pi_{k-1}(O(n-k)). Identity on Z targets (see README).
Framing project_4d(std::int64_t m, FramingGroup target) noexcept;

}  // namespace nkirby
