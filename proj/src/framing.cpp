#include "nkirby/framing.hpp"

#include "nkirby/error.hpp"

#include <limits>

namespace nkirby {

namespace {

bool in_range(int n, int k) noexcept { return k >= 2 && n >= 2 * k + 1; }

}  // namespace

DimSpec::DimSpec(int n, int k) : n_(n), k_(k) {
    if (!in_range(n, k)) {
        throw Error(ErrorCode::InvalidDim,
                    "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) +
                        ") requires k >= 2 and n >= 2k+1");
    }
}

DimSpec DimSpec::source_4d() noexcept { return DimSpec(4, 2, true); }

std::string DimSpec::to_string() const {
    std::string s = "(" + std::to_string(n_) + "," + std::to_string(k_) + ")";
    if (source_) s += " source";
    return s;
}

std::string to_string(FramingGroup group) {
    switch (group) {
        case FramingGroup::Trivial: return "0";
        case FramingGroup::Z2: return "Z/2";
        case FramingGroup::Z: return "Z";
    }
    return "?";
}

FramingGroup framing_group(const DimSpec& dim) noexcept {
    if (dim.is_source()) return FramingGroup::Z;
    switch (dim.k() % 8) {
        case 1:
        case 2: return FramingGroup::Z2;
        case 0:
        case 4: return FramingGroup::Z;
        default: return FramingGroup::Trivial;
    }
}

FramingGroup framing_group(int n, int k) { return framing_group(DimSpec(n, k)); }

Framing normalize(FramingGroup group, std::int64_t x) noexcept {
    switch (group) {
        case FramingGroup::Trivial: return Framing(0, group);
        case FramingGroup::Z2: return Framing(((x % 2) + 2) % 2, group);
        case FramingGroup::Z: return Framing(x, group);
    }
    return Framing(0, group);
}

Framing add(const Framing& a, const Framing& b) {
    if (a.group() != b.group()) {
        throw Error(ErrorCode::GroupMismatch,
                    "cannot add framings in " + to_string(a.group()) + " and " + to_string(b.group()));
    }
    std::int64_t sum = 0;
    if (__builtin_add_overflow(a.value(), b.value(), &sum)) {
        throw Error(ErrorCode::Overflow, "framing addition overflows");
    }
    return normalize(a.group(), sum);
}

Framing neg(const Framing& a) {
    if (a.value() == std::numeric_limits<std::int64_t>::min()) {
        throw Error(ErrorCode::Overflow, "framing negation overflows");
    }
    return normalize(a.group(), -a.value());
}

Framing project_4d(std::int64_t m, FramingGroup target) noexcept { return normalize(target, m); }

}  // namespace nkirby
