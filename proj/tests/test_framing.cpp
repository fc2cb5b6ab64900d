#include "nkirby/error.hpp"
#include "nkirby/framing.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace nkirby;

TEST_CASE("framing group by k mod 8") {
    CHECK(framing_group(5, 2) == FramingGroup::Z2);
    CHECK(framing_group(7, 3) == FramingGroup::Trivial);
    CHECK(framing_group(9, 4) == FramingGroup::Z);
    CHECK(framing_group(DimSpec::source_4d()) == FramingGroup::Z);
    for (int k = 2; k <= 18; ++k) {
        for (int n = 2 * k + 1; n <= 2 * k + 4; ++n) {
            CHECK(to_string(framing_group(n, k)) == testsupport::bott_oracle(k));
        }
    }
}

TEST_CASE("dimension range") {
    CHECK_THROWS_AS(DimSpec(4, 2), Error);
    CHECK_THROWS_AS(DimSpec(6, 3), Error);
    CHECK_THROWS_AS(DimSpec(9, 1), Error);
    try {
        framing_group(4, 2);
        FAIL("expected InvalidDim");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidDim);
    }
    CHECK(DimSpec::source_4d().is_source());
    CHECK(DimSpec::source_4d().n() == 4);
    CHECK_FALSE(DimSpec(5, 2).is_source());
}

TEST_CASE("normalize") {
    CHECK(normalize(FramingGroup::Z2, 5).value() == 1);
    CHECK(normalize(FramingGroup::Z2, -3).value() == 1);
    CHECK(normalize(FramingGroup::Z2, -4).value() == 0);
    CHECK(normalize(FramingGroup::Trivial, 7).value() == 0);
    CHECK(normalize(FramingGroup::Z, -3).value() == -3);
}

TEST_CASE("group operations") {
    CHECK(add(normalize(FramingGroup::Z, 3), normalize(FramingGroup::Z, 5)).value() == 8);
    CHECK(add(normalize(FramingGroup::Z2, 1), normalize(FramingGroup::Z2, 1)).value() == 0);
    CHECK(neg(normalize(FramingGroup::Z2, 1)).value() == 1);
    CHECK(neg(normalize(FramingGroup::Z, 4)).value() == -4);
    try {
        add(normalize(FramingGroup::Z, 1), normalize(FramingGroup::Z2, 1));
        FAIL("expected GroupMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GroupMismatch);
    }
    const Framing big = normalize(FramingGroup::Z, INT64_MAX);
    CHECK_THROWS_AS(add(big, normalize(FramingGroup::Z, 1)), Error);
}

TEST_CASE("projection from integer framings") {
    CHECK(project_4d(2025, FramingGroup::Z2).value() == 1);
    CHECK(project_4d(-1, FramingGroup::Z2).value() == 1);
    CHECK(project_4d(0, FramingGroup::Z2).value() == 0);
    CHECK(project_4d(7, FramingGroup::Trivial).value() == 0);
    // homomorphism on Z2
    for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b)
            CHECK(project_4d(a + b, FramingGroup::Z2) ==
                  add(project_4d(a, FramingGroup::Z2), project_4d(b, FramingGroup::Z2)));
}
