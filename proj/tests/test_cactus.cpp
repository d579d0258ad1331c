#include <doctest.h>

#include "cactus5/cactus.hpp"

using namespace cactus5;

namespace {

SecondCactus star_b(Chamber c0, Chamber c1, Chamber c2) {
    return make_second_cactus({{0, 0, 1, c0}, {1, 0, 2, c1}, {2, 0, 3, c2}});
}

} // namespace

TEST_CASE("first cactus construction validates") {
    CHECK_NOTHROW(make_first_cactus(5, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 4}}));

    CHECK_THROWS_AS(make_first_cactus(2, {{0, 0, 1}}), Error);
    CHECK_THROWS_AS(make_first_cactus(9, {}), Error);

    auto code = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::BadInput;
    };
    CHECK(code([] { make_first_cactus(5, {{0, 0, 1}, {1, 1, 2}, {2, 2, 0}, {3, 3, 4}}); }) == Errc::NotATree);
    CHECK(code([] { make_first_cactus(5, {{0, 0, 1}, {0, 1, 2}, {2, 2, 3}, {3, 3, 4}}); }) == Errc::BadLabels);
    CHECK(code([] { make_first_cactus(5, {{0, 0, 1}, {1, 1, 2}, {4, 2, 3}, {3, 3, 4}}); }) == Errc::BadLabels);
    CHECK(code([] { make_first_cactus(5, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 4, 4}}); }) == Errc::SelfLoop);
    CHECK(code([] { make_first_cactus(5, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 7}}); }) == Errc::BadLabels);
}

TEST_CASE("first edges are normalized and sorted by label") {
    FirstCactus c = make_first_cactus(4, {{2, 3, 1}, {0, 1, 0}, {1, 2, 1}});
    CHECK(c.edges[0].label == 0);
    CHECK(c.edges[0].a == 0);
    CHECK(c.edges[0].b == 1);
    CHECK(c.edges[2].label == 2);
    CHECK(c.edges[2].a == 1);
    CHECK(c.edges[2].b == 3);
}

TEST_CASE("second cactus construction validates") {
    CHECK_NOTHROW(star_b(Chamber::x, Chamber::y, Chamber::x));
    CHECK_NOTHROW(make_second_cactus({{0, 0, 1, Chamber::x}, {1, 1, 2, std::nullopt}, {2, 2, 3, std::nullopt}}));

    auto code = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::BadInput;
    };
    // a chamber tag is exactly for edges at the big oval
    CHECK(code([] { make_second_cactus({{0, 0, 1, Chamber::x}, {1, 1, 2, Chamber::y}, {2, 2, 3, std::nullopt}}); }) ==
          Errc::BadLabels);
    CHECK(code([] { make_second_cactus({{0, 0, 1, std::nullopt}, {1, 1, 2, std::nullopt}, {2, 2, 3, std::nullopt}}); }) ==
          Errc::BadLabels);
    CHECK(code([] { make_second_cactus({{0, 0, 0, Chamber::x}, {1, 0, 2, Chamber::y}, {2, 2, 3, std::nullopt}}); }) ==
          Errc::BigSelfGluing);
    CHECK(code([] { make_second_cactus({{0, 0, 1, Chamber::x}, {1, 0, 2, Chamber::y}, {2, 3, 3, std::nullopt}}); }) ==
          Errc::SelfLoop);
    CHECK(code([] { make_second_cactus({{0, 0, 1, Chamber::x}, {1, 0, 2, Chamber::y}, {2, 1, 2, std::nullopt}}); }) ==
          Errc::NotATree);
}

TEST_CASE("hexagon helpers agree") {
    for (int pos = 0; pos < 6; ++pos) CHECK(hex_position(hex_chamber(pos), hex_label(pos)) == pos);
    CHECK(hex_position(Chamber::x, 0) == 0);
    CHECK(hex_position(Chamber::y, 0) == 3);
}

TEST_CASE("label rotation of the second type is the hexagon shift by four") {
    // (c, l) -> retagged chamber with l+1 must equal position + 4 mod 6
    SecondCactus c = star_b(Chamber::x, Chamber::y, Chamber::y);
    SecondCactus r = rotate_second(c);
    for (const auto& e : c.edges) {
        int pos = hex_position(*e.chamber, e.label);
        int want = (pos + 4) % 6;
        for (const auto& f : r.edges)
            if (f.a == e.a && f.b == e.b) {
                CHECK(hex_position(*f.chamber, f.label) == want);
            }
    }
}

TEST_CASE("rotation has order three, swap commutes") {
    SecondCactus c = star_b(Chamber::x, Chamber::x, Chamber::y);
    SecondCactus r3 = rotate_second(rotate_second(rotate_second(c)));
    CHECK(r3.edges == c.edges);

    SecondCactus sw2 = swap_chambers(swap_chambers(c));
    CHECK(sw2.edges == c.edges);

    SecondCactus a = swap_chambers(rotate_second(c));
    SecondCactus b = rotate_second(swap_chambers(c));
    CHECK(a.edges == b.edges);
}

TEST_CASE("first rotation shifts labels cyclically") {
    FirstCactus c = make_first_cactus(5, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 4}});
    FirstCactus r = rotate_first(c);
    // edge (0,1) had label 0, now 1; edge (3,4) had 3, wraps to 0
    for (const auto& e : r.edges) {
        if (e.a == 0 && e.b == 1) CHECK(e.label == 1);
        if (e.a == 3 && e.b == 4) CHECK(e.label == 0);
    }
    FirstCactus r4 = rotate_first(rotate_first(rotate_first(rotate_first(c))));
    CHECK(r4.edges == c.edges);
}
