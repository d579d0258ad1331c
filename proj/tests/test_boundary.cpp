#include <doctest.h>

#include <map>
#include <string>

#include "cactus5/boundary.hpp"
#include "cactus5/canonical.hpp"

using namespace cactus5;

namespace {

SecondCactus star_b(Chamber c0, Chamber c1, Chamber c2) {
    return make_second_cactus({{0, 0, 1, c0}, {1, 0, 2, c1}, {2, 0, 3, c2}});
}

int gluing_count(const std::vector<MarkedItem>& oval) {
    int n = 0;
    for (const auto& it : oval)
        if (it.kind == MarkedItem::Kind::gluing) ++n;
    return n;
}

} // namespace

TEST_CASE("first-type boundary walk lists every label on every oval") {
    FirstCactus chain = make_first_cactus(5, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 4}});
    PlaneCactus pc = boundary_walks(chain);

    REQUIRE(pc.ovals.size() == 5);
    for (int v = 0; v < 5; ++v) {
        REQUIRE(pc.ovals[v].size() == 4);
        for (int l = 0; l < 4; ++l) {
            CHECK(pc.ovals[v][l].label == l);
            CHECK(!pc.ovals[v][l].chamber.has_value());
        }
    }
    // interior ovals of the chain carry two gluings, the ends one
    CHECK(gluing_count(pc.ovals[0]) == 1);
    CHECK(gluing_count(pc.ovals[1]) == 2);
    CHECK(gluing_count(pc.ovals[4]) == 1);
    CHECK(pc.ovals[1][0].kind == MarkedItem::Kind::gluing);
    CHECK(pc.ovals[1][1].kind == MarkedItem::Kind::gluing);
    CHECK(pc.ovals[1][2].kind == MarkedItem::Kind::plain);
    CHECK(pc.ovals[1][0].edge == 0);
    CHECK(pc.ovals[1][2].edge == -1);
}

TEST_CASE("second-type boundary walk reads the hexagon counter-clockwise") {
    SecondCactus c = star_b(Chamber::x, Chamber::y, Chamber::x);
    PlaneCactus pc = boundary_walks(c);

    REQUIRE(pc.ovals.size() == 4);
    const auto& big = pc.ovals[kBigOval];
    REQUIRE(big.size() == 6);
    for (int pos = 0; pos < 6; ++pos) {
        CHECK(big[pos].label == pos % 3);
        REQUIRE(big[pos].chamber.has_value());
        CHECK(*big[pos].chamber == (pos < 3 ? Chamber::x : Chamber::y));
    }
    // edge 0 sits at (x,0), edge 1 at (y,1), edge 2 at (x,2)
    CHECK(big[0].kind == MarkedItem::Kind::gluing);
    CHECK(big[0].edge == 0);
    CHECK(big[4].kind == MarkedItem::Kind::gluing);
    CHECK(big[4].edge == 1);
    CHECK(big[2].kind == MarkedItem::Kind::gluing);
    CHECK(big[2].edge == 2);
    CHECK(big[1].kind == MarkedItem::Kind::plain);
    CHECK(big[3].kind == MarkedItem::Kind::plain);
    CHECK(big[5].kind == MarkedItem::Kind::plain);

    for (int v = 1; v < 4; ++v) {
        REQUIRE(pc.ovals[v].size() == 4);
        CHECK(pc.ovals[v].back().kind == MarkedItem::Kind::inner_dot);
        CHECK(pc.ovals[v].back().label == 3);
        CHECK(gluing_count(pc.ovals[v]) == 1);
    }
    CHECK(pc.ovals[1][0].kind == MarkedItem::Kind::gluing);
    CHECK(pc.ovals[2][1].kind == MarkedItem::Kind::gluing);
    CHECK(pc.ovals[3][2].kind == MarkedItem::Kind::gluing);
}

TEST_CASE("first-type shapes") {
    FirstCactus chain = make_first_cactus(5, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 4}});
    ShapeDescriptor d = shape_descriptor(chain);
    CHECK(d.kind == ShapeKind::chain);
    CHECK(d.text == "chain(0,1,2,3)");

    // label word is read from the end that gives the smaller sequence
    FirstCactus rev = make_first_cactus(5, {{3, 0, 1}, {2, 1, 2}, {1, 2, 3}, {0, 3, 4}});
    CHECK(shape_descriptor(rev).text == "chain(0,1,2,3)");

    FirstCactus star = make_first_cactus(5, {{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 0, 4}});
    CHECK(shape_descriptor(star).kind == ShapeKind::star);
    CHECK(shape_descriptor(star).text == "star");

    FirstCactus tee = make_first_cactus(5, {{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 3, 4}});
    ShapeDescriptor dt = shape_descriptor(tee);
    CHECK(dt.kind == ShapeKind::t_shape);
    CHECK(dt.text == "T(offset=1)");

    FirstCactus tree6 =
        make_first_cactus(6, {{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 3, 4}, {4, 3, 5}});
    ShapeDescriptor d6 = shape_descriptor(tree6);
    CHECK(d6.kind == ShapeKind::tree);
    CHECK(d6.text == "tree(degrees=3,3,1,1,1,1)");
}

TEST_CASE("second-type shapes normalize the chamber word over the swap") {
    CHECK(shape_descriptor(star_b(Chamber::x, Chamber::y, Chamber::x)).text == "star-B(xyx)");
    CHECK(shape_descriptor(star_b(Chamber::y, Chamber::x, Chamber::y)).text == "star-B(xyx)");
    CHECK(shape_descriptor(star_b(Chamber::x, Chamber::x, Chamber::x)).text == "star-B(xxx)");
    CHECK(shape_descriptor(star_b(Chamber::x, Chamber::x, Chamber::x)).kind == ShapeKind::star_big);

    SecondCactus at_small = make_second_cactus(
        {{0, 0, 1, Chamber::x}, {1, 1, 2, std::nullopt}, {2, 1, 3, std::nullopt}});
    CHECK(shape_descriptor(at_small).kind == ShapeKind::star_small);
    CHECK(shape_descriptor(at_small).text == "star-at-small");

    SecondCactus at_end = make_second_cactus(
        {{0, 0, 1, Chamber::x}, {1, 1, 2, std::nullopt}, {2, 2, 3, std::nullopt}});
    CHECK(shape_descriptor(at_end).kind == ShapeKind::big_at_end);
    CHECK(shape_descriptor(at_end).text == "big-at-end(0,1,2)");

    SecondCactus in_middle = make_second_cactus(
        {{0, 0, 1, Chamber::x}, {1, 0, 2, Chamber::y}, {2, 2, 3, std::nullopt}});
    ShapeDescriptor dm = shape_descriptor(in_middle);
    CHECK(dm.kind == ShapeKind::big_in_middle);
    CHECK(dm.text == "big-in-middle(0x,1y,2)");

    SecondCactus swapped = make_second_cactus(
        {{0, 0, 1, Chamber::y}, {1, 0, 2, Chamber::x}, {2, 2, 3, std::nullopt}});
    CHECK(shape_descriptor(swapped).text == "big-in-middle(0x,1y,2)");
}

TEST_CASE("shape census over the rotated atlases") {
    Atlas first = enumerate_first(5, Equivalence::with_rotation);
    std::map<std::string, int> cf = shape_census(first);
    CHECK(cf.size() == 3);
    CHECK(cf.at("chain") == 4);
    CHECK(cf.at("T-shape") == 3);
    CHECK(cf.at("star") == 1);

    Atlas second = enumerate_second(Equivalence::with_rotation);
    std::map<std::string, int> cs = shape_census(second);
    CHECK(cs.size() == 4);
    CHECK(cs.at("star-B") == 2);
    CHECK(cs.at("star-at-small") == 1);
    CHECK(cs.at("big-at-end") == 2);
    CHECK(cs.at("big-in-middle") == 4);
}
