#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cactus5/boundary.hpp"
#include "cactus5/canonical.hpp"
#include "cactus5/monodromy.hpp"

using namespace cactus5;

namespace {

Perm t(int a, int b) { return Perm::transposition(5, a, b); }

Perm product(const MonodromyTuple& mt) {
    Perm p = Perm::identity(mt.parts.front().size());
    for (const Perm& g : mt.parts) p = compose(p, g);
    return p;
}

} // namespace

TEST_CASE("permutation primitives") {
    const Perm rho = Perm::reference_cycle(5);
    CHECK(rho.cycle_string() == "(1 2 3 4 5)");
    CHECK(cycle_type(rho) == std::vector<int>{5});
    CHECK(compose(rho, rho.inverse()) == Perm::identity(5));

    // left-to-right: apply the first factor first
    Perm c = compose(t(1, 2), t(2, 3));
    CHECK(c.apply(1) == 3);
    CHECK(c.cycle_string() == "(1 3 2)");
    CHECK(cycle_type(c) == std::vector<int>{3, 1, 1});

    CHECK(conjugate(t(1, 2), rho) == t(2, 3));
    CHECK(conjugate(t(4, 5), rho) == t(1, 5));

    CHECK(t(2, 4).is_transposition());
    CHECK(!rho.is_transposition());
    CHECK(t(2, 4).transposed_points() == std::pair<int, int>{2, 4});
    CHECK_THROWS_AS(Perm::transposition(5, 3, 3), Error);
    CHECK_THROWS_AS(rho.transposed_points(), Error);
}

TEST_CASE("tuple enumeration counts") {
    CHECK(enumerate_tuples(3, TupleKind::quadrangle).size() == 3);
    CHECK(enumerate_tuples(4, TupleKind::quadrangle).size() == 16);
    CHECK(enumerate_tuples(5, TupleKind::quadrangle).size() == 125);
    CHECK(enumerate_tuples(5, TupleKind::triangle).size() == 125);
    CHECK_THROWS_AS(enumerate_tuples(2, TupleKind::quadrangle), Error);
    CHECK_THROWS_AS(enumerate_tuples(8, TupleKind::quadrangle), Error);

    for (const auto& mt : enumerate_tuples(5, TupleKind::quadrangle))
        REQUIRE(product(mt) == Perm::reference_cycle(5));
}

TEST_CASE("tuples map to first-type cacti") {
    MonodromyTuple star{TupleKind::quadrangle, {t(1, 2), t(1, 3), t(1, 4), t(1, 5)}};
    CHECK(product(star) == Perm::reference_cycle(5));
    FirstCactus cs = tuple_to_first(star);
    CHECK(shape_descriptor(cs).text == "star");

    MonodromyTuple chain{TupleKind::quadrangle, {t(4, 5), t(3, 4), t(2, 3), t(1, 2)}};
    CHECK(product(chain) == Perm::reference_cycle(5));
    CHECK(shape_descriptor(tuple_to_first(chain)).text == "chain(0,1,2,3)");

    MonodromyTuple bad{TupleKind::quadrangle, {t(1, 2), Perm::reference_cycle(5), t(1, 4), t(1, 5)}};
    CHECK_THROWS_AS(tuple_to_first(bad), Error);
}

TEST_CASE("conjugation by the reference cycle preserves the fixed-label class") {
    const Perm rho = Perm::reference_cycle(5);
    for (const auto& mt : enumerate_tuples(5, TupleKind::quadrangle)) {
        std::string key = canonical_key_first(tuple_to_first(mt), Equivalence::fixed_labels);
        MonodromyTuple cj = conjugate_tuple(mt, rho);
        CHECK(product(cj) == rho);
        CHECK(canonical_key_first(tuple_to_first(cj), Equivalence::fixed_labels) == key);
    }
}

TEST_CASE("each fixed-label class is hit by exactly five tuples") {
    std::map<std::string, int> hits;
    for (const auto& mt : enumerate_tuples(5, TupleKind::quadrangle))
        ++hits[canonical_key_first(tuple_to_first(mt), Equivalence::fixed_labels)];
    CHECK(hits.size() == 25);
    for (const auto& [key, count] : hits) CHECK(count == 5);
}

TEST_CASE("triangle tuples map to second-type cacti") {
    // delta = (1 3); the border touching sheet 1 gets chamber x, the one
    // touching sheet 3 gets y
    MonodromyTuple mt{TupleKind::triangle, {t(1, 2), t(4, 5), t(3, 4), t(1, 3)}};
    REQUIRE(product(mt) == Perm::reference_cycle(5));
    SecondCactus sc = tuple_to_second(mt);
    REQUIRE(sc.edges.size() == 3);
    CHECK(sc.edges[0].a == kBigOval);
    CHECK(sc.edges[0].b == 1);
    CHECK(*sc.edges[0].chamber == Chamber::x);
    CHECK(sc.edges[1].a == 2);
    CHECK(sc.edges[1].b == 3);
    CHECK(!sc.edges[1].chamber.has_value());
    CHECK(sc.edges[2].a == kBigOval);
    CHECK(sc.edges[2].b == 2);
    CHECK(*sc.edges[2].chamber == Chamber::y);
    CHECK(shape_descriptor(sc).text == "big-in-middle(0x,2y,1)");

    // delta = (1 2): the path away from B reads labels 2,1,0
    MonodromyTuple path{TupleKind::triangle, {t(4, 5), t(3, 4), t(2, 3), t(1, 2)}};
    REQUIRE(product(path) == Perm::reference_cycle(5));
    CHECK(shape_descriptor(tuple_to_second(path)).text == "big-at-end(2,1,0)");

    MonodromyTuple self{TupleKind::triangle, {t(1, 3), t(2, 4), t(2, 4), t(1, 3)}};
    CHECK_THROWS_AS(tuple_to_second(self), Error);
    MonodromyTuple quad{TupleKind::quadrangle, {t(1, 2), t(1, 3), t(1, 4), t(1, 5)}};
    CHECK_THROWS_AS(tuple_to_second(quad), Error);
}

TEST_CASE("cyclic slot rotation with conjugation preserves the product") {
    const Perm rho4 = Perm::reference_cycle(4);
    for (const auto& mt : enumerate_tuples(4, TupleKind::quadrangle)) {
        MonodromyTuple rot;
        rot.kind = mt.kind;
        for (size_t i = 1; i < mt.parts.size(); ++i) rot.parts.push_back(mt.parts[i]);
        rot.parts.push_back(conjugate(mt.parts[0], rho4));
        CHECK(product(rot) == rho4);
    }
}

TEST_CASE("oracle report matches the tree enumeration") {
    OracleReport r3 = oracle_report(3);
    CHECK(r3.tuple_count == 3);
    CHECK(r3.class_count == 1);
    CHECK(r3.per_class == 3);
    CHECK(r3.agree);

    OracleReport r5 = oracle_report(5);
    CHECK(r5.tuple_count == 125);
    CHECK(r5.class_count == 25);
    CHECK(r5.per_class == 5);
    CHECK(r5.tree_fixed_count == 25);
    CHECK(r5.tree_rotated_count == 8);
    CHECK(r5.agree);

    OracleReport r6 = oracle_report(6);
    CHECK(r6.tuple_count == 1296);
    CHECK(r6.class_count == 216);
    CHECK(r6.per_class == 6);
    CHECK(r6.agree);

    CHECK_THROWS_AS(oracle_report(7), Error);
}
