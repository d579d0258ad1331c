#include <doctest.h>

#include <algorithm>
#include <set>

#include "cactus5/canonical.hpp"

using namespace cactus5;

namespace {

FirstCactus relabel_ovals(const FirstCactus& c, const std::vector<int>& perm) {
    std::vector<FirstEdge> edges = c.edges;
    for (auto& e : edges) {
        e.a = perm[static_cast<size_t>(e.a)];
        e.b = perm[static_cast<size_t>(e.b)];
    }
    return make_first_cactus(c.degree, std::move(edges));
}

SecondCactus relabel_smalls(const SecondCactus& c, const std::vector<int>& perm3) {
    std::vector<SecondEdge> edges = c.edges;
    for (auto& e : edges) {
        if (e.a != kBigOval) e.a = perm3[static_cast<size_t>(e.a - 1)] + 1;
        if (e.b != kBigOval) e.b = perm3[static_cast<size_t>(e.b - 1)] + 1;
    }
    return make_second_cactus(std::move(edges));
}

} // namespace

TEST_CASE("atlas counts match the closed forms") {
    CHECK(enumerate_first(3, Equivalence::fixed_labels).size() == 1);
    CHECK(enumerate_first(4, Equivalence::fixed_labels).size() == 4);
    CHECK(enumerate_first(5, Equivalence::fixed_labels).size() == 25);
    CHECK(enumerate_first(6, Equivalence::fixed_labels).size() == 216);

    CHECK(enumerate_first(3, Equivalence::with_rotation).size() == 1);
    CHECK(enumerate_first(4, Equivalence::with_rotation).size() == 2);
    CHECK(enumerate_first(5, Equivalence::with_rotation).size() == 8);

    CHECK(enumerate_second(Equivalence::fixed_labels).size() == 25);
    CHECK(enumerate_second(Equivalence::with_rotation).size() == 9);
}

TEST_CASE("first keys are invariant under oval relabeling and separate classes") {
    for (Equivalence eq : {Equivalence::fixed_labels, Equivalence::with_rotation}) {
        Atlas atlas = enumerate_first(5, eq);
        std::vector<int> perm = {0, 1, 2, 3, 4};
        do {
            for (const auto& cls : atlas.classes) {
                FirstCactus moved = relabel_ovals(cls.first(), perm);
                CHECK(canonical_key_first(moved, eq) == cls.canonical_key);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::set<std::string> keys;
        for (const auto& cls : atlas.classes) keys.insert(cls.canonical_key);
        CHECK(static_cast<int>(keys.size()) == atlas.size());
    }
}

TEST_CASE("rotated first keys absorb label shifts, fixed keys see them") {
    Atlas fixed = enumerate_first(5, Equivalence::fixed_labels);
    int moved_by_shift = 0;
    for (const auto& cls : fixed.classes) {
        FirstCactus shifted = rotate_first(cls.first());
        CHECK(canonical_key_first(shifted, Equivalence::with_rotation) ==
              canonical_key_first(cls.first(), Equivalence::with_rotation));
        if (canonical_key_first(shifted, Equivalence::fixed_labels) != cls.canonical_key) ++moved_by_shift;
    }
    // 8 rotated classes from 25 fixed ones: by Burnside one class is fixed by
    // the shift of order 4 and one more by its square
    CHECK(moved_by_shift > 0);
}

TEST_CASE("second keys are invariant under small relabeling, swap and rotation") {
    Atlas atlas = enumerate_second(Equivalence::with_rotation);
    std::vector<int> perm3 = {0, 1, 2};
    do {
        for (const auto& cls : atlas.classes) {
            SecondCactus moved = relabel_smalls(cls.second(), perm3);
            CHECK(canonical_key_second(moved, Equivalence::with_rotation) == cls.canonical_key);
            CHECK(canonical_key_second(swap_chambers(moved), Equivalence::with_rotation) == cls.canonical_key);
            CHECK(canonical_key_second(rotate_second(moved), Equivalence::with_rotation) == cls.canonical_key);
        }
    } while (std::next_permutation(perm3.begin(), perm3.end()));
}

TEST_CASE("fixed second keys absorb the swap but not rotation in general") {
    Atlas fixed = enumerate_second(Equivalence::fixed_labels);
    int rotation_fixed = 0;
    for (const auto& cls : fixed.classes) {
        CHECK(canonical_key_second(swap_chambers(cls.second()), Equivalence::fixed_labels) == cls.canonical_key);
        if (canonical_key_second(rotate_second(cls.second()), Equivalence::fixed_labels) == cls.canonical_key)
            ++rotation_fixed;
    }
    // 25 = 3*8 + 1: exactly one fixed class is invariant under rotation
    CHECK(rotation_fixed == 1);
}

TEST_CASE("representatives decode from their keys") {
    for (Equivalence eq : {Equivalence::fixed_labels, Equivalence::with_rotation}) {
        Atlas first = enumerate_first(5, eq);
        for (const auto& cls : first.classes) {
            FirstCactus rep = decode_first_key(cls.canonical_key);
            CHECK(canonical_key_first(rep, eq) == cls.canonical_key);
        }
        Atlas second = enumerate_second(eq);
        for (const auto& cls : second.classes) {
            SecondCactus rep = decode_second_key(cls.canonical_key);
            CHECK(canonical_key_second(rep, eq) == cls.canonical_key);
        }
    }
}

TEST_CASE("atlas lookup is total on its keys and rejects others") {
    Atlas atlas = enumerate_first(5, Equivalence::with_rotation);
    for (int i = 0; i < atlas.size(); ++i) CHECK(atlas.index_of(atlas.at(i).canonical_key) == i);
    CHECK_THROWS_AS(atlas.index_of("no such key"), Error);
    CHECK_THROWS_AS(atlas.at(atlas.size()), Error);
}

TEST_CASE("key text is hex") {
    Atlas atlas = enumerate_second(Equivalence::with_rotation);
    std::string hex = key_to_hex(atlas.at(0).canonical_key);
    CHECK(!hex.empty());
    CHECK(hex.find_first_not_of("0123456789abcdef") == std::string::npos);
}
