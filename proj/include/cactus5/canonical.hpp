#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cactus5/cactus.hpp"

// Canonical keys and class atlases.
//
// Two cacti are equivalent when an orientation-preserving re-identification
// of ovals carries one to the other; with_rotation additionally quotients by
// the simultaneous label shift l -> l+s (first type: mod degree-1, second
// type: the rotate_second action). Second-type equivalence always includes
// the global chamber swap.
//
// A canonical key is the lexicographically smallest byte encoding over the
// orbit; the canonical representative is decoded back from the key, so equal
// keys mean equal classes and every class has a stable concrete witness.

namespace cactus5 {

struct CactusClass {
    Family family = Family::first;
    Equivalence equivalence = Equivalence::with_rotation;
    std::string canonical_key;                          // raw bytes
    int atlas_index = -1;                               // rank in the enumerated atlas, -1 if unresolved
    std::variant<FirstCactus, SecondCactus> representative;

    const FirstCactus& first() const { return std::get<FirstCactus>(representative); }
    const SecondCactus& second() const { return std::get<SecondCactus>(representative); }
};

std::string canonical_key_first(const FirstCactus& c, Equivalence eq);
std::string canonical_key_second(const SecondCactus& c, Equivalence eq);

CactusClass canonical_first(const FirstCactus& c, Equivalence eq);
CactusClass canonical_second(const SecondCactus& c, Equivalence eq);

FirstCactus decode_first_key(const std::string& key);
SecondCactus decode_second_key(const std::string& key);

std::string key_to_hex(const std::string& key);

struct Atlas {
    Family family = Family::first;
    int degree = 5;
    Equivalence equivalence = Equivalence::with_rotation;
    std::vector<CactusClass> classes; // sorted by canonical_key; atlas_index == position

    int size() const { return static_cast<int>(classes.size()); }
    // Throws UnknownClassId when the key is not in this atlas.
    int index_of(const std::string& canonical_key) const;
    const CactusClass& at(int atlas_index) const;
};

// Exhaustive enumeration, deduplicated by canonical key, sorted by key.
// First type supports degree in [3,8]; counts are degree^(degree-3) for
// fixed labels. Second type is degree-5 only: 25 fixed, 9 rotated.
Atlas enumerate_first(int degree, Equivalence eq);
Atlas enumerate_second(Equivalence eq);

} // namespace cactus5
