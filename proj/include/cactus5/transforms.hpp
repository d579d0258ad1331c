#pragma once

#include <array>

#include "cactus5/canonical.hpp"

// Transformation 1 takes a degree-5 first-type cactus to a second-type one by
// contracting the gluing with a chosen label k into the big oval; the three
// survivors are relabeled (k+1,k+2,k+3) -> (0,1,2) counter-clockwise, and an
// edge formerly attached to one endpoint of the contracted gluing lands in
// chamber x, to the other endpoint in chamber y (the swap absorbs the choice).
//
// Transformation 2 splits the big oval along a counter-clockwise gap between
// adjacent boundary labels. Cutting in gap g separates the hexagon points
// into the two arcs of three consecutive positions on either side of the two
// label-g / label-(g+1) gaps; each new oval inherits the attachments of its
// arc and the two are joined by a fresh gluing whose label d slots into the
// gap: (2,0): (d,0,1,2) -> (0,1,2,3); (0,1): (0,d,1,2) -> (0,1,2,3);
// (1,2): (0,1,d,2) -> (0,1,2,3).
//
// t2(t1(w,k), gap20) recovers w up to the label rotation by k, which the
// with_rotation canonical form absorbs.

namespace cactus5 {

enum class Gap : int { g01 = 0, g12 = 1, g20 = 2 };

constexpr std::array<Gap, 3> kGapsCcw = {Gap::g20, Gap::g01, Gap::g12};

inline std::pair<int, int> gap_labels(Gap g) {
    const int j = static_cast<int>(g);
    return {j, (j + 1) % 3};
}
const char* gap_name(Gap g); // "(2,0)" etc.

SecondCactus t1(const FirstCactus& w, int k);
FirstCactus t2(const SecondCactus& b, Gap g);

// Class-level wrappers; inputs and outputs are with_rotation canonical.
CactusClass t1_class(const CactusClass& w, int k);
CactusClass t2_class(const CactusClass& b, Gap g);

// All four (resp. three) images in the counter-clockwise move order
// k = 0,1,2,3 (resp. gaps (2,0),(0,1),(1,2)), as atlas indices.
std::array<int, 4> t1_star(const CactusClass& w, const Atlas& second_atlas);
std::array<int, 3> t2_star(const CactusClass& b, const Atlas& first_atlas);

} // namespace cactus5
