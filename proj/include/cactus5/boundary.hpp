#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cactus5/cactus.hpp"

namespace cactus5 {

// Marked points read counter-clockwise along each oval's border, plus one
// interior dot per small oval in the second family (the preimage of the
// inner critical value, reported with label 3).

struct MarkedItem {
    enum class Kind { plain, gluing, inner_dot };
    Kind kind = Kind::plain;
    int label = 0;
    std::optional<Chamber> chamber; // set only on big-oval items
    int edge = -1;                  // gluing target edge (== its label), -1 otherwise
};

struct PlaneCactus {
    Family family = Family::first;
    int degree = 5;
    std::vector<std::vector<MarkedItem>> ovals; // second family: index 0 is B
};

PlaneCactus boundary_walks(const FirstCactus& c);
PlaneCactus boundary_walks(const SecondCactus& c);

// Coarse shape classification.
enum class ShapeKind {
    chain,          // first: path
    t_shape,        // first, degree 5: degrees (3,2,1,1,1)
    star,           // first: one center oval of degree n-1 (n >= 4)
    tree,           // first, degree >= 6: anything else
    star_big,       // second: B carries all three gluings
    star_small,     // second: a small oval carries all three
    big_at_end,     // second: path with B at an end
    big_in_middle,  // second: path with B inside
};

struct ShapeDescriptor {
    ShapeKind kind;
    std::string text; // deterministic human-readable form, e.g. "chain(0,1,2,3)"
};

const char* shape_kind_name(ShapeKind k);

ShapeDescriptor shape_descriptor(const FirstCactus& c);
ShapeDescriptor shape_descriptor(const SecondCactus& c);

// Shape kind -> class count over an atlas.
std::map<std::string, int> shape_census(const class Atlas& atlas);

} // namespace cactus5
