#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cactus5/error.hpp"

// Plane cacti of two kinds.
//
// First type: n ovals glued pairwise at marked points, one gluing per label in
// {0..n-2}, the gluing relation forming a tree. Every oval carries the full
// cyclic run of marked points 0..n-2, so the plane embedding is determined by
// the abstract edge-labeled tree and we store only that.
//
// Second type (degree 5 only): one big oval B and three small ovals, three
// gluings labeled 0..2 forming a tree on the four ovals. B's border carries
// six marked points in cyclic order (x,0)(x,1)(x,2)(y,0)(y,1)(y,2); a gluing
// incident to B occupies the (chamber,label) point given by its chamber tag.

namespace cactus5 {

enum class Family { first, second };
enum class Equivalence { fixed_labels, with_rotation };
enum class Chamber : int { x = 0, y = 1 };

inline char chamber_letter(Chamber c) { return c == Chamber::x ? 'x' : 'y'; }

constexpr int kMinDegree = 3;
constexpr int kMaxDegree = 8;

struct FirstEdge {
    int label = 0; // in {0..degree-2}, unique per cactus
    int a = 0;     // oval ids in {0..degree-1}
    int b = 0;
    bool operator==(const FirstEdge&) const = default;
};

struct FirstCactus {
    int degree = 5;
    std::vector<FirstEdge> edges; // sorted by label; edges[l].label == l
};

struct SecondEdge {
    int label = 0; // in {0..2}, unique per cactus
    int a = 0;     // oval ids in {0..3}; 0 is the big oval B
    int b = 0;
    std::optional<Chamber> chamber; // present iff the edge touches B
    bool operator==(const SecondEdge&) const = default;
};

struct SecondCactus {
    std::vector<SecondEdge> edges; // sorted by label; edges[l].label == l
};

constexpr int kBigOval = 0;

// Hexagon positions on the big oval, counter-clockwise:
//   h0=(x,0) h1=(x,1) h2=(x,2) h3=(y,0) h4=(y,1) h5=(y,2)
inline int hex_position(Chamber c, int label) { return (c == Chamber::x ? 0 : 3) + label; }
inline Chamber hex_chamber(int pos) { return pos < 3 ? Chamber::x : Chamber::y; }
inline int hex_label(int pos) { return pos % 3; }

// Validating constructors. Throw Error on violation:
//   DegreeOutOfRange  degree outside [3,8] (first type)
//   BadLabels         labels not exactly {0..n-2}, or bad oval ids, or a
//                     chamber tag present/absent on the wrong edge kind
//   SelfLoop          an edge joins an oval to itself
//   BigSelfGluing     an edge joins B to B (reported before SelfLoop)
//   NotATree          the gluing relation is not a tree
FirstCactus make_first_cactus(int degree, std::vector<FirstEdge> edges);
SecondCactus make_second_cactus(std::vector<SecondEdge> edges);

// Label rotation l -> l+1 (mod degree-1) on all edges.
FirstCactus rotate_first(const FirstCactus& c);

// Label rotation l -> l+1 (mod 3) plus the chamber re-read forced by moving
// the reference cut with the labels: an attachment at (x,l) keeps chamber x
// iff l == 2, otherwise becomes y; an attachment at (y,l) becomes x iff
// l in {0,1}, otherwise stays y. On hexagon positions this is pos -> pos+4
// (mod 6). Bijective on fixed-label classes; its cube is the identity.
SecondCactus rotate_second(const SecondCactus& c);

// Swap the two chambers of every B-incident edge (hexagon pos -> pos+3).
SecondCactus swap_chambers(const SecondCactus& c);

int degree_of(const SecondCactus&); // always 5

// Number of ovals.
inline int oval_count(const FirstCactus& c) { return c.degree; }
inline int oval_count(const SecondCactus&) { return 4; }

} // namespace cactus5
