#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cactus5/canonical.hpp"

// Bipartite ribbon graph of the two class families.
//
// White vertices are the 8 first-type classes with rotation at w given by
// the move order (t1(w,0..3)); black vertices are the 9 second-type classes
// with rotation (t2(b,(2,0)), t2(b,(0,1)), t2(b,(1,2))). Parallel arrows
// between the same pair merge into a single edge and the merged rotation
// keeps the first-occurrence order of the distinct neighbors.
//
// Faces are traced on darts (directed edges). Arriving at a vertex along
// edge e, orientation left departs along the predecessor of e in the stored
// rotation and orientation right along the successor. The two tracings give
// mirror embeddings, so counts and length multisets coincide; left is the
// one that reproduces the compiled-in fixture's face walks literally.

namespace cactus5 {

enum class FaceOrientation { left, right };

struct RibbonGraph {
    // names are display ids ("w1".."w8" for the fixture, "W0".. for computed)
    std::vector<std::string> white_names;
    std::vector<std::string> black_names;
    std::vector<std::vector<int>> white_rot; // black indices, cyclic
    std::vector<std::vector<int>> black_rot; // white indices, cyclic

    struct Edge {
        int white = 0;
        int black = 0;
    };
    std::vector<Edge> edges; // sorted by (white, black)

    int n_white() const { return static_cast<int>(white_rot.size()); }
    int n_black() const { return static_cast<int>(black_rot.size()); }
    int n_edges() const { return static_cast<int>(edges.size()); }
    std::vector<int> white_degrees() const; // sorted ascending
    std::vector<int> black_degrees() const;
    bool is_simple_bipartite() const; // no repeated (white, black) pair
};

// A directed edge; from_white says the dart leaves its white endpoint.
struct Dart {
    int edge = 0;
    bool from_white = true;
};

struct FaceWalk {
    std::vector<Dart> darts; // cyclic, alternating white/black origins
    int length() const { return static_cast<int>(darts.size()); }
};

// Builds the merged graph from raw arrow stars. Throws DualityMismatch when
// the white and black sides disagree on the edge set, AmbiguousRotation when
// a merged rotation's first-occurrence order depends on the starting arrow.
RibbonGraph build_graph(const std::vector<std::vector<int>>& white_arrow_stars,
                        const std::vector<std::vector<int>>& black_arrow_stars,
                        const std::vector<std::string>& white_names = {},
                        const std::vector<std::string>& black_names = {});

// The ribbon graph of the degree-5 atlases (computed via t1/t2).
RibbonGraph atlas_graph();

// Hand-tabulated reference graph with vertices w1..w8 / b1..b9 and rotations
// stored in the printed order of the source figures.
RibbonGraph fixture_graph();

// Raw arrow stars of the reference tables (before merging), 1-based values.
const std::vector<std::vector<int>>& fixture_white_stars();
const std::vector<std::vector<int>>& fixture_black_stars();

std::vector<FaceWalk> faces(const RibbonGraph& g, FaceOrientation o);

// Euler genus of the closed orientable surface given by the rotations and the
// chosen tracing direction (the two directions agree). Throws EmptyGraph on
// an empty graph and NonOrientableParity when V - E + F comes out odd.
int genus(const RibbonGraph& g, FaceOrientation o = FaceOrientation::left);

struct GraphIsomorphism {
    std::vector<int> white_map; // a-white index -> b-white index
    std::vector<int> black_map;
    bool reversed = false; // b's rotations matched after global reversal
};

// Color- and rotation-preserving bijection (rotations up to cyclic shift,
// one global orientation flip allowed). Brute-force backtracking; intended
// for graphs of this size.
std::optional<GraphIsomorphism> map_isomorphic(const RibbonGraph& a, const RibbonGraph& b);

// Translate a dart walk through an isomorphism.
FaceWalk map_walk(const FaceWalk& walk, const RibbonGraph& a, const RibbonGraph& b,
                  const GraphIsomorphism& iso);

// A walk equals a traced face when its dart cycle matches up to rotation.
bool is_face(const RibbonGraph& g, const FaceWalk& walk, FaceOrientation o);

// Renders "[b]->(w)->[b]->..." style walk text (names without the brackets
// come from the graph's vertex names).
std::string walk_to_string(const RibbonGraph& g, const FaceWalk& walk);

// Deterministic exports. Formats: "dot", "json". Throws UnknownFormat
// otherwise, EmptyGraph on an empty graph.
std::string export_graph(const RibbonGraph& g, const std::string& format);

// Parses the JSON produced by export_graph (the fixture schema).
RibbonGraph graph_from_json(const std::string& text);

} // namespace cactus5
