#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cactus5/ribbon.hpp"

using namespace cactus5;

namespace {

std::vector<int> sorted_face_lengths(const RibbonGraph& g, FaceOrientation o) {
    std::vector<int> lens;
    for (const auto& f : faces(g, o)) lens.push_back(f.length());
    std::sort(lens.begin(), lens.end());
    return lens;
}

// complete bipartite 2x3; both whites in the same cyclic order gives a torus
RibbonGraph k23_torus() {
    return build_graph({{0, 1, 2}, {0, 1, 2}}, {{0, 1}, {0, 1}, {0, 1}});
}

// flipping one white rotation makes it planar
RibbonGraph k23_sphere() {
    return build_graph({{0, 1, 2}, {0, 2, 1}}, {{0, 1}, {0, 1}, {0, 1}});
}

} // namespace

TEST_CASE("fixture graph invariants") {
    RibbonGraph g = fixture_graph();
    CHECK(g.n_white() == 8);
    CHECK(g.n_black() == 9);
    CHECK(g.n_edges() == 25);
    CHECK(g.is_simple_bipartite());
    CHECK(g.white_degrees() == std::vector<int>{1, 2, 2, 4, 4, 4, 4, 4});
    CHECK(g.black_degrees() == std::vector<int>{1, 3, 3, 3, 3, 3, 3, 3, 3});

    for (FaceOrientation o : {FaceOrientation::left, FaceOrientation::right}) {
        std::vector<int> lens = sorted_face_lengths(g, o);
        CHECK(lens == std::vector<int>{6, 8, 12, 24});
        CHECK(genus(g, o) == 3);
    }

    // parallel arrows merged: w2 sees only b2 and b6, w8 only b8
    CHECK(g.white_rot[1] == std::vector<int>{1, 5});
    CHECK(g.white_rot[7] == std::vector<int>{7});
    CHECK(g.black_rot[8] == std::vector<int>{5});

    // the degree-1 white and the degree-1 black are not neighbors
    bool linked = false;
    for (const auto& e : g.edges) linked = linked || (e.white == 7 && e.black == 8);
    CHECK(!linked);
}

TEST_CASE("fixture raw tables have the printed shape") {
    const auto& ws = fixture_white_stars();
    const auto& bs = fixture_black_stars();
    REQUIRE(ws.size() == 8);
    REQUIRE(bs.size() == 9);
    for (const auto& s : ws) CHECK(s.size() == 4);
    for (const auto& s : bs) CHECK(s.size() == 3);
    CHECK(ws[7] == std::vector<int>{8, 8, 8, 8});
    CHECK(bs[8] == std::vector<int>{6, 6, 6});
}

TEST_CASE("atlas graph reproduces the same surface") {
    RibbonGraph g = atlas_graph();
    CHECK(g.n_white() == 8);
    CHECK(g.n_black() == 9);
    CHECK(g.n_edges() == 25);
    CHECK(g.white_degrees() == std::vector<int>{1, 2, 2, 4, 4, 4, 4, 4});
    CHECK(g.black_degrees() == std::vector<int>{1, 3, 3, 3, 3, 3, 3, 3, 3});
    CHECK(sorted_face_lengths(g, FaceOrientation::left) == std::vector<int>{6, 8, 12, 24});
    CHECK(genus(g) == 3);
}

TEST_CASE("fixture and atlas graphs are isomorphic as maps") {
    RibbonGraph fix = fixture_graph();
    RibbonGraph atl = atlas_graph();
    auto iso = map_isomorphic(fix, atl);
    REQUIRE(iso.has_value());

    // isomorphisms send faces to faces; map_walk unreverses mirrored ones,
    // so the image is a left face either way
    for (const FaceWalk& f : faces(fix, FaceOrientation::left)) {
        FaceWalk mapped = map_walk(f, fix, atl, *iso);
        CHECK(is_face(atl, mapped, FaceOrientation::left));
    }
}

TEST_CASE("small reference surfaces") {
    RibbonGraph torus = k23_torus();
    CHECK(sorted_face_lengths(torus, FaceOrientation::left) == std::vector<int>{12});
    CHECK(genus(torus) == 1);

    RibbonGraph sphere = k23_sphere();
    CHECK(sorted_face_lengths(sphere, FaceOrientation::left) == std::vector<int>{4, 4, 4});
    CHECK(genus(sphere) == 0);

    // different genus, no map isomorphism
    CHECK(!map_isomorphic(torus, sphere).has_value());

    // a mirror image matches with the reversal flag
    RibbonGraph mirror = build_graph({{2, 1, 0}, {2, 1, 0}}, {{1, 0}, {1, 0}, {1, 0}});
    auto iso = map_isomorphic(torus, mirror);
    REQUIRE(iso.has_value());
}

TEST_CASE("face walks are closed dart cycles") {
    RibbonGraph g = fixture_graph();
    std::vector<FaceWalk> fs = faces(g, FaceOrientation::left);
    int total = 0;
    std::set<std::pair<int, bool>> seen;
    for (const FaceWalk& f : fs) {
        total += f.length();
        for (size_t i = 0; i < f.darts.size(); ++i) {
            const Dart& d = f.darts[i];
            CHECK(seen.insert({d.edge, d.from_white}).second);
            // colors alternate along the walk
            CHECK(d.from_white != f.darts[(i + 1) % f.darts.size()].from_white);
        }
        CHECK(is_face(g, f, FaceOrientation::left));

        // cyclic shifts describe the same face
        FaceWalk shifted = f;
        std::rotate(shifted.darts.begin(), shifted.darts.begin() + 1, shifted.darts.end());
        CHECK(is_face(g, shifted, FaceOrientation::left));
    }
    CHECK(total == 2 * g.n_edges());

    std::string text = walk_to_string(g, fs.front());
    CHECK(!text.empty());
    CHECK(text.find("->") != std::string::npos);
}

TEST_CASE("graph export and parse round trip") {
    RibbonGraph g = fixture_graph();
    std::string dot = export_graph(g, "dot");
    CHECK(dot.find("graph cacti {") == 0);
    CHECK(dot.find("w1") != std::string::npos);

    std::string json = export_graph(g, "json");
    RibbonGraph back = graph_from_json(json);
    CHECK(back.white_rot == g.white_rot);
    CHECK(back.black_rot == g.black_rot);
    CHECK(back.n_edges() == g.n_edges());
    CHECK(genus(back) == 3);

    CHECK_THROWS_AS(export_graph(g, "png"), Error);
    CHECK_THROWS_AS(export_graph(RibbonGraph{}, "dot"), Error);
    CHECK_THROWS_AS(genus(RibbonGraph{}), Error);
    CHECK_THROWS_AS(graph_from_json("{]"), Error);
    CHECK_THROWS_AS(graph_from_json("{}"), Error);
}

TEST_CASE("degenerate rotation data is rejected") {
    // the duality check catches a one-sided edge
    CHECK_THROWS_AS(build_graph({{0}}, {{0}, {0}}), Error);
    // interleaved repeats leave no well-defined merged order
    CHECK_THROWS_AS(build_graph({{0, 1, 0, 2}}, {{0}, {0}, {0}}), Error);
}
