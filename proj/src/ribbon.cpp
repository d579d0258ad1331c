#include "cactus5/ribbon.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "cactus5/transforms.hpp"

namespace cactus5 {

std::vector<int> RibbonGraph::white_degrees() const {
    std::vector<int> d;
    for (const auto& r : white_rot) d.push_back(static_cast<int>(r.size()));
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<int> RibbonGraph::black_degrees() const {
    std::vector<int> d;
    for (const auto& r : black_rot) d.push_back(static_cast<int>(r.size()));
    std::sort(d.begin(), d.end());
    return d;
}

bool RibbonGraph::is_simple_bipartite() const {
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges)
        if (!seen.insert({e.white, e.black}).second) return false;
    return true;
}

namespace {

// First-occurrence order of the distinct values in a cyclic sequence. When
// the sequence has repeats and three or more distinct values, the order can
// depend on the starting point; such stars are rejected as ambiguous.
std::vector<int> merged_rotation(const std::vector<int>& arrows, const std::string& who) {
    std::set<int> distinct(arrows.begin(), arrows.end());
    if (distinct.size() == arrows.size()) return arrows;

    auto first_occurrence = [&](size_t start) {
        std::vector<int> order;
        std::set<int> seen;
        for (size_t i = 0; i < arrows.size(); ++i) {
            int v = arrows[(start + i) % arrows.size()];
            if (seen.insert(v).second) order.push_back(v);
        }
        return order;
    };
    auto canonical_cycle = [](std::vector<int> v) {
        std::vector<int> best = v;
        for (size_t s = 1; s < v.size(); ++s) {
            std::rotate(v.begin(), v.begin() + 1, v.end());
            best = std::min(best, v);
        }
        return best;
    };

    std::vector<int> base = first_occurrence(0);
    if (base.size() >= 3) {
        std::vector<int> ref = canonical_cycle(base);
        for (size_t s = 1; s < arrows.size(); ++s)
            if (canonical_cycle(first_occurrence(s)) != ref)
                throw Error(Errc::AmbiguousRotation, "merged rotation of " + who +
                                                         " depends on the starting arrow");
    }
    return base;
}

} // namespace

RibbonGraph build_graph(const std::vector<std::vector<int>>& white_arrow_stars,
                        const std::vector<std::vector<int>>& black_arrow_stars,
                        const std::vector<std::string>& white_names,
                        const std::vector<std::string>& black_names) {
    RibbonGraph g;
    for (size_t w = 0; w < white_arrow_stars.size(); ++w)
        g.white_names.push_back(w < white_names.size() ? white_names[w] : "W" + std::to_string(w));
    for (size_t b = 0; b < black_arrow_stars.size(); ++b)
        g.black_names.push_back(b < black_names.size() ? black_names[b] : "B" + std::to_string(b));

    std::set<std::pair<int, int>> white_pairs, black_pairs;
    for (size_t w = 0; w < white_arrow_stars.size(); ++w) {
        g.white_rot.push_back(merged_rotation(white_arrow_stars[w], g.white_names[w]));
        for (int b : g.white_rot.back()) white_pairs.insert({static_cast<int>(w), b});
    }
    for (size_t b = 0; b < black_arrow_stars.size(); ++b) {
        g.black_rot.push_back(merged_rotation(black_arrow_stars[b], g.black_names[b]));
        for (int w : g.black_rot.back()) black_pairs.insert({w, static_cast<int>(b)});
    }
    if (white_pairs != black_pairs)
        throw Error(Errc::DualityMismatch, "white and black stars disagree on the edge set");
    for (const auto& [w, b] : white_pairs) g.edges.push_back({w, b});
    return g;
}

RibbonGraph atlas_graph() {
    const Atlas first = enumerate_first(5, Equivalence::with_rotation);
    const Atlas second = enumerate_second(Equivalence::with_rotation);
    std::vector<std::vector<int>> white_stars, black_stars;
    for (const auto& w : first.classes) {
        auto star = t1_star(w, second);
        white_stars.emplace_back(star.begin(), star.end());
    }
    for (const auto& b : second.classes) {
        auto star = t2_star(b, first);
        black_stars.emplace_back(star.begin(), star.end());
    }
    return build_graph(white_stars, black_stars);
}

namespace {

// Reference adjacency tables; rotations in the printed order of the source
// figures (circles: left, top, right, bottom; squares: left, upper right,
// lower right). Values are 1-based vertex numbers of the opposite color.
const std::vector<std::vector<int>> kFixtureWhite = {
    {5, 4, 1, 2}, {2, 6, 2, 6}, {6, 2, 1, 7}, {1, 7, 1, 7},
    {3, 5, 6, 8}, {3, 4, 9, 5}, {3, 8, 7, 4}, {8, 8, 8, 8},
};
const std::vector<std::vector<int>> kFixtureBlack = {
    {3, 4, 1}, {3, 1, 2}, {6, 7, 5}, {6, 1, 7}, {5, 1, 6},
    {3, 2, 5}, {4, 3, 7}, {7, 5, 8}, {6, 6, 6},
};

std::vector<std::vector<int>> to_zero_based(const std::vector<std::vector<int>>& stars) {
    std::vector<std::vector<int>> out = stars;
    for (auto& s : out)
        for (auto& v : s) --v;
    return out;
}

} // namespace

const std::vector<std::vector<int>>& fixture_white_stars() { return kFixtureWhite; }
const std::vector<std::vector<int>>& fixture_black_stars() { return kFixtureBlack; }

RibbonGraph fixture_graph() {
    std::vector<std::string> wn, bn;
    for (int i = 1; i <= 8; ++i) wn.push_back("w" + std::to_string(i));
    for (int i = 1; i <= 9; ++i) bn.push_back("b" + std::to_string(i));
    return build_graph(to_zero_based(kFixtureWhite), to_zero_based(kFixtureBlack), wn, bn);
}

namespace {

int rotation_position(const std::vector<int>& rot, int value) {
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == value) return static_cast<int>(i);
    throw Error(Errc::NonOrientableParity, "edge absent from its endpoint rotation");
}

} // namespace

std::vector<FaceWalk> faces(const RibbonGraph& g, FaceOrientation o) {
    const int step = o == FaceOrientation::left ? -1 : +1;
    auto next_dart = [&](const Dart& d) -> Dart {
        const auto& e = g.edges[static_cast<size_t>(d.edge)];
        // arrival vertex and its rotation
        const std::vector<int>& rot = d.from_white ? g.black_rot[static_cast<size_t>(e.black)]
                                                   : g.white_rot[static_cast<size_t>(e.white)];
        const int deg = static_cast<int>(rot.size());
        const int arrived_from = d.from_white ? e.white : e.black;
        const int pos = rotation_position(rot, arrived_from);
        const int neighbor = rot[static_cast<size_t>(((pos + step) % deg + deg) % deg)];
        // departing edge
        int dep = -1;
        for (size_t i = 0; i < g.edges.size(); ++i) {
            const auto& f = g.edges[i];
            if (d.from_white && f.black == e.black && f.white == neighbor) dep = static_cast<int>(i);
            if (!d.from_white && f.white == e.white && f.black == neighbor) dep = static_cast<int>(i);
        }
        return Dart{dep, !d.from_white};
    };

    std::set<std::pair<int, bool>> visited;
    std::vector<FaceWalk> walks;
    for (size_t e = 0; e < g.edges.size(); ++e)
        for (bool fw : {true, false}) {
            if (visited.count({static_cast<int>(e), fw})) continue;
            FaceWalk walk;
            Dart d{static_cast<int>(e), fw};
            while (!visited.count({d.edge, d.from_white})) {
                visited.insert({d.edge, d.from_white});
                walk.darts.push_back(d);
                d = next_dart(d);
            }
            walks.push_back(std::move(walk));
        }
    return walks;
}

int genus(const RibbonGraph& g, FaceOrientation o) {
    if (g.n_edges() == 0) throw Error(Errc::EmptyGraph, "genus of an empty graph");
    // connectivity over the bipartite vertex set
    std::vector<int> comp(static_cast<size_t>(g.n_white() + g.n_black()), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& e : g.edges) {
            int a = e.white, b = g.n_white() + e.black;
            if (a == v && comp[static_cast<size_t>(b)] == -1) {
                comp[static_cast<size_t>(b)] = 0;
                stack.push_back(b);
            }
            if (b == v && comp[static_cast<size_t>(a)] == -1) {
                comp[static_cast<size_t>(a)] = 0;
                stack.push_back(a);
            }
        }
    }
    for (int c : comp)
        if (c == -1) throw Error(Errc::BadInput, "genus needs a connected graph");

    const int v = g.n_white() + g.n_black();
    const int e = g.n_edges();
    const int f = static_cast<int>(faces(g, o).size());
    const int euler = v - e + f;
    if (euler % 2 != 0)
        throw Error(Errc::NonOrientableParity, "odd Euler characteristic, rotation data is inconsistent");
    return (2 - euler) / 2;
}

namespace {

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b, bool reversed) {
    if (a.size() != b.size()) return false;
    std::vector<int> bb = b;
    if (reversed) std::reverse(bb.begin(), bb.end());
    const size_t n = a.size();
    for (size_t s = 0; s < n; ++s) {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) ok = a[i] == bb[(i + s) % n];
        if (ok) return true;
    }
    return false;
}

struct IsoSearch {
    const RibbonGraph& a;
    const RibbonGraph& b;
    bool reversed;
    std::vector<int> wmap, bmap;       // a -> b, -1 unset
    std::vector<bool> bbl_used, bwh_used; // images taken in b (blacks, whites)

    bool rotations_compatible_white(int aw, int bw) const {
        // map a's rotation (black ids) through bmap; unknown entries match anything
        const auto& ra = a.white_rot[static_cast<size_t>(aw)];
        const auto& rb = b.white_rot[static_cast<size_t>(bw)];
        if (ra.size() != rb.size()) return false;
        std::vector<int> ib = rb;
        if (reversed) std::reverse(ib.begin(), ib.end());
        const size_t n = ra.size();
        for (size_t s = 0; s < n; ++s) {
            bool ok = true;
            for (size_t i = 0; i < n && ok; ++i) {
                int m = bmap[static_cast<size_t>(ra[i])];
                if (m != -1 && m != ib[(i + s) % n]) ok = false;
            }
            if (ok) return true;
        }
        return false;
    }
    bool rotations_compatible_black(int ab, int bb) const {
        const auto& ra = a.black_rot[static_cast<size_t>(ab)];
        const auto& rb = b.black_rot[static_cast<size_t>(bb)];
        if (ra.size() != rb.size()) return false;
        std::vector<int> ib = rb;
        if (reversed) std::reverse(ib.begin(), ib.end());
        const size_t n = ra.size();
        for (size_t s = 0; s < n; ++s) {
            bool ok = true;
            for (size_t i = 0; i < n && ok; ++i) {
                int m = wmap[static_cast<size_t>(ra[i])];
                if (m != -1 && m != ib[(i + s) % n]) ok = false;
            }
            if (ok) return true;
        }
        return false;
    }

    bool solve(int wi) {
        if (wi == static_cast<int>(a.white_rot.size())) return solve_black(0);
        for (int bw = 0; bw < static_cast<int>(b.white_rot.size()); ++bw) {
            if (bwh_used[static_cast<size_t>(bw)]) continue;
            if (a.white_rot[static_cast<size_t>(wi)].size() != b.white_rot[static_cast<size_t>(bw)].size())
                continue;
            wmap[static_cast<size_t>(wi)] = bw;
            bwh_used[static_cast<size_t>(bw)] = true;
            if (rotations_compatible_white(wi, bw) && solve(wi + 1)) return true;
            wmap[static_cast<size_t>(wi)] = -1;
            bwh_used[static_cast<size_t>(bw)] = false;
        }
        return false;
    }
    bool solve_black(int bi) {
        if (bi == static_cast<int>(a.black_rot.size())) return full_check();
        for (int bb = 0; bb < static_cast<int>(b.black_rot.size()); ++bb) {
            if (bbl_used[static_cast<size_t>(bb)]) continue;
            if (!rotations_compatible_black(bi, bb)) continue;
            bmap[static_cast<size_t>(bi)] = bb;
            bbl_used[static_cast<size_t>(bb)] = true;
            bool whites_still_ok = true;
            for (int w = 0; w < static_cast<int>(a.white_rot.size()) && whites_still_ok; ++w)
                whites_still_ok = rotations_compatible_white(w, wmap[static_cast<size_t>(w)]);
            if (whites_still_ok && solve_black(bi + 1)) return true;
            bmap[static_cast<size_t>(bi)] = -1;
            bbl_used[static_cast<size_t>(bb)] = false;
        }
        return false;
    }
    bool full_check() const {
        for (int w = 0; w < static_cast<int>(a.white_rot.size()); ++w) {
            std::vector<int> mapped;
            for (int v : a.white_rot[static_cast<size_t>(w)]) mapped.push_back(bmap[static_cast<size_t>(v)]);
            if (!cyclic_equal(mapped, b.white_rot[static_cast<size_t>(wmap[static_cast<size_t>(w)])], reversed))
                return false;
        }
        for (int bb = 0; bb < static_cast<int>(a.black_rot.size()); ++bb) {
            std::vector<int> mapped;
            for (int v : a.black_rot[static_cast<size_t>(bb)]) mapped.push_back(wmap[static_cast<size_t>(v)]);
            if (!cyclic_equal(mapped, b.black_rot[static_cast<size_t>(bmap[static_cast<size_t>(bb)])], reversed))
                return false;
        }
        return true;
    }
};

} // namespace

std::optional<GraphIsomorphism> map_isomorphic(const RibbonGraph& a, const RibbonGraph& b) {
    if (a.n_white() != b.n_white() || a.n_black() != b.n_black() || a.n_edges() != b.n_edges())
        return std::nullopt;
    for (bool reversed : {false, true}) {
        IsoSearch s{a, b, reversed,
                    std::vector<int>(static_cast<size_t>(a.n_white()), -1),
                    std::vector<int>(static_cast<size_t>(a.n_black()), -1),
                    std::vector<bool>(static_cast<size_t>(b.n_black()), false),
                    std::vector<bool>(static_cast<size_t>(b.n_white()), false)};
        if (s.solve(0)) {
            GraphIsomorphism iso;
            iso.white_map = s.wmap;
            iso.black_map = s.bmap;
            iso.reversed = reversed;
            return iso;
        }
    }
    return std::nullopt;
}

FaceWalk map_walk(const FaceWalk& walk, const RibbonGraph& a, const RibbonGraph& b,
                  const GraphIsomorphism& iso) {
    FaceWalk out;
    for (const Dart& d : walk.darts) {
        const auto& e = a.edges[static_cast<size_t>(d.edge)];
        const int bw = iso.white_map[static_cast<size_t>(e.white)];
        const int bb = iso.black_map[static_cast<size_t>(e.black)];
        int idx = -1;
        for (size_t i = 0; i < b.edges.size(); ++i)
            if (b.edges[i].white == bw && b.edges[i].black == bb) idx = static_cast<int>(i);
        if (idx == -1) throw Error(Errc::BadInput, "isomorphism does not preserve an edge");
        out.darts.push_back({idx, d.from_white});
    }
    if (iso.reversed) {
        // a mirror image traverses the same boundary the other way round
        std::reverse(out.darts.begin(), out.darts.end());
        for (Dart& d : out.darts) d.from_white = !d.from_white;
    }
    return out;
}

namespace {

bool same_cycle(const std::vector<Dart>& a, const std::vector<Dart>& b) {
    if (a.size() != b.size()) return false;
    const size_t n = a.size();
    for (size_t s = 0; s < n; ++s) {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            ok = a[i].edge == b[(i + s) % n].edge && a[i].from_white == b[(i + s) % n].from_white;
        if (ok) return true;
    }
    return false;
}

} // namespace

bool is_face(const RibbonGraph& g, const FaceWalk& walk, FaceOrientation o) {
    for (const FaceWalk& f : faces(g, o))
        if (same_cycle(f.darts, walk.darts)) return true;
    return false;
}

std::string walk_to_string(const RibbonGraph& g, const FaceWalk& walk) {
    std::string out;
    for (const Dart& d : walk.darts) {
        const auto& e = g.edges[static_cast<size_t>(d.edge)];
        if (d.from_white)
            out += "(" + g.white_names[static_cast<size_t>(e.white)] + ")->";
        else
            out += "[" + g.black_names[static_cast<size_t>(e.black)] + "]->";
    }
    return out;
}

std::string export_graph(const RibbonGraph& g, const std::string& format) {
    if (g.n_edges() == 0) throw Error(Errc::EmptyGraph, "nothing to export");
    if (format == "dot") {
        std::string out = "graph cacti {\n";
        out += "  // genus " + std::to_string(genus(g)) + ", faces " +
               std::to_string(faces(g, FaceOrientation::left).size()) + " (left tracing)\n";
        for (int w = 0; w < g.n_white(); ++w) {
            out += "  " + g.white_names[static_cast<size_t>(w)] + " [shape=circle];";
            out += " // rot:";
            for (int b : g.white_rot[static_cast<size_t>(w)]) out += " " + g.black_names[static_cast<size_t>(b)];
            out += "\n";
        }
        for (int b = 0; b < g.n_black(); ++b) {
            out += "  " + g.black_names[static_cast<size_t>(b)] + " [shape=box];";
            out += " // rot:";
            for (int w : g.black_rot[static_cast<size_t>(b)]) out += " " + g.white_names[static_cast<size_t>(w)];
            out += "\n";
        }
        for (const auto& e : g.edges)
            out += "  " + g.white_names[static_cast<size_t>(e.white)] + " -- " +
                   g.black_names[static_cast<size_t>(e.black)] + ";\n";
        out += "}\n";
        return out;
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["white"] = nlohmann::ordered_json::array();
        for (int w = 0; w < g.n_white(); ++w) {
            nlohmann::ordered_json node;
            node["name"] = g.white_names[static_cast<size_t>(w)];
            node["rotation"] = nlohmann::ordered_json::array();
            for (int b : g.white_rot[static_cast<size_t>(w)])
                node["rotation"].push_back(g.black_names[static_cast<size_t>(b)]);
            j["white"].push_back(node);
        }
        j["black"] = nlohmann::ordered_json::array();
        for (int b = 0; b < g.n_black(); ++b) {
            nlohmann::ordered_json node;
            node["name"] = g.black_names[static_cast<size_t>(b)];
            node["rotation"] = nlohmann::ordered_json::array();
            for (int w : g.black_rot[static_cast<size_t>(b)])
                node["rotation"].push_back(g.white_names[static_cast<size_t>(w)]);
            j["black"].push_back(node);
        }
        j["edges"] = nlohmann::ordered_json::array();
        for (const auto& e : g.edges)
            j["edges"].push_back({g.white_names[static_cast<size_t>(e.white)],
                                  g.black_names[static_cast<size_t>(e.black)]});
        std::vector<int> lens;
        for (const auto& f : faces(g, FaceOrientation::left)) lens.push_back(f.length());
        std::sort(lens.begin(), lens.end());
        j["face_lengths"] = lens;
        j["genus"] = genus(g);
        return j.dump(2) + "\n";
    }
    throw Error(Errc::UnknownFormat, "unknown graph format '" + format + "'");
}

RibbonGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::BadInput, std::string("graph json: ") + e.what());
    }
    if (!j.contains("white") || !j.contains("black")) throw Error(Errc::BadInput, "graph json: missing keys");

    std::map<std::string, int> wid, bid;
    std::vector<std::string> wn, bn;
    try {
    for (const auto& node : j["white"]) {
        wid[node["name"].get<std::string>()] = static_cast<int>(wn.size());
        wn.push_back(node["name"].get<std::string>());
    }
    for (const auto& node : j["black"]) {
        bid[node["name"].get<std::string>()] = static_cast<int>(bn.size());
        bn.push_back(node["name"].get<std::string>());
    }
    std::vector<std::vector<int>> wrot, brot;
    for (const auto& node : j["white"]) {
        std::vector<int> rot;
        for (const auto& nm : node["rotation"]) rot.push_back(bid.at(nm.get<std::string>()));
        wrot.push_back(rot);
    }
    for (const auto& node : j["black"]) {
        std::vector<int> rot;
        for (const auto& nm : node["rotation"]) rot.push_back(wid.at(nm.get<std::string>()));
        brot.push_back(rot);
    }
    return build_graph(wrot, brot, wn, bn);
    } catch (const std::out_of_range&) {
        throw Error(Errc::BadInput, "graph json: rotation names an unknown vertex");
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::BadInput, std::string("graph json: ") + e.what());
    }
}

} // namespace cactus5
