#include "cactus5/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>

namespace cactus5 {

namespace {

// Key layout, first type:  'F', degree, then per label l the oval pair (a,b),
// a < b, under the canonical naming. Second type: 'S', 5, then per label l
// the triple (a, b, chamber+1) with chamber 0 when absent and B fixed at 0.

// Deterministic oval naming for a first-type cactus given an oriented root
// edge: the two endpoints of edge 0 get names 0 and 1, then breadth-first,
// visiting neighbors in increasing incident-label order. Any label-preserving
// re-identification maps edge 0 to edge 0, so minimizing over the two
// orientations of edge 0 minimizes over the whole re-identification orbit.
std::string encode_first_named(const FirstCactus& c, int root_a, int root_b) {
    const int n = c.degree;
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (label, other)
    for (const auto& e : c.edges) {
        adj[e.a].push_back({e.label, e.b});
        adj[e.b].push_back({e.label, e.a});
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());

    std::vector<int> name(n, -1);
    std::vector<int> queue;
    name[root_a] = 0;
    name[root_b] = 1;
    queue.push_back(root_a);
    queue.push_back(root_b);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int next_name = static_cast<int>(queue.size());
        for (auto [label, other] : adj[queue[qi]]) {
            (void)label;
            if (name[other] == -1) {
                name[other] = next_name++;
                queue.push_back(other);
            }
        }
    }

    std::string out;
    out.reserve(2 + 2 * (n - 1));
    out.push_back('F');
    out.push_back(static_cast<char>(n));
    for (const auto& e : c.edges) {
        int a = name[e.a], b = name[e.b];
        if (a > b) std::swap(a, b);
        out.push_back(static_cast<char>(a));
        out.push_back(static_cast<char>(b));
    }
    return out;
}

std::string fixed_key_first(const FirstCactus& c) {
    const FirstEdge& root = c.edges[0]; // label 0
    std::string k1 = encode_first_named(c, root.a, root.b);
    std::string k2 = encode_first_named(c, root.b, root.a);
    return std::min(k1, k2);
}

FirstCactus shift_first(const FirstCactus& c, int s) {
    const int m = c.degree - 1;
    std::vector<FirstEdge> edges = c.edges;
    for (auto& e : edges) e.label = (e.label + s) % m;
    return make_first_cactus(c.degree, std::move(edges));
}

std::string encode_second_named(const SecondCactus& c, const std::array<int, 4>& name) {
    std::string out;
    out.reserve(2 + 3 * 3);
    out.push_back('S');
    out.push_back(5);
    for (const auto& e : c.edges) {
        int a = name[e.a], b = name[e.b];
        if (a > b) std::swap(a, b);
        out.push_back(static_cast<char>(a));
        out.push_back(static_cast<char>(b));
        out.push_back(static_cast<char>(e.chamber ? static_cast<int>(*e.chamber) + 1 : 0));
    }
    return out;
}

std::string fixed_key_second_one_tagging(const SecondCactus& c) {
    // minimize over the 3! re-namings of the small ovals; B stays 0
    static const std::array<std::array<int, 4>, 6> namings = {{
        {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
    }};
    std::string best;
    for (const auto& nm : namings) {
        std::string k = encode_second_named(c, nm);
        if (best.empty() || k < best) best = k;
    }
    return best;
}

std::string fixed_key_second(const SecondCactus& c) {
    return std::min(fixed_key_second_one_tagging(c), fixed_key_second_one_tagging(swap_chambers(c)));
}

} // namespace

std::string canonical_key_first(const FirstCactus& c, Equivalence eq) {
    if (eq == Equivalence::fixed_labels) return fixed_key_first(c);
    std::string best;
    for (int s = 0; s < c.degree - 1; ++s) {
        std::string k = fixed_key_first(shift_first(c, s));
        if (best.empty() || k < best) best = k;
    }
    return best;
}

std::string canonical_key_second(const SecondCactus& c, Equivalence eq) {
    if (eq == Equivalence::fixed_labels) return fixed_key_second(c);
    std::string best = fixed_key_second(c);
    SecondCactus r = c;
    for (int s = 0; s < 2; ++s) {
        r = rotate_second(r);
        best = std::min(best, fixed_key_second(r));
    }
    return best;
}

FirstCactus decode_first_key(const std::string& key) {
    if (key.size() < 2 || key[0] != 'F') throw Error(Errc::BadInput, "not a first-type key");
    const int n = static_cast<unsigned char>(key[1]);
    if (key.size() != 2 + 2 * static_cast<size_t>(n - 1)) throw Error(Errc::BadInput, "truncated key");
    std::vector<FirstEdge> edges;
    for (int l = 0; l < n - 1; ++l)
        edges.push_back({l, key[2 + 2 * l], key[3 + 2 * l]});
    return make_first_cactus(n, std::move(edges));
}

SecondCactus decode_second_key(const std::string& key) {
    if (key.size() != 11 || key[0] != 'S') throw Error(Errc::BadInput, "not a second-type key");
    std::vector<SecondEdge> edges;
    for (int l = 0; l < 3; ++l) {
        int a = key[2 + 3 * l], b = key[3 + 3 * l], cc = key[4 + 3 * l];
        std::optional<Chamber> ch;
        if (cc) ch = static_cast<Chamber>(cc - 1);
        edges.push_back({l, a, b, ch});
    }
    return make_second_cactus(std::move(edges));
}

std::string key_to_hex(const std::string& key) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2);
    for (unsigned char b : key) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

CactusClass canonical_first(const FirstCactus& c, Equivalence eq) {
    CactusClass cc;
    cc.family = Family::first;
    cc.equivalence = eq;
    cc.canonical_key = canonical_key_first(c, eq);
    cc.representative = decode_first_key(cc.canonical_key);
    return cc;
}

CactusClass canonical_second(const SecondCactus& c, Equivalence eq) {
    CactusClass cc;
    cc.family = Family::second;
    cc.equivalence = eq;
    cc.canonical_key = canonical_key_second(c, eq);
    cc.representative = decode_second_key(cc.canonical_key);
    return cc;
}

int Atlas::index_of(const std::string& canonical_key) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), canonical_key,
                               [](const CactusClass& cc, const std::string& k) { return cc.canonical_key < k; });
    if (it == classes.end() || it->canonical_key != canonical_key)
        throw Error(Errc::UnknownClassId, "canonical key not present in atlas");
    return static_cast<int>(it - classes.begin());
}

const CactusClass& Atlas::at(int atlas_index) const {
    if (atlas_index < 0 || atlas_index >= size())
        throw Error(Errc::UnknownClassId, "atlas index " + std::to_string(atlas_index) + " out of range");
    return classes[static_cast<size_t>(atlas_index)];
}

namespace {

// Enumerates edge-labeled trees by inserting edges in label order onto a
// growing forest whose ovals are named in order of first appearance. Each
// class is reached at least once (any tree can be built this way) and
// duplicates collapse through the canonical key.
void enumerate_first_rec(int n, int label, int used, std::vector<int>& dsu_parent,
                         std::vector<FirstEdge>& edges, std::set<std::string>& keys, Equivalence eq) {
    const int m = n - 1;
    if (label == m) {
        if (used != n) return;
        FirstCactus c = make_first_cactus(n, edges);
        keys.insert(canonical_key_first(c, eq));
        return;
    }
    if (used + 2 * (m - label) < n) return; // cannot reach n ovals any more

    auto find = [&](int v) {
        while (dsu_parent[v] != v) v = dsu_parent[v] = dsu_parent[dsu_parent[v]];
        return v;
    };
    auto try_edge = [&](int a, int b, int new_used) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return;
        std::vector<int> saved = dsu_parent;
        dsu_parent[ra] = rb;
        edges.push_back({label, a, b});
        enumerate_first_rec(n, label + 1, new_used, dsu_parent, edges, keys, eq);
        edges.pop_back();
        dsu_parent = saved;
    };

    for (int a = 0; a < used; ++a)
        for (int b = a + 1; b < used; ++b) try_edge(a, b, used);
    if (used + 1 <= n)
        for (int a = 0; a < used; ++a) try_edge(a, used, used + 1);
    if (used + 2 <= n) try_edge(used, used + 1, used + 2);
}

} // namespace

Atlas enumerate_first(int degree, Equivalence eq) {
    if (degree < kMinDegree || degree > kMaxDegree)
        throw Error(Errc::DegreeOutOfRange, "degree must be in [3,8], got " + std::to_string(degree));
    std::set<std::string> keys;
    std::vector<int> dsu(degree);
    for (int i = 0; i < degree; ++i) dsu[i] = i;
    std::vector<FirstEdge> edges;
    enumerate_first_rec(degree, 0, 0, dsu, edges, keys, eq);

    Atlas atlas;
    atlas.family = Family::first;
    atlas.degree = degree;
    atlas.equivalence = eq;
    for (const auto& k : keys) {
        CactusClass cc;
        cc.family = Family::first;
        cc.equivalence = eq;
        cc.canonical_key = k;
        cc.atlas_index = atlas.size();
        cc.representative = decode_first_key(k);
        atlas.classes.push_back(std::move(cc));
    }
    return atlas;
}

Atlas enumerate_second(Equivalence eq) {
    static const std::array<std::pair<int, int>, 6> pairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    std::set<std::string> keys;
    for (const auto& e0 : pairs)
        for (const auto& e1 : pairs)
            for (const auto& e2 : pairs) {
                std::array<std::pair<int, int>, 3> ep = {e0, e1, e2};
                // chamber assignments for B-incident edges, 2 options each
                int big_mask = 0, n_big = 0;
                for (int l = 0; l < 3; ++l)
                    if (ep[l].first == kBigOval) {
                        big_mask |= 1 << l;
                        ++n_big;
                    }
                for (int bits = 0; bits < (1 << n_big); ++bits) {
                    std::vector<SecondEdge> edges;
                    int bi = 0;
                    for (int l = 0; l < 3; ++l) {
                        std::optional<Chamber> ch;
                        if (big_mask & (1 << l)) ch = static_cast<Chamber>((bits >> bi++) & 1);
                        edges.push_back({l, ep[l].first, ep[l].second, ch});
                    }
                    try {
                        SecondCactus c = make_second_cactus(std::move(edges));
                        keys.insert(canonical_key_second(c, eq));
                    } catch (const Error&) {
                        // non-tree combination
                    }
                }
            }

    Atlas atlas;
    atlas.family = Family::second;
    atlas.degree = 5;
    atlas.equivalence = eq;
    for (const auto& k : keys) {
        CactusClass cc;
        cc.family = Family::second;
        cc.equivalence = eq;
        cc.canonical_key = k;
        cc.atlas_index = atlas.size();
        cc.representative = decode_second_key(k);
        atlas.classes.push_back(std::move(cc));
    }
    return atlas;
}

} // namespace cactus5
