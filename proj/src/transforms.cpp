#include "cactus5/transforms.hpp"

namespace cactus5 {

const char* gap_name(Gap g) {
    switch (g) {
        case Gap::g01: return "(0,1)";
        case Gap::g12: return "(1,2)";
        case Gap::g20: return "(2,0)";
    }
    return "?";
}

SecondCactus t1(const FirstCactus& w, int k) {
    if (w.degree != 5) throw Error(Errc::DegreeOutOfRange, "t1 needs a degree-5 cactus");
    if (k < 0 || k > 3) throw Error(Errc::BadInput, "contraction label must be in {0..3}");

    const FirstEdge& contracted = w.edges[static_cast<size_t>(k)];
    const int u = contracted.a, v = contracted.b;

    // surviving ovals keep their relative order as smalls 1..3
    std::vector<int> oval_of(5, -1);
    int next = 1;
    for (int s = 0; s < 5; ++s) {
        if (s == u || s == v) continue;
        oval_of[static_cast<size_t>(s)] = next++;
    }

    std::vector<SecondEdge> edges;
    for (const auto& e : w.edges) {
        if (e.label == k) continue;
        SecondEdge se;
        se.label = ((e.label - k - 1) % 4 + 4) % 4; // (k+1,k+2,k+3) -> (0,1,2)
        const bool a_merged = e.a == u || e.a == v;
        const bool b_merged = e.b == u || e.b == v;
        if (a_merged || b_merged) {
            const int merged = a_merged ? e.a : e.b;
            const int small = a_merged ? e.b : e.a;
            se.a = kBigOval;
            se.b = oval_of[static_cast<size_t>(small)];
            se.chamber = merged == u ? Chamber::x : Chamber::y;
        } else {
            se.a = oval_of[static_cast<size_t>(e.a)];
            se.b = oval_of[static_cast<size_t>(e.b)];
        }
        edges.push_back(se);
    }
    return make_second_cactus(std::move(edges));
}

FirstCactus t2(const SecondCactus& b, Gap g) {
    const int j = static_cast<int>(g);

    // cut after hexagon positions j and j+3: one arc is {j+1, j+2, j+3}
    auto arc_side = [&](int pos) { return ((pos - j - 1) % 6 + 6) % 6 < 3 ? 0 : 1; };

    // label map {0,1,2,d} -> {0,1,2,3} with d slotted into gap g
    auto new_label = [&](int old) { return old <= j ? old : old + 1; };
    const int d_label = (j + 1) % 4;
    // gap (2,0) reads (d,0,1,2), so every border label moves up by one
    // and d takes 0; the generic rule above covers gaps (0,1) and (1,2).
    const bool wrap = g == Gap::g20;

    auto map_label = [&](int old) { return wrap ? old + 1 : new_label(old); };
    const int d = wrap ? 0 : d_label;

    const int oval_u = 0, oval_v = 4; // the two halves of B
    std::vector<FirstEdge> edges;
    for (const auto& e : b.edges) {
        FirstEdge fe;
        fe.label = map_label(e.label);
        if (e.chamber) {
            const int pos = hex_position(*e.chamber, e.label);
            const int half = arc_side(pos) == 0 ? oval_u : oval_v;
            const int small = (e.a == kBigOval ? e.b : e.a);
            fe.a = half;
            fe.b = small; // smalls 1..3 keep their ids
        } else {
            fe.a = e.a;
            fe.b = e.b;
        }
        edges.push_back(fe);
    }
    edges.push_back({d, oval_u, oval_v});
    return make_first_cactus(5, std::move(edges));
}

CactusClass t1_class(const CactusClass& w, int k) {
    return canonical_second(t1(w.first(), k), Equivalence::with_rotation);
}

CactusClass t2_class(const CactusClass& b, Gap g) {
    return canonical_first(t2(b.second(), g), Equivalence::with_rotation);
}

std::array<int, 4> t1_star(const CactusClass& w, const Atlas& second_atlas) {
    std::array<int, 4> out{};
    for (int k = 0; k < 4; ++k)
        out[static_cast<size_t>(k)] = second_atlas.index_of(t1_class(w, k).canonical_key);
    return out;
}

std::array<int, 3> t2_star(const CactusClass& b, const Atlas& first_atlas) {
    std::array<int, 3> out{};
    for (size_t i = 0; i < kGapsCcw.size(); ++i)
        out[i] = first_atlas.index_of(t2_class(b, kGapsCcw[i]).canonical_key);
    return out;
}

} // namespace cactus5
