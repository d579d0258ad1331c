#include "cactus5/cactus.hpp"

#include <algorithm>
#include <numeric>

namespace cactus5 {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotATree: return "NotATree";
        case Errc::BadLabels: return "BadLabels";
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::BigSelfGluing: return "BigSelfGluing";
        case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
        case Errc::DualityMismatch: return "DualityMismatch";
        case Errc::AmbiguousRotation: return "AmbiguousRotation";
        case Errc::NonOrientableParity: return "NonOrientableParity";
        case Errc::UnknownFormat: return "UnknownFormat";
        case Errc::EmptyGraph: return "EmptyGraph";
        case Errc::GenericityError: return "GenericityError";
        case Errc::NonQuintic: return "NonQuintic";
        case Errc::CollisionAmbiguous: return "CollisionAmbiguous";
        case Errc::PathClearance: return "PathClearance";
        case Errc::Divergence: return "Divergence";
        case Errc::UnknownClassId: return "UnknownClassId";
        case Errc::BadInput: return "BadInput";
    }
    return "Error";
}

namespace {

// Union-find over a handful of ovals.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

template <typename EdgeT>
void check_tree(const std::vector<EdgeT>& edges, int n_vertices) {
    Dsu dsu(n_vertices);
    for (const auto& e : edges)
        if (!dsu.unite(e.a, e.b)) throw Error(Errc::NotATree, "gluing relation contains a cycle");
    // n-1 acyclic edges on n vertices are automatically connected
}

template <typename EdgeT>
void check_labels(const std::vector<EdgeT>& edges, int n_labels, int n_vertices) {
    if (static_cast<int>(edges.size()) != n_labels)
        throw Error(Errc::BadLabels, "expected " + std::to_string(n_labels) + " edges");
    std::vector<bool> seen(n_labels, false);
    for (const auto& e : edges) {
        if (e.label < 0 || e.label >= n_labels || seen[e.label])
            throw Error(Errc::BadLabels, "labels must be exactly {0.." + std::to_string(n_labels - 1) + "}");
        seen[e.label] = true;
        if (e.a < 0 || e.a >= n_vertices || e.b < 0 || e.b >= n_vertices)
            throw Error(Errc::BadLabels, "oval id out of range");
    }
}

} // namespace

FirstCactus make_first_cactus(int degree, std::vector<FirstEdge> edges) {
    if (degree < kMinDegree || degree > kMaxDegree)
        throw Error(Errc::DegreeOutOfRange, "degree must be in [3,8], got " + std::to_string(degree));
    check_labels(edges, degree - 1, degree);
    for (const auto& e : edges)
        if (e.a == e.b) throw Error(Errc::SelfLoop, "edge " + std::to_string(e.label) + " glues an oval to itself");
    check_tree(edges, degree);
    std::sort(edges.begin(), edges.end(), [](const FirstEdge& l, const FirstEdge& r) { return l.label < r.label; });
    for (auto& e : edges)
        if (e.a > e.b) std::swap(e.a, e.b);
    return FirstCactus{degree, std::move(edges)};
}

SecondCactus make_second_cactus(std::vector<SecondEdge> edges) {
    check_labels(edges, 3, 4);
    for (const auto& e : edges) {
        if (e.a == kBigOval && e.b == kBigOval)
            throw Error(Errc::BigSelfGluing, "edge " + std::to_string(e.label) + " glues the big oval to itself");
        if (e.a == e.b) throw Error(Errc::SelfLoop, "edge " + std::to_string(e.label) + " glues an oval to itself");
        const bool touches_big = e.a == kBigOval || e.b == kBigOval;
        if (touches_big && !e.chamber)
            throw Error(Errc::BadLabels, "edge " + std::to_string(e.label) + " touches B and needs a chamber tag");
        if (!touches_big && e.chamber)
            throw Error(Errc::BadLabels, "edge " + std::to_string(e.label) + " is small-small and must not carry a chamber tag");
    }
    check_tree(edges, 4);
    std::sort(edges.begin(), edges.end(), [](const SecondEdge& l, const SecondEdge& r) { return l.label < r.label; });
    for (auto& e : edges)
        if (e.a > e.b) std::swap(e.a, e.b);
    return SecondCactus{std::move(edges)};
}

FirstCactus rotate_first(const FirstCactus& c) {
    std::vector<FirstEdge> edges = c.edges;
    const int m = c.degree - 1;
    for (auto& e : edges) e.label = (e.label + 1) % m;
    return make_first_cactus(c.degree, std::move(edges));
}

SecondCactus rotate_second(const SecondCactus& c) {
    std::vector<SecondEdge> edges = c.edges;
    for (auto& e : edges) {
        if (e.chamber) {
            // re-read forced by carrying the reference cut along with l -> l+1
            if (*e.chamber == Chamber::x)
                e.chamber = (e.label == 2) ? Chamber::x : Chamber::y;
            else
                e.chamber = (e.label == 0 || e.label == 1) ? Chamber::x : Chamber::y;
        }
        e.label = (e.label + 1) % 3;
    }
    return make_second_cactus(std::move(edges));
}

SecondCactus swap_chambers(const SecondCactus& c) {
    std::vector<SecondEdge> edges = c.edges;
    for (auto& e : edges)
        if (e.chamber) e.chamber = (*e.chamber == Chamber::x) ? Chamber::y : Chamber::x;
    return make_second_cactus(std::move(edges));
}

int degree_of(const SecondCactus&) { return 5; }

} // namespace cactus5
