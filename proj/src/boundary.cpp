#include "cactus5/boundary.hpp"

#include <algorithm>

#include "cactus5/canonical.hpp"

namespace cactus5 {

PlaneCactus boundary_walks(const FirstCactus& c) {
    PlaneCactus pc;
    pc.family = Family::first;
    pc.degree = c.degree;
    pc.ovals.resize(c.degree);
    for (int v = 0; v < c.degree; ++v) {
        for (int l = 0; l < c.degree - 1; ++l) {
            MarkedItem it;
            it.label = l;
            const FirstEdge& e = c.edges[l];
            if (e.a == v || e.b == v) {
                it.kind = MarkedItem::Kind::gluing;
                it.edge = l;
            }
            pc.ovals[v].push_back(it);
        }
    }
    return pc;
}

PlaneCactus boundary_walks(const SecondCactus& c) {
    PlaneCactus pc;
    pc.family = Family::second;
    pc.degree = 5;
    pc.ovals.resize(4);
    // big oval: the six hexagon points in counter-clockwise order
    for (int pos = 0; pos < 6; ++pos) {
        MarkedItem it;
        it.label = hex_label(pos);
        it.chamber = hex_chamber(pos);
        for (const auto& e : c.edges)
            if ((e.a == kBigOval || e.b == kBigOval) && e.chamber &&
                hex_position(*e.chamber, e.label) == pos) {
                it.kind = MarkedItem::Kind::gluing;
                it.edge = e.label;
            }
        pc.ovals[kBigOval].push_back(it);
    }
    // small ovals: three border points plus the interior dot
    for (int v = 1; v < 4; ++v) {
        for (int l = 0; l < 3; ++l) {
            MarkedItem it;
            it.label = l;
            const SecondEdge& e = c.edges[l];
            if (e.a == v || e.b == v) {
                it.kind = MarkedItem::Kind::gluing;
                it.edge = l;
            }
            pc.ovals[v].push_back(it);
        }
        MarkedItem dot;
        dot.kind = MarkedItem::Kind::inner_dot;
        dot.label = 3;
        pc.ovals[v].push_back(dot);
    }
    return pc;
}

const char* shape_kind_name(ShapeKind k) {
    switch (k) {
        case ShapeKind::chain: return "chain";
        case ShapeKind::t_shape: return "T-shape";
        case ShapeKind::star: return "star";
        case ShapeKind::tree: return "tree";
        case ShapeKind::star_big: return "star-B";
        case ShapeKind::star_small: return "star-at-small";
        case ShapeKind::big_at_end: return "big-at-end";
        case ShapeKind::big_in_middle: return "big-in-middle";
    }
    return "?";
}

namespace {

std::vector<int> vertex_degrees(const FirstCactus& c) {
    std::vector<int> deg(c.degree, 0);
    for (const auto& e : c.edges) {
        ++deg[e.a];
        ++deg[e.b];
    }
    return deg;
}

// Labels along a path, from one end to the other.
std::vector<int> path_labels(const FirstCactus& c, int start) {
    std::vector<int> labels;
    int prev = -1, cur = start;
    for (;;) {
        int next = -1, lab = -1;
        for (const auto& e : c.edges) {
            int other = e.a == cur ? e.b : (e.b == cur ? e.a : -1);
            if (other != -1 && other != prev) {
                next = other;
                lab = e.label;
            }
        }
        if (next == -1) break;
        labels.push_back(lab);
        prev = cur;
        cur = next;
    }
    return labels;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace

ShapeDescriptor shape_descriptor(const FirstCactus& c) {
    const int n = c.degree;
    std::vector<int> deg = vertex_degrees(c);
    const int maxdeg = *std::max_element(deg.begin(), deg.end());

    if (maxdeg == n - 1 && n >= 4) return {ShapeKind::star, "star"};

    if (maxdeg <= 2) {
        int end = 0;
        while (deg[end] != 1) ++end;
        std::vector<int> fwd = path_labels(c, end);
        std::vector<int> rev(fwd.rbegin(), fwd.rend());
        const std::vector<int>& norm = fwd <= rev ? fwd : rev;
        return {ShapeKind::chain, "chain(" + join_ints(norm) + ")"};
    }

    if (n == 5 && maxdeg == 3) {
        // center has three incident labels; the branch label continues to the
        // middle oval which also carries the tail label
        int center = 0;
        while (deg[center] != 3) ++center;
        int mid = 0;
        while (deg[mid] != 2) ++mid;
        int branch = -1, tail = -1;
        for (const auto& e : c.edges) {
            if (e.a == mid || e.b == mid) {
                if (e.a == center || e.b == center)
                    branch = e.label;
                else
                    tail = e.label;
            }
        }
        int offset = ((tail - branch) % 4 + 4) % 4;
        return {ShapeKind::t_shape, "T(offset=" + std::to_string(offset) + ")"};
    }

    std::vector<int> ds = deg;
    std::sort(ds.rbegin(), ds.rend());
    return {ShapeKind::tree, "tree(degrees=" + join_ints(ds) + ")"};
}

ShapeDescriptor shape_descriptor(const SecondCactus& c) {
    std::vector<int> deg(4, 0);
    for (const auto& e : c.edges) {
        ++deg[e.a];
        ++deg[e.b];
    }
    if (deg[kBigOval] == 3) {
        // tag pattern as a function of the label, normalized over the swap
        std::string p, q;
        for (const auto& e : c.edges) {
            p.push_back(chamber_letter(*e.chamber));
            q.push_back(*e.chamber == Chamber::x ? 'y' : 'x');
        }
        return {ShapeKind::star_big, "star-B(" + std::min(p, q) + ")"};
    }
    if (*std::max_element(deg.begin(), deg.end()) == 3)
        return {ShapeKind::star_small, "star-at-small"};
    if (deg[kBigOval] == 1) {
        // path with B at an end; read labels walking away from B
        std::vector<int> labels;
        int prev = -1, cur = kBigOval;
        for (int step = 0; step < 3; ++step) {
            for (const auto& e : c.edges) {
                int other = e.a == cur ? e.b : (e.b == cur ? e.a : -1);
                if (other != -1 && other != prev) {
                    labels.push_back(e.label);
                    prev = cur;
                    cur = other;
                    break;
                }
            }
        }
        return {ShapeKind::big_at_end, "big-at-end(" + join_ints(labels) + ")"};
    }
    // path with B inside: pendant gluing at B, then the through gluing, then
    // the far small-small gluing
    int pend = -1, mid = -1, far = -1;
    char pend_tag = '?', mid_tag = '?';
    for (const auto& e : c.edges) {
        if (e.a != kBigOval && e.b != kBigOval) {
            far = e.label;
            continue;
        }
        int small = e.a == kBigOval ? e.b : e.a;
        if (deg[small] == 1) {
            pend = e.label;
            pend_tag = chamber_letter(*e.chamber);
        } else {
            mid = e.label;
            mid_tag = chamber_letter(*e.chamber);
        }
    }
    std::string tags{pend_tag, mid_tag};
    std::string swapped;
    for (char ch : tags) swapped.push_back(ch == 'x' ? 'y' : 'x');
    std::string t = std::min(tags, swapped);
    return {ShapeKind::big_in_middle,
            "big-in-middle(" + std::to_string(pend) + t[0] + "," + std::to_string(mid) + t[1] + "," +
                std::to_string(far) + ")"};
}

std::map<std::string, int> shape_census(const Atlas& atlas) {
    std::map<std::string, int> census;
    for (const auto& cc : atlas.classes) {
        ShapeDescriptor d = cc.family == Family::first ? shape_descriptor(cc.first())
                                                       : shape_descriptor(cc.second());
        ++census[shape_kind_name(d.kind)];
    }
    return census;
}

} // namespace cactus5
