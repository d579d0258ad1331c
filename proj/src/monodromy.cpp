#include "cactus5/monodromy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cactus5/canonical.hpp"

namespace cactus5 {

Perm::Perm(int n) : img_(static_cast<size_t>(n)) { std::iota(img_.begin(), img_.end(), 0); }

Perm Perm::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw Error(Errc::BadInput, "bad transposition points");
    Perm p(n);
    std::swap(p.img_[static_cast<size_t>(a - 1)], p.img_[static_cast<size_t>(b - 1)]);
    return p;
}

Perm Perm::reference_cycle(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p.img_[static_cast<size_t>(i)] = (i + 1) % n;
    return p;
}

Perm Perm::inverse() const {
    Perm r(size());
    for (int i = 0; i < size(); ++i) r.img_[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
    return r;
}

bool Perm::is_transposition() const {
    int moved = 0;
    for (int i = 0; i < size(); ++i)
        if (img_[static_cast<size_t>(i)] != i) ++moved;
    return moved == 2;
}

std::pair<int, int> Perm::transposed_points() const {
    std::pair<int, int> pts{0, 0};
    int moved = 0;
    for (int i = 0; i < size(); ++i)
        if (img_[static_cast<size_t>(i)] != i) {
            ++moved;
            if (!pts.first)
                pts.first = i + 1;
            else if (!pts.second)
                pts.second = i + 1;
        }
    if (moved != 2) throw Error(Errc::BadInput, "not a transposition");
    return pts;
}

std::string Perm::cycle_string() const {
    std::vector<bool> seen(static_cast<size_t>(size()), false);
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<size_t>(i)] || img_[static_cast<size_t>(i)] == i) continue;
        out.push_back('(');
        int j = i;
        bool first = true;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            if (!first) out.push_back(' ');
            out += std::to_string(j + 1);
            first = false;
            j = img_[static_cast<size_t>(j)];
        }
        out.push_back(')');
    }
    if (out.empty()) out = "()";
    return out;
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw Error(Errc::BadInput, "size mismatch in compose");
    Perm r(a.size());
    for (int i = 0; i < a.size(); ++i)
        r.img_[static_cast<size_t>(i)] = b.img_[static_cast<size_t>(a.img_[static_cast<size_t>(i)])];
    return r;
}

Perm conjugate(const Perm& a, const Perm& g) {
    // left-to-right g^-1 a g: i -> g(a(g^-1(i)))
    return compose(compose(g.inverse(), a), g);
}

std::vector<int> cycle_type(const Perm& a) {
    std::vector<bool> seen(static_cast<size_t>(a.size()), false);
    std::vector<int> lens;
    for (int i = 0; i < a.size(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            ++len;
            j = a.img_[static_cast<size_t>(j)];
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

namespace {

std::vector<Perm> all_transpositions(int n) {
    std::vector<Perm> ts;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) ts.push_back(Perm::transposition(n, a, b));
    return ts;
}

void enumerate_rec(int n, int slot, const std::vector<Perm>& ts, const Perm& partial,
                   std::vector<Perm>& parts, const Perm& rho, std::vector<MonodromyTuple>& out,
                   TupleKind kind) {
    const int slots = n - 1;
    if (slot == slots - 1) {
        // the last part is forced: partial then last == rho
        Perm last = compose(partial.inverse(), rho);
        if (last.is_transposition()) {
            parts.push_back(last);
            out.push_back({kind, parts});
            parts.pop_back();
        }
        return;
    }
    for (const Perm& t : ts) {
        parts.push_back(t);
        enumerate_rec(n, slot + 1, ts, compose(partial, t), parts, rho, out, kind);
        parts.pop_back();
    }
}

} // namespace

std::vector<MonodromyTuple> enumerate_tuples(int n, TupleKind kind) {
    if (n < 3 || n > 7) throw Error(Errc::DegreeOutOfRange, "tuple enumeration supports 3 <= n <= 7");
    std::vector<MonodromyTuple> out;
    std::vector<Perm> parts;
    enumerate_rec(n, 0, all_transpositions(n), Perm::identity(n), parts, Perm::reference_cycle(n), out, kind);
    return out;
}

FirstCactus tuple_to_first(const MonodromyTuple& t) {
    const int n = static_cast<int>(t.parts.size()) + 1;
    std::vector<FirstEdge> edges;
    for (int l = 0; l < n - 1; ++l) {
        if (!t.parts[static_cast<size_t>(l)].is_transposition())
            throw Error(Errc::BadInput, "tuple slot " + std::to_string(l) + " is not a transposition");
        auto [a, b] = t.parts[static_cast<size_t>(l)].transposed_points();
        edges.push_back({l, a - 1, b - 1});
    }
    return make_first_cactus(n, std::move(edges));
}

SecondCactus tuple_to_second(const MonodromyTuple& t) {
    if (t.kind != TupleKind::triangle) throw Error(Errc::BadInput, "triangle tuple required");
    if (t.parts.size() != 4) throw Error(Errc::BadInput, "second-type tuples have four slots");
    const Perm& delta = t.parts[3];
    if (!delta.is_transposition()) throw Error(Errc::BadInput, "inner slot is not a transposition");
    auto [ba, bb] = delta.transposed_points(); // ba < bb; these sheets merge into B

    // small ovals keep their relative order; sheet -> oval id
    std::vector<int> oval_of(6, -1);
    int next = 1;
    for (int s = 1; s <= 5; ++s) {
        if (s == ba || s == bb) continue;
        oval_of[static_cast<size_t>(s)] = next++;
    }

    std::vector<SecondEdge> edges;
    for (int l = 0; l < 3; ++l) {
        auto [p, q] = t.parts[static_cast<size_t>(l)].transposed_points();
        const bool p_big = p == ba || p == bb;
        const bool q_big = q == ba || q == bb;
        if (p_big && q_big)
            throw Error(Errc::BigSelfGluing, "border slot " + std::to_string(l) + " glues the big pair to itself");
        SecondEdge e;
        e.label = l;
        if (!p_big && !q_big) {
            e.a = oval_of[static_cast<size_t>(p)];
            e.b = oval_of[static_cast<size_t>(q)];
        } else {
            const int big_sheet = p_big ? p : q;
            const int small = p_big ? q : p;
            e.a = kBigOval;
            e.b = oval_of[static_cast<size_t>(small)];
            e.chamber = big_sheet == ba ? Chamber::x : Chamber::y;
        }
        edges.push_back(e);
    }
    return make_second_cactus(std::move(edges));
}

MonodromyTuple conjugate_tuple(const MonodromyTuple& t, const Perm& g) {
    MonodromyTuple r;
    r.kind = t.kind;
    for (const Perm& p : t.parts) r.parts.push_back(conjugate(p, g));
    return r;
}

OracleReport oracle_report(int n) {
    if (n < 3 || n > 6) throw Error(Errc::DegreeOutOfRange, "oracle report supports 3 <= n <= 6");
    OracleReport rep;
    rep.n = n;

    std::vector<MonodromyTuple> tuples = enumerate_tuples(n, TupleKind::quadrangle);
    rep.tuple_count = static_cast<long long>(tuples.size());

    // orbits under conjugation by powers of rho
    std::set<std::vector<Perm>> seen;
    long long orbits = 0;
    std::vector<long long> orbit_sizes;
    const Perm rho = Perm::reference_cycle(n);
    for (const auto& t : tuples) {
        if (seen.count(t.parts)) continue;
        ++orbits;
        long long size = 0;
        MonodromyTuple cur = t;
        for (int s = 0; s < n; ++s) {
            if (seen.insert(cur.parts).second) ++size;
            cur = conjugate_tuple(cur, rho);
        }
        orbit_sizes.push_back(size);
    }
    rep.class_count = orbits;
    rep.per_class = orbit_sizes.empty() ? 0 : orbit_sizes.front();
    const bool uniform =
        std::all_of(orbit_sizes.begin(), orbit_sizes.end(), [&](long long s) { return s == rep.per_class; });

    // tree side: fixed keys of the mapped tuples vs direct enumeration
    std::set<std::string> fixed_keys, rotated_keys;
    for (const auto& t : tuples) {
        FirstCactus c = tuple_to_first(t);
        fixed_keys.insert(canonical_key_first(c, Equivalence::fixed_labels));
        rotated_keys.insert(canonical_key_first(c, Equivalence::with_rotation));
    }
    rep.tree_fixed_count = static_cast<long long>(fixed_keys.size());
    rep.tree_rotated_count = static_cast<long long>(rotated_keys.size());

    const Atlas fixed_atlas = enumerate_first(n, Equivalence::fixed_labels);
    const Atlas rot_atlas = enumerate_first(n, Equivalence::with_rotation);
    rep.agree = uniform && rep.class_count == rep.tree_fixed_count &&
                rep.tree_fixed_count == fixed_atlas.size() && rep.tree_rotated_count == rot_atlas.size() &&
                rep.tuple_count == rep.class_count * rep.per_class;
    return rep;
}

} // namespace cactus5
