#include "cactus5/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "cactus5/boundary.hpp"
#include "cactus5/canonical.hpp"
#include "cactus5/io.hpp"
#include "cactus5/monodromy.hpp"
#include "cactus5/ribbon.hpp"
#include "cactus5/transforms.hpp"

namespace cactus5 {

namespace {

struct Expect {
    std::ostringstream log;
    bool ok = true;

    template <typename A, typename B>
    void eq(const A& got, const B& want, const std::string& what) {
        if (!(got == static_cast<A>(want))) {
            ok = false;
            log << what << " mismatch; ";
        }
    }
    void that(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << what << "; ";
        }
    }
};

CheckResult finish(const std::string& name, Expect& e, const std::string& ok_detail) {
    CheckResult r;
    r.name = name;
    r.pass = e.ok;
    r.detail = e.ok ? ok_detail : e.log.str();
    return r;
}

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
    try {
        return body();
    } catch (const Error& err) {
        return {name, false, std::string("error ") + errc_name(err.code()) + ": " + err.what()};
    } catch (const std::exception& err) {
        return {name, false, std::string("exception: ") + err.what()};
    }
}

CheckResult check_counts() {
    Expect e;
    e.eq(enumerate_first(5, Equivalence::fixed_labels).size(), 25, "first degree-5 fixed count");
    e.eq(enumerate_first(5, Equivalence::with_rotation).size(), 8, "first degree-5 rotated count");
    e.eq(enumerate_second(Equivalence::fixed_labels).size(), 25, "second fixed count");
    e.eq(enumerate_second(Equivalence::with_rotation).size(), 9, "second rotated count");
    e.eq(enumerate_first(4, Equivalence::fixed_labels).size(), 4, "first degree-4 fixed count");
    e.eq(enumerate_first(4, Equivalence::with_rotation).size(), 2, "first degree-4 rotated count");
    e.eq(enumerate_first(3, Equivalence::fixed_labels).size(), 1, "first degree-3 fixed count");
    e.eq(enumerate_first(3, Equivalence::with_rotation).size(), 1, "first degree-3 rotated count");
    return finish("class-counts", e, "25/8 first, 25/9 second at degree 5; 4/2 and 1/1 below");
}

CheckResult check_oracle() {
    Expect e;
    struct Want {
        int n;
        long long tuples, classes, per, fixed, rotated;
    };
    for (const Want w : {Want{3, 3, 1, 3, 1, 1}, Want{4, 16, 4, 4, 4, 2}, Want{5, 125, 25, 5, 25, 8}}) {
        OracleReport r = oracle_report(w.n);
        std::string tag = "n=" + std::to_string(w.n) + " ";
        e.eq(r.tuple_count, w.tuples, tag + "tuple count");
        e.eq(r.class_count, w.classes, tag + "orbit count");
        e.eq(r.per_class, w.per, tag + "orbit size");
        e.eq(r.tree_fixed_count, w.fixed, tag + "tree fixed census");
        e.eq(r.tree_rotated_count, w.rotated, tag + "tree rotated census");
        e.that(r.agree, tag + "oracle/tree agreement");
    }
    return finish("monodromy-oracle", e, "125 tuples in 25 orbits of 5 at n=5; n=3,4 consistent");
}

CheckResult check_censuses() {
    Expect e;
    auto first = shape_census(enumerate_first(5, Equivalence::with_rotation));
    e.eq(first["chain"], 4, "chain count");
    e.eq(first["T-shape"], 3, "T-shape count");
    e.eq(first["star"], 1, "star count");
    e.eq(static_cast<int>(first.size()), 3, "first shape kinds");

    auto second = shape_census(enumerate_second(Equivalence::with_rotation));
    e.eq(second["star-B"], 2, "star-B count");
    e.eq(second["star-at-small"], 1, "star-at-small count");
    e.eq(second["big-at-end"], 2, "big-at-end count");
    e.eq(second["big-in-middle"], 4, "big-in-middle count");
    e.eq(static_cast<int>(second.size()), 4, "second shape kinds");
    return finish("shape-censuses", e, "first 4+3+1, second 2+1+2+4");
}

CheckResult check_transformations() {
    Expect e;
    const Atlas first = enumerate_first(5, Equivalence::with_rotation);
    const Atlas second = enumerate_second(Equivalence::with_rotation);

    std::set<std::pair<int, int>> t1_pairs, t2_pairs;
    int t1_arrows = 0, t2_arrows = 0;
    for (int wi = 0; wi < first.size(); ++wi) {
        for (int k = 0; k < 4; ++k) {
            CactusClass b = t1_class(first.at(wi), k);
            t1_pairs.insert({wi, second.index_of(b.canonical_key)});
            ++t1_arrows;
            // section identity on raw moves; class wrappers would re-gauge the gap
            CactusClass back =
                canonical_first(t2(t1(first.at(wi).first(), k), Gap::g20), Equivalence::with_rotation);
            e.that(back.canonical_key == first.at(wi).canonical_key,
                   "t2(t1(w," + std::to_string(k) + "), (2,0)) != w at class " + std::to_string(wi));
        }
    }
    for (int bi = 0; bi < second.size(); ++bi)
        for (Gap g : kGapsCcw) {
            CactusClass w = t2_class(second.at(bi), g);
            t2_pairs.insert({first.index_of(w.canonical_key), bi});
            ++t2_arrows;
        }
    e.eq(t1_arrows, 32, "t1 arrow count");
    e.eq(t2_arrows, 27, "t2 arrow count");
    e.that(t1_pairs == t2_pairs, "t1 and t2 disagree on the incidence pairs");
    e.eq(static_cast<int>(t1_pairs.size()), 25, "distinct incidence pair count");
    return finish("transformations", e, "32 and 27 arrows over the same 25 pairs; (2,0) section holds");
}

CheckResult check_graph() {
    Expect e;
    RibbonGraph g = atlas_graph();
    e.eq(g.n_white(), 8, "white vertex count");
    e.eq(g.n_black(), 9, "black vertex count");
    e.eq(g.n_edges(), 25, "edge count");
    e.that(g.white_degrees() == std::vector<int>({1, 2, 2, 4, 4, 4, 4, 4}), "white degree profile");
    e.that(g.black_degrees() == std::vector<int>({1, 3, 3, 3, 3, 3, 3, 3, 3}), "black degree profile");

    for (FaceOrientation o : {FaceOrientation::left, FaceOrientation::right}) {
        auto fs = faces(g, o);
        std::vector<int> lens;
        int total = 0;
        for (const auto& f : fs) {
            lens.push_back(f.length());
            total += f.length();
        }
        std::sort(lens.begin(), lens.end());
        e.eq(static_cast<int>(fs.size()), 4, "face count");
        e.that(lens == std::vector<int>({6, 8, 12, 24}), "face length profile");
        e.eq(total, 50, "total face length");
        e.eq(genus(g, o), 3, "genus");
    }

    int w1 = -1, b1 = -1;
    for (int w = 0; w < g.n_white(); ++w)
        if (g.white_rot[static_cast<size_t>(w)].size() == 1) w1 = w;
    for (int b = 0; b < g.n_black(); ++b)
        if (g.black_rot[static_cast<size_t>(b)].size() == 1) b1 = b;
    e.that(w1 >= 0 && b1 >= 0, "degree-1 vertices exist");
    bool adjacent = false;
    for (const auto& edge : g.edges)
        if (edge.white == w1 && edge.black == b1) adjacent = true;
    e.that(!adjacent, "the degree-1 white and degree-1 black are adjacent");
    return finish("ribbon-graph", e, "17 vertices, 25 edges, 4 faces {6,8,12,24}, genus 3");
}

CheckResult check_fixture() {
    Expect e;
    RibbonGraph atlas = atlas_graph();
    RibbonGraph fixture = fixture_graph();
    auto iso = map_isomorphic(fixture, atlas);
    e.that(iso.has_value(), "no rotation-preserving isomorphism fixture -> atlas");
    if (iso) {
        auto fs = faces(fixture, FaceOrientation::left);
        int hex = -1;
        for (size_t i = 0; i < fs.size(); ++i)
            if (fs[i].length() == 6) hex = static_cast<int>(i);
        e.that(hex >= 0, "fixture has no length-6 face");
        if (hex >= 0) {
            FaceWalk mapped = map_walk(fs[static_cast<size_t>(hex)], fixture, atlas, *iso);
            e.that(is_face(atlas, mapped, FaceOrientation::left), "mapped hexagonal walk is not a face");
        }
    }
    return finish("reference-tables", e, "fixture graph isomorphic; hexagonal face transports");
}

PolynomialSpec poly(std::initializer_list<double> reals) {
    PolynomialSpec p;
    int i = 0;
    for (double r : reals) p.coeff[static_cast<size_t>(i++)] = r;
    return p;
}

CheckResult check_examples(const MeshControl& mesh, const Tolerances& tol) {
    Expect e;
    MeshControl fine = mesh;
    fine.steps *= 2;

    PolynomialSpec star = poly({1, 0, 0, 0, -5, 0});
    Classification c1 = classify_polynomial(star, mesh, tol);
    e.that(c1.kind == CaseKind::quadrangle, "z^5-5z is not a quadrangle case");
    e.eq(c1.shape, std::string("star"), "z^5-5z shape");
    Classification c1f = classify_polynomial(star, fine, tol);
    e.that(c1.atlas_index == c1f.atlas_index && c1.kind == c1f.kind, "z^5-5z unstable under mesh refinement");

    PolynomialSpec fixed_black = poly({1, 0, 0, 1, 0, 0});
    Classification c2 = classify_polynomial(fixed_black, mesh, tol);
    e.that(c2.kind == CaseKind::triangle, "z^5+z^2 is not a triangle case");
    e.that(c2.shape.rfind("star-B(", 0) == 0, "z^5+z^2 shape is not star-B");
    Classification c2f = classify_polynomial(fixed_black, fine, tol);
    e.that(c2.atlas_index == c2f.atlas_index && c2.kind == c2f.kind, "z^5+z^2 unstable under mesh refinement");

    // its class must be the unique rotation-fixed one, the degree-1 black
    // vertex of the graph
    SecondCactus rep = enumerate_second(Equivalence::with_rotation).at(c2.atlas_index).second();
    e.that(canonical_key_second(rep, Equivalence::fixed_labels) ==
               canonical_key_second(rotate_second(rep), Equivalence::fixed_labels),
           "z^5+z^2 class moves under label rotation");
    RibbonGraph g = atlas_graph();
    e.that(c2.atlas_index >= 0 && c2.atlas_index < g.n_black() &&
               g.black_rot[static_cast<size_t>(c2.atlas_index)].size() == 1,
           "z^5+z^2 class is not the degree-1 black vertex");

    bool threw = false;
    try {
        classify_polynomial(poly({1, 0, 0, 0, 0, 0}), mesh, tol);
    } catch (const Error& err) {
        threw = err.code() == Errc::GenericityError;
    }
    e.that(threw, "z^5 did not raise GenericityError");
    return finish("worked-examples", e, "z^5-5z -> star, z^5+z^2 -> rotation-fixed star-B, z^5 rejected");
}

CheckResult check_sampling(int count, unsigned long long seed, const MeshControl& mesh, const Tolerances& tol) {
    Expect e;
    SampleTable t = sample_classes(count, seed, mesh, tol);
    e.eq(t.stable, count, "stable classification count");
    e.that(t.failures.empty(), "classification failures occurred");

    const Atlas first = enumerate_first(5, Equivalence::with_rotation);
    const Atlas second = enumerate_second(Equivalence::with_rotation);
    int total = 0;
    for (const auto& [key, n] : t.by_class) {
        total += n;
        size_t slash = key.find('/');
        e.that(slash != std::string::npos, "malformed class key " + key);
        if (slash == std::string::npos) continue;
        std::string fam = key.substr(0, slash);
        int idx = std::stoi(key.substr(slash + 1));
        int limit = fam == "first" ? first.size() : second.size();
        e.that((fam == "first" || fam == "second") && idx >= 0 && idx < limit, "class key out of atlas " + key);
    }
    e.eq(total, count, "per-class totals");

    SampleTable again = sample_classes(count, seed, mesh, tol);
    e.that(again.by_class == t.by_class && again.stable == t.stable && again.failures == t.failures,
           "sampling is not deterministic for a fixed seed");

    std::ostringstream okd;
    okd << count << " samples classified, stable and in-atlas; seed " << seed << " reproduces";
    return finish("random-sampling", e, okd.str());
}

} // namespace

VerifyReport run_verification(int sample_count, unsigned long long seed, const MeshControl& mesh,
                              const Tolerances& tol) {
    VerifyReport report;
    report.checks.push_back(guarded("class-counts", check_counts));
    report.checks.push_back(guarded("monodromy-oracle", check_oracle));
    report.checks.push_back(guarded("shape-censuses", check_censuses));
    report.checks.push_back(guarded("transformations", check_transformations));
    report.checks.push_back(guarded("ribbon-graph", check_graph));
    report.checks.push_back(guarded("reference-tables", check_fixture));
    report.checks.push_back(guarded("worked-examples", [&] { return check_examples(mesh, tol); }));
    report.checks.push_back(
        guarded("random-sampling", [&] { return check_sampling(sample_count, seed, mesh, tol); }));
    report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const CheckResult& c) { return c.pass; });
    return report;
}

std::string verify_report_to_text(const VerifyReport& report) {
    std::ostringstream out;
    for (const auto& c : report.checks)
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << c.detail << "\n";
    out << (report.all_pass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return out.str();
}

} // namespace cactus5
