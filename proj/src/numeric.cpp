#include "cactus5/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "cactus5/boundary.hpp"

namespace cactus5 {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double coeff_scale(const PolynomialSpec& p) {
    double m = 0.0;
    for (const auto& c : p.coeff) m = std::max(m, std::abs(c));
    return m;
}

std::vector<cplx> descending(const PolynomialSpec& p) {
    return std::vector<cplx>(p.coeff.begin(), p.coeff.end());
}

cplx horner(const std::vector<cplx>& c, cplx z) {
    cplx r = 0.0;
    for (const cplx& a : c) r = r * z + a;
    return r;
}

// All roots at once by Weierstrass simultaneous iteration from a circle of
// starting points, then a few polishing Newton steps per root.
std::vector<cplx> all_roots(std::vector<cplx> c, double residual_tol) {
    if (c.empty() || std::abs(c[0]) == 0.0) throw Error(Errc::BadInput, "zero leading coefficient");
    const int d = static_cast<int>(c.size()) - 1;
    const cplx lead = c[0];
    for (auto& a : c) a /= lead;

    double radius = 0.0;
    for (const auto& a : c) radius = std::max(radius, std::abs(a));
    radius = 1.0 + radius;

    std::vector<cplx> z(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        double ang = 2.0 * kPi * (k + 0.25) / d + 0.5;
        z[static_cast<size_t>(k)] = radius * cplx(std::cos(ang), std::sin(ang));
    }

    for (int it = 0; it < 600; ++it) {
        double worst = 0.0;
        for (int k = 0; k < d; ++k) {
            cplx denom = 1.0;
            for (int j = 0; j < d; ++j)
                if (j != k) denom *= z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)];
            if (std::abs(denom) == 0.0) {
                z[static_cast<size_t>(k)] += 1e-8 * radius; // nudge coincident iterates apart
                continue;
            }
            cplx delta = horner(c, z[static_cast<size_t>(k)]) / denom;
            z[static_cast<size_t>(k)] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14 * radius) break;
    }

    // polish (quadratic near simple roots, harmless near clusters)
    std::vector<cplx> dc(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) dc[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] * static_cast<double>(d - i);
    for (auto& root : z)
        for (int it = 0; it < 4; ++it) {
            cplx der = horner(dc, root);
            if (std::abs(der) == 0.0) break;
            root -= horner(c, root) / der;
        }

    double sum_abs = 1.0;
    for (const auto& a : c) sum_abs += std::abs(a);
    for (const auto& root : z) {
        double bound = std::max(1.0, std::abs(root));
        double scale = std::pow(bound, d) * sum_abs;
        if (std::abs(horner(c, root)) > std::max(residual_tol, 1e-10) * scale)
            throw Error(Errc::Divergence, "root refinement stalled");
    }
    // lexicographic by (re, im), with re snapped to a grid so that roots
    // sharing a real part (conjugate pairs, imaginary-axis symmetry) do not
    // get ordered by refinement noise
    const double snap = 1e-7 * radius;
    std::stable_sort(z.begin(), z.end(), [snap](cplx a, cplx b) {
        double ra = std::round(a.real() / snap), rb = std::round(b.real() / snap);
        return ra != rb ? ra < rb : a.imag() < b.imag();
    });
    return z;
}

double cross(cplx o, cplx a, cplx b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

bool strictly_inside_triangle(cplx p, cplx a, cplx b, cplx c) {
    double d1 = cross(a, b, p), d2 = cross(b, c, p), d3 = cross(c, a, p);
    bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
    bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
    return !(has_neg && has_pos) && d1 != 0 && d2 != 0 && d3 != 0;
}

} // namespace

cplx evaluate(const PolynomialSpec& p, cplx z) { return horner(descending(p), z); }

std::array<cplx, 5> derivative(const PolynomialSpec& p) {
    std::array<cplx, 5> d;
    for (int i = 0; i < 5; ++i) d[static_cast<size_t>(i)] = p.coeff[static_cast<size_t>(i)] * static_cast<double>(5 - i);
    return d;
}

CriticalData critical_data(const PolynomialSpec& p, const Tolerances& tol) {
    const double cs = coeff_scale(p);
    if (cs == 0.0 || std::abs(p.coeff[0]) <= 1e-12 * cs)
        throw Error(Errc::NonQuintic, "leading coefficient vanishes");

    auto dc = derivative(p);
    std::vector<cplx> zs = all_roots(std::vector<cplx>(dc.begin(), dc.end()), tol.residual);

    std::array<cplx, 4> pts{}, vals{};
    for (int i = 0; i < 4; ++i) {
        pts[static_cast<size_t>(i)] = zs[static_cast<size_t>(i)];
        vals[static_cast<size_t>(i)] = evaluate(p, zs[static_cast<size_t>(i)]);
    }

    double scale_v = cs;
    for (const auto& u : vals) scale_v = std::max(scale_v, std::abs(u));
    double scale_z = 1e-6 * (1.0 + cs / std::abs(p.coeff[0]));
    for (const auto& z : pts) scale_z = std::max(scale_z, std::abs(z));

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (std::abs(vals[static_cast<size_t>(i)] - vals[static_cast<size_t>(j)]) <= tol.genericity * scale_v)
                throw Error(Errc::GenericityError, "critical values coincide");
            if (std::abs(pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(j)]) <= tol.genericity * scale_z)
                throw Error(Errc::GenericityError, "critical points coincide");
        }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) {
                double area2 = std::abs(cross(vals[static_cast<size_t>(i)], vals[static_cast<size_t>(j)],
                                              vals[static_cast<size_t>(k)]));
                if (area2 <= 2.0 * tol.genericity * scale_v * scale_v)
                    throw Error(Errc::GenericityError, "three critical values are collinear");
            }

    // hull: either no value inside the others' triangle, or exactly one
    int inner = -1;
    for (int i = 0; i < 4; ++i) {
        std::array<cplx, 3> others{};
        int n = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) others[static_cast<size_t>(n++)] = vals[static_cast<size_t>(j)];
        if (strictly_inside_triangle(vals[static_cast<size_t>(i)], others[0], others[1], others[2])) {
            if (inner != -1) throw Error(Errc::GenericityError, "hull classification is ambiguous");
            inner = i;
        }
    }

    CriticalData cd;
    cd.kind = inner == -1 ? CaseKind::quadrangle : CaseKind::triangle;
    cd.scale_z = scale_z;
    cd.scale_v = scale_v;

    std::vector<int> border;
    for (int i = 0; i < 4; ++i)
        if (i != inner) border.push_back(i);

    cplx center = 0.0;
    for (int i : border) center += vals[static_cast<size_t>(i)];
    center /= static_cast<double>(border.size());

    std::sort(border.begin(), border.end(), [&](int a, int b) {
        return std::arg(vals[static_cast<size_t>(a)] - center) < std::arg(vals[static_cast<size_t>(b)] - center);
    });
    // deterministic start: lexicographically smallest border value gets label
    // 0, with the real part snapped so symmetric pairs are not noise-ordered
    const double snap = 1e-7 * scale_v;
    auto lex_less = [snap](cplx a, cplx b) {
        double ra = std::round(a.real() / snap), rb = std::round(b.real() / snap);
        return ra != rb ? ra < rb : a.imag() < b.imag();
    };
    int start = 0;
    for (size_t i = 1; i < border.size(); ++i)
        if (lex_less(vals[static_cast<size_t>(border[i])], vals[static_cast<size_t>(border[static_cast<size_t>(start)])]))
            start = static_cast<int>(i);
    std::rotate(border.begin(), border.begin() + start, border.end());
    if (inner != -1) border.push_back(inner);

    CriticalData out = cd;
    for (int l = 0; l < 4; ++l) {
        out.points[static_cast<size_t>(l)] = pts[static_cast<size_t>(border[static_cast<size_t>(l)])];
        out.values[static_cast<size_t>(l)] = vals[static_cast<size_t>(border[static_cast<size_t>(l)])];
    }
    return out;
}

namespace {

// ---- path construction -------------------------------------------------

using Path = std::vector<cplx>; // waypoints; legs are straight segments

double min_pairwise(const std::array<cplx, 4>& v) {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            m = std::min(m, std::abs(v[static_cast<size_t>(i)] - v[static_cast<size_t>(j)]));
    return m;
}

// closest parameter of point v on segment [a,b]
double closest_t(cplx a, cplx b, cplx v) {
    cplx d = b - a;
    double len2 = std::norm(d);
    if (len2 == 0.0) return 0.0;
    double t = ((v - a).real() * d.real() + (v - a).imag() * d.imag()) / len2;
    return std::clamp(t, 0.0, 1.0);
}

// Straight segment from a to b with circular detours of the given radius
// around any listed obstacle the segment passes too near. The detour bulges
// through the side the segment already favors, so the homotopy class rel the
// obstacles is that of the straight segment.
Path segment_with_detours(cplx a, cplx b, const std::vector<cplx>& obstacles, double radius) {
    struct Hit {
        double t;
        cplx v;
    };
    std::vector<Hit> hits;
    for (const cplx& v : obstacles) {
        double t = closest_t(a, b, v);
        cplx m = a + t * (b - a);
        if (std::abs(m - v) < radius && t > 0.0 && t < 1.0) hits.push_back({t, v});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& l, const Hit& r) { return l.t < r.t; });

    Path path{a};
    for (const Hit& h : hits) {
        cplx d = b - a;
        double len = std::abs(d);
        // chord of the clearance circle along the segment direction
        double tc = closest_t(a, b, h.v);
        cplx m = a + tc * (b - a);
        double off = std::abs(m - h.v);
        double half = std::sqrt(std::max(radius * radius - off * off, 0.0)) / len;
        double t_in = std::max(tc - half, 0.0), t_out = std::min(tc + half, 1.0);
        cplx pin = a + t_in * d, pout = a + t_out * d;
        double th_in = std::arg(pin - h.v), th_out = std::arg(pout - h.v);
        cplx side = off > 1e-14 * radius ? (m - h.v) / off : (a - h.v) / std::abs(a - h.v);
        double th_mid = std::arg(side);
        // sweep from th_in to th_out passing through th_mid
        auto ccw_dist = [](double from, double to) {
            double d2 = std::fmod(to - from, 2.0 * kPi);
            if (d2 < 0) d2 += 2.0 * kPi;
            return d2;
        };
        bool ccw = ccw_dist(th_in, th_mid) <= ccw_dist(th_in, th_out);
        double sweep = ccw ? ccw_dist(th_in, th_out) : -ccw_dist(th_out, th_in);
        int samples = std::max(4, static_cast<int>(std::ceil(std::abs(sweep) / (kPi / 12.0))));
        path.push_back(pin);
        for (int s = 1; s < samples; ++s) {
            double th = th_in + sweep * s / samples;
            path.push_back(h.v + radius * cplx(std::cos(th), std::sin(th)));
        }
        path.push_back(pout);
    }
    path.push_back(b);
    return path;
}

// ---- continuation ------------------------------------------------------

struct Tracker {
    const std::vector<cplx> pc;  // p descending
    const std::vector<cplx> dpc; // p' descending
    double poly_sum;             // sum of |coefficients| of p
    double res_tol;
    int max_bisect;

    double min_sep(const std::vector<cplx>& roots) const {
        double m = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j) m = std::min(m, std::abs(roots[i] - roots[j]));
        return m;
    }

    // Newton-correct every root at target w; returns max correction or NaN.
    double correct(std::vector<cplx>& roots, cplx w) const {
        double worst = 0.0;
        for (auto& z : roots) {
            cplx z0 = z;
            bool done = false;
            for (int it = 0; it < 30; ++it) {
                cplx f = horner(pc, z) - w;
                double bz = std::max(1.0, std::abs(z));
                if (std::abs(f) <= res_tol * (poly_sum * std::pow(bz, 5) + std::abs(w) + 1.0)) {
                    done = true;
                    break;
                }
                cplx der = horner(dpc, z);
                if (std::abs(der) == 0.0) return std::numeric_limits<double>::quiet_NaN();
                z -= f / der;
            }
            if (!done) return std::numeric_limits<double>::quiet_NaN();
            worst = std::max(worst, std::abs(z - z0));
        }
        return worst;
    }

    // One adaptive step; a step is accepted only when every branch moved by
    // less than a third of the minimal branch separation.
    void step(std::vector<cplx>& roots, cplx w_from, cplx w_to, int depth) const {
        if (depth > max_bisect) throw Error(Errc::Divergence, "step bisection exhausted");
        std::vector<cplx> trial = roots;
        double corr = correct(trial, w_to);
        if (std::isnan(corr) || (corr > 0.0 && min_sep(trial) <= 3.0 * corr)) {
            cplx mid = w_from + 0.5 * (w_to - w_from);
            step(roots, w_from, mid, depth + 1);
            step(roots, mid, w_to, depth + 1);
            return;
        }
        roots = trial;
    }

    void track(std::vector<cplx>& roots, const Path& path, int steps_per_leg) const {
        for (size_t leg = 0; leg + 1 < path.size(); ++leg) {
            cplx a = path[leg], b = path[leg + 1];
            for (int s = 0; s < steps_per_leg; ++s) {
                cplx from = a + (b - a) * (static_cast<double>(s) / steps_per_leg);
                cplx to = a + (b - a) * (static_cast<double>(s + 1) / steps_per_leg);
                step(roots, from, to, 0);
            }
        }
    }
};

// Continue the fiber toward the critical value u (last waypoint) and name
// the two branches that meet at the known critical point z_l.
std::pair<int, int> collide(const Tracker& trk, std::vector<cplx> roots, const Path& path, int steps,
                            cplx u, cplx z_l, double r_col) {
    Path approach = path;
    // stop the regular mesh one leg short of the critical value
    approach.back() = u + (approach[approach.size() - 2] - u) * (1.0 / steps);
    trk.track(roots, approach, steps);

    cplx w = approach.back();
    for (int k = 0; k < 60; ++k) {
        std::array<size_t, 5> ord{0, 1, 2, 3, 4};
        std::sort(ord.begin(), ord.end(), [&](size_t a, size_t b) {
            return std::abs(roots[a] - z_l) < std::abs(roots[b] - z_l);
        });
        const cplx za = roots[ord[0]], zb = roots[ord[1]];
        const double d0 = std::abs(za - z_l), d1 = std::abs(zb - z_l);
        const double d2 = std::abs(roots[ord[2]] - z_l);
        if (d2 <= r_col) throw Error(Errc::CollisionAmbiguous, "more than two branches near the critical point");
        // The colliding pair closes on z_l like sqrt(|w - u|) and stays
        // symmetric about it, while every other branch keeps its distance.
        // Newton accuracy near a double root also bottoms out at the square
        // root of the residual bound, which can sit above r_col, so the pair
        // is recognized by separation ratio rather than by an absolute radius
        // the corrector may never reach.
        const bool pinned = d1 <= r_col || (d1 <= 1e4 * r_col && d2 >= 50.0 * d1);
        const bool symmetric = std::abs(0.5 * (za + zb) - z_l) <= 0.25 * (d0 + d1) + r_col;
        if (pinned && symmetric && d2 >= 3.0 * r_col) {
            int a = static_cast<int>(ord[0]), b = static_cast<int>(ord[1]);
            return {std::min(a, b), std::max(a, b)};
        }
        cplx w_next = u + (w - u) * 0.5;
        double corr = trk.correct(roots, w_next);
        if (std::isnan(corr)) throw Error(Errc::CollisionAmbiguous, "correction failed near the critical point");
        w = w_next;
    }
    throw Error(Errc::CollisionAmbiguous, "no clean two-branch collision");
}

// Monodromy permutation around center: out[i] = index the branch starting at
// fiber slot i ends up in after one counter-clockwise turn.
std::vector<int> loop_permutation(const Tracker& trk, const std::vector<cplx>& fiber, cplx w0, cplx center,
                                  double radius, const std::vector<cplx>& obstacles, double detour, int steps) {
    cplx s = center + radius * (w0 - center) / std::abs(w0 - center);
    Path inbound = segment_with_detours(w0, s, obstacles, detour);

    std::vector<cplx> roots = fiber;
    trk.track(roots, inbound, steps);

    double th0 = std::arg(s - center);
    Path circle;
    const int arcs = 24;
    for (int i = 0; i <= arcs; ++i) {
        double th = th0 + 2.0 * kPi * i / arcs;
        circle.push_back(center + radius * cplx(std::cos(th), std::sin(th)));
    }
    trk.track(roots, circle, std::max(2, steps / 8));

    Path outbound(inbound.rbegin(), inbound.rend());
    trk.track(roots, outbound, steps);

    double guard = trk.min_sep(fiber) / 3.0;
    std::vector<int> perm(fiber.size(), -1);
    std::vector<bool> taken(fiber.size(), false);
    for (size_t i = 0; i < fiber.size(); ++i) {
        int best = -1;
        double bd = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < fiber.size(); ++j) {
            double d = std::abs(roots[i] - fiber[j]);
            if (d < bd) {
                bd = d;
                best = static_cast<int>(j);
            }
        }
        if (best < 0 || bd > guard || taken[static_cast<size_t>(best)])
            throw Error(Errc::Divergence, "loop tracking lost a branch");
        taken[static_cast<size_t>(best)] = true;
        perm[i] = best;
    }
    return perm;
}

// ---- basepoint selection -------------------------------------------------

std::vector<cplx> basepoint_candidates(const CriticalData& cd) {
    std::vector<cplx> border;
    const int nb = cd.kind == CaseKind::quadrangle ? 4 : 3;
    for (int i = 0; i < nb; ++i) border.push_back(cd.values[static_cast<size_t>(i)]);
    cplx c = 0.0;
    for (const cplx& u : border) c += u;
    c /= static_cast<double>(nb);

    std::vector<cplx> cand{c};
    for (int i = 0; i < nb; ++i) {
        cplx m = 0.5 * (border[static_cast<size_t>(i)] + border[static_cast<size_t>((i + 1) % nb)]);
        cand.push_back(0.5 * (c + m));
    }
    for (int i = 0; i < nb; ++i) cand.push_back(0.5 * (c + border[static_cast<size_t>(i)]));
    // denser sweep along centroid rays for skewed borders
    for (double t : {0.25, 0.75}) {
        for (int i = 0; i < nb; ++i) {
            cplx m = 0.5 * (border[static_cast<size_t>(i)] + border[static_cast<size_t>((i + 1) % nb)]);
            cand.push_back(c + t * (m - c));
        }
        for (int i = 0; i < nb; ++i) cand.push_back(c + t * (border[static_cast<size_t>(i)] - c));
    }
    return cand;
}

bool basepoint_ok(const CriticalData& cd, cplx w0, double clearance) {
    const int nb = cd.kind == CaseKind::quadrangle ? 4 : 3;
    for (int i = 0; i < 4; ++i)
        if (std::abs(w0 - cd.values[static_cast<size_t>(i)]) < clearance) return false;
    // strictly inside the border polygon (counter-clockwise)
    for (int i = 0; i < nb; ++i)
        if (cross(cd.values[static_cast<size_t>(i)], cd.values[static_cast<size_t>((i + 1) % nb)], w0) <= 0.0)
            return false;
    if (cd.kind == CaseKind::triangle) {
        // straight probes must clear the interior value, or the sector
        // read-out would be thrown off
        for (int l = 0; l < 3; ++l) {
            double t = closest_t(w0, cd.values[static_cast<size_t>(l)], cd.values[3]);
            cplx m = w0 + t * (cd.values[static_cast<size_t>(l)] - w0);
            if (std::abs(m - cd.values[3]) < clearance) return false;
        }
    }
    return true;
}

cplx pick_basepoint(const CriticalData& cd, double& clearance) {
    // relax the clearance before giving up; detour and loop radii shrink
    // with it, so tighter geometry costs mesh steps, not correctness
    for (double f : {1.0, 0.5, 0.25, 0.125}) {
        for (const cplx& w0 : basepoint_candidates(cd))
            if (basepoint_ok(cd, w0, f * clearance)) {
                clearance *= f;
                return w0;
            }
    }
    throw Error(Errc::PathClearance, "no admissible basepoint");
}

struct Probes {
    cplx w0;
    double clearance;
    std::vector<cplx> fiber; // lexicographically sorted
    Tracker trk;
};

Probes setup(const PolynomialSpec& p, const CriticalData& cd, const Tolerances& tol) {
    double clearance = 0.25 * min_pairwise(cd.values);
    cplx w0 = pick_basepoint(cd, clearance); // may relax clearance in place
    std::vector<cplx> fc = descending(p);
    fc.back() -= w0;
    std::vector<cplx> fiber = all_roots(fc, tol.residual);
    auto dp = derivative(p);
    double ps = 0.0;
    for (const auto& a : p.coeff) ps += std::abs(a);
    return Probes{w0, clearance, fiber,
                  Tracker{descending(p), std::vector<cplx>(dp.begin(), dp.end()), ps, tol.residual, 0}};
}

Path probe_path(const Probes& pr, const CriticalData& cd, int target) {
    std::vector<cplx> obstacles;
    for (int i = 0; i < 4; ++i)
        if (i != target) obstacles.push_back(cd.values[static_cast<size_t>(i)]);
    return segment_with_detours(pr.w0, cd.values[static_cast<size_t>(target)], obstacles, pr.clearance);
}

int interior_sector(const Probes& pr, const CriticalData& cd) {
    // counter-clockwise sector (between straight probes to u_j and u_{j+1})
    // that contains the interior critical value
    double th_in = std::arg(cd.values[3] - pr.w0);
    auto ccw = [](double from, double to) {
        double d = std::fmod(to - from, 2.0 * kPi);
        if (d < 0) d += 2.0 * kPi;
        return d;
    };
    for (int j = 0; j < 3; ++j) {
        double a = std::arg(cd.values[static_cast<size_t>(j)] - pr.w0);
        double b = std::arg(cd.values[static_cast<size_t>((j + 1) % 3)] - pr.w0);
        if (ccw(a, th_in) < ccw(a, b)) return j;
    }
    throw Error(Errc::PathClearance, "interior value sector is indeterminate");
}

double scale_for_collisions(const Probes& pr, const CriticalData& cd) {
    double s = cd.scale_z;
    for (const cplx& r : pr.fiber) s = std::max(s, std::abs(r));
    return s;
}

} // namespace

std::variant<FirstCactus, SecondCactus> extract_cactus(const PolynomialSpec& p, const CriticalData& cd,
                                                       const MeshControl& mesh, const Tolerances& tol) {
    Probes pr = setup(p, cd, tol);
    pr.trk.max_bisect = mesh.max_bisect;
    const double r_col = tol.collision * scale_for_collisions(pr, cd);

    if (cd.kind == CaseKind::quadrangle) {
        std::vector<FirstEdge> edges;
        for (int l = 0; l < 4; ++l) {
            auto [a, b] = collide(pr.trk, pr.fiber, probe_path(pr, cd, l), mesh.steps,
                                  cd.values[static_cast<size_t>(l)], cd.points[static_cast<size_t>(l)], r_col);
            edges.push_back({l, a, b});
        }
        return make_first_cactus(5, std::move(edges));
    }

    // triangle: the interior loop names the big pair of sheets
    std::vector<cplx> obstacles(cd.values.begin(), cd.values.begin() + 3);
    double r_loop = std::min(pr.clearance, 0.5 * std::abs(pr.w0 - cd.values[3]));
    std::vector<int> perm =
        loop_permutation(pr.trk, pr.fiber, pr.w0, cd.values[3], r_loop, obstacles, pr.clearance, mesh.steps);
    std::vector<int> moved;
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) moved.push_back(static_cast<int>(i));
    if (moved.size() != 2)
        throw Error(Errc::CollisionAmbiguous, "interior monodromy is not a transposition");
    const int big_a = moved[0], big_b = moved[1];

    const int sector = interior_sector(pr, cd);
    std::vector<int> small_of(5, -1);
    int next = 1;
    for (int i = 0; i < 5; ++i)
        if (i != big_a && i != big_b) small_of[static_cast<size_t>(i)] = next++;

    std::vector<SecondEdge> edges;
    for (int l = 0; l < 3; ++l) {
        auto [a, b] = collide(pr.trk, pr.fiber, probe_path(pr, cd, l), mesh.steps,
                              cd.values[static_cast<size_t>(l)], cd.points[static_cast<size_t>(l)], r_col);
        const bool a_big = a == big_a || a == big_b;
        const bool b_big = b == big_a || b == big_b;
        SecondEdge e;
        e.label = l;
        if (a_big && b_big) throw Error(Errc::CollisionAmbiguous, "border gluing inside the big pair");
        if (!a_big && !b_big) {
            e.a = small_of[static_cast<size_t>(a)];
            e.b = small_of[static_cast<size_t>(b)];
        } else {
            const int sheet = a_big ? a : b;
            const int small = a_big ? b : a;
            // hexagon position: sheet big_a reads the arc just past the cut,
            // positions {sector+1, sector+2, sector+3}; big_b the other arc
            const int base = sheet == big_a ? sector + 1 : sector + 4;
            int pos = -1;
            for (int off = 0; off < 3; ++off)
                if ((base + off) % 6 % 3 == l) pos = (base + off) % 6;
            e.a = kBigOval;
            e.b = small_of[static_cast<size_t>(small)];
            e.chamber = hex_chamber(pos);
        }
        edges.push_back(e);
    }
    return make_second_cactus(std::move(edges));
}

NumericMonodromy numeric_monodromy(const PolynomialSpec& p, const CriticalData& cd,
                                   const MeshControl& mesh, const Tolerances& tol) {
    Probes pr = setup(p, cd, tol);
    pr.trk.max_bisect = mesh.max_bisect;

    NumericMonodromy out;
    std::vector<std::pair<double, int>> by_angle;
    for (int l = 0; l < 4; ++l)
        by_angle.push_back({std::arg(cd.values[static_cast<size_t>(l)] - pr.w0), l});
    std::sort(by_angle.begin(), by_angle.end());

    std::vector<std::vector<int>> perms(4);
    for (int l = 0; l < 4; ++l) {
        std::vector<cplx> obstacles;
        for (int i = 0; i < 4; ++i)
            if (i != l) obstacles.push_back(cd.values[static_cast<size_t>(i)]);
        double r = std::min(pr.clearance, 0.5 * std::abs(pr.w0 - cd.values[static_cast<size_t>(l)]));
        perms[static_cast<size_t>(l)] = loop_permutation(pr.trk, pr.fiber, pr.w0, cd.values[static_cast<size_t>(l)],
                                                         r, obstacles, pr.clearance, mesh.steps);
        std::vector<int> moved;
        for (size_t i = 0; i < 5; ++i)
            if (perms[static_cast<size_t>(l)][i] != static_cast<int>(i)) moved.push_back(static_cast<int>(i));
        if (moved.size() != 2) throw Error(Errc::CollisionAmbiguous, "loop monodromy is not a transposition");
        out.pairs.push_back({moved[0] + 1, moved[1] + 1});
    }

    // compose in counter-clockwise emanation order, left to right
    std::vector<int> prod(5);
    for (int i = 0; i < 5; ++i) prod[static_cast<size_t>(i)] = i;
    for (const auto& [ang, l] : by_angle) {
        out.order.push_back(l);
        std::vector<int> nxt(5);
        for (int i = 0; i < 5; ++i) nxt[static_cast<size_t>(i)] = perms[static_cast<size_t>(l)][static_cast<size_t>(prod[static_cast<size_t>(i)])];
        prod = nxt;
    }
    std::vector<bool> seen(5, false);
    for (int i = 0; i < 5; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            ++len;
            j = prod[static_cast<size_t>(j)];
        }
        out.product_cycle_type.push_back(len);
    }
    std::sort(out.product_cycle_type.rbegin(), out.product_cycle_type.rend());
    return out;
}

Classification classify_polynomial(const PolynomialSpec& p, const MeshControl& mesh, const Tolerances& tol) {
    static const Atlas first_atlas = enumerate_first(5, Equivalence::with_rotation);
    static const Atlas second_atlas = enumerate_second(Equivalence::with_rotation);

    CriticalData cd = critical_data(p, tol);
    auto cactus = extract_cactus(p, cd, mesh, tol);

    Classification cl;
    cl.kind = cd.kind;
    if (cd.kind == CaseKind::quadrangle) {
        CactusClass cc = canonical_first(std::get<FirstCactus>(cactus), Equivalence::with_rotation);
        cl.atlas_index = first_atlas.index_of(cc.canonical_key);
        cl.canonical_key = cc.canonical_key;
        cl.shape = shape_descriptor(cc.first()).text;
    } else {
        CactusClass cc = canonical_second(std::get<SecondCactus>(cactus), Equivalence::with_rotation);
        cl.atlas_index = second_atlas.index_of(cc.canonical_key);
        cl.canonical_key = cc.canonical_key;
        cl.shape = shape_descriptor(cc.second()).text;
    }
    return cl;
}

namespace {

// xorshift-free deterministic uniform doubles: 53 bits of an splitmix64
// stream, identical on every platform
struct DetRng {
    unsigned long long state;
    explicit DetRng(unsigned long long seed) : state(seed) {}
    unsigned long long next_u64() {
        state += 0x9e3779b97f4a7c15ull;
        unsigned long long z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; } // [0,1)
    cplx disk(double min_abs = 0.0) {
        for (;;) {
            double re = 2.0 * unit() - 1.0;
            double im = 2.0 * unit() - 1.0;
            double n = re * re + im * im;
            if (n <= 1.0 && n >= min_abs * min_abs) return {re, im};
        }
    }
};

} // namespace

SampleTable sample_classes(int count, unsigned long long seed, const MeshControl& mesh, const Tolerances& tol) {
    if (count <= 0) throw Error(Errc::BadInput, "sample count must be positive");
    SampleTable table;
    table.count = count;
    table.seed = seed;

    DetRng rng(seed);
    for (int i = 0; i < count; ++i) {
        PolynomialSpec p;
        p.coeff[0] = rng.disk(0.1); // keep the polynomial honestly quintic
        for (int c = 1; c < 6; ++c) p.coeff[static_cast<size_t>(c)] = rng.disk();
        try {
            Classification base = classify_polynomial(p, mesh, tol);
            MeshControl halved = mesh;
            halved.steps *= 2;
            Classification fine = classify_polynomial(p, halved, tol);
            if (base.kind == fine.kind && base.atlas_index == fine.atlas_index) {
                ++table.stable;
                std::string key = (base.kind == CaseKind::quadrangle ? "first/" : "second/") +
                                  std::to_string(base.atlas_index);
                ++table.by_class[key];
            } else {
                ++table.failures["MeshInstability"];
            }
        } catch (const Error& e) {
            ++table.failures[errc_name(e.code())];
        }
    }
    return table;
}

PolynomialSpec parse_polynomial_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<cplx> coeffs;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        size_t comma = line.find(',');
        if (comma == std::string::npos) throw Error(Errc::BadInput, "expected 're,im' on line: " + line);
        try {
            size_t used = 0;
            double re = std::stod(line.substr(0, comma), &used);
            double im = std::stod(line.substr(comma + 1), &used);
            coeffs.push_back({re, im});
        } catch (const std::exception&) {
            throw Error(Errc::BadInput, "cannot parse 're,im' on line: " + line);
        }
    }
    if (coeffs.size() != 6)
        throw Error(Errc::BadInput, "expected six coefficient lines, got " + std::to_string(coeffs.size()));
    PolynomialSpec p;
    std::copy(coeffs.begin(), coeffs.end(), p.coeff.begin());
    return p;
}

} // namespace cactus5
