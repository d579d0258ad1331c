#pragma once

#include <array>
#include <complex>
#include <map>
#include <variant>
#include <vector>

#include "cactus5/canonical.hpp"

// Numeric realization: from a concrete degree-5 polynomial to its cactus
// class by root continuation.
//
// The four critical values of a generic quintic are distinct, no three
// collinear, and their convex hull either has all four as corners
// (quadrangle case, first family) or three corners with the fourth strictly
// inside (triangle case, second family). Starting from the five roots of
// p(z) = w0 at an interior basepoint, each root is continued along a probe
// path toward a critical value; the two branches that meet at the critical
// point name the ovals glued at that label. In the triangle case a loop
// around the interior value determines the big oval's sheet pair, and the
// hexagon position of each gluing follows from which sheet met it together
// with which counter-clockwise probe sector contains the interior value
// (that sector is where the reference cut leaves the triangle).

namespace cactus5 {

using cplx = std::complex<double>;

struct PolynomialSpec {
    std::array<cplx, 6> coeff; // highest degree first: coeff[0] z^5 ... coeff[5]
};

enum class CaseKind { quadrangle, triangle };

struct Tolerances {
    double residual = 1e-12;   // root refinement, relative to coefficient scale
    double genericity = 1e-9;  // distinctness / collinearity, relative to value scale
    double collision = 1e-6;   // collision radius, relative to z scale
};

struct CriticalData {
    CaseKind kind = CaseKind::quadrangle;
    // labels 0..3; quadrangle: counter-clockwise hull order; triangle:
    // 0..2 counter-clockwise border, 3 interior
    std::array<cplx, 4> points; // critical points z_l
    std::array<cplx, 4> values; // u_l = p(z_l)
    double scale_z = 1.0;
    double scale_v = 1.0;
};

struct MeshControl {
    int steps = 64;      // subdivisions per probe segment (adaptive bisection on top)
    int max_bisect = 40; // bisection depth before Divergence
};

// Critical points/values plus genericity classification.
// Throws NonQuintic (leading coefficient vanishes) and GenericityError
// (coincident or collinear values, hull degeneracies).
CriticalData critical_data(const PolynomialSpec& p, const Tolerances& tol = {});

// Full continuation read-out. Returns the concrete cactus; oval ids number
// the basepoint fiber roots in lexicographic (re, im) order.
std::variant<FirstCactus, SecondCactus> extract_cactus(const PolynomialSpec& p, const CriticalData& cd,
                                                       const MeshControl& mesh = {},
                                                       const Tolerances& tol = {});

struct Classification {
    CaseKind kind = CaseKind::quadrangle;
    int atlas_index = -1;        // in the with_rotation atlas of the family
    std::string canonical_key;   // bytes; hex via key_to_hex
    std::string shape;           // shape descriptor text
};

Classification classify_polynomial(const PolynomialSpec& p, const MeshControl& mesh = {},
                                   const Tolerances& tol = {});

struct SampleTable {
    int count = 0;
    unsigned long long seed = 0;
    std::map<std::string, int> by_class;  // "first/3" style keys -> hits
    std::map<std::string, int> failures;  // error code name -> count
    int stable = 0;                       // samples whose class survived mesh halving
};

// Seeded random quintics (coefficients uniform on the unit disk, leading
// coefficient kept away from zero), classified at the given mesh and at the
// halved step. Deterministic for a fixed seed.
SampleTable sample_classes(int count, unsigned long long seed, const MeshControl& mesh = {},
                           const Tolerances& tol = {});

// Monodromy read-out along the same probe paths (loops around every critical
// value, counter-clockwise, composed in the counter-clockwise order the
// probes leave the basepoint). Used to cross-check extract_cactus against
// the permutation oracle.
struct NumericMonodromy {
    std::vector<std::pair<int, int>> pairs; // transposed fiber indices per label, 1-based
    std::vector<int> order;                 // labels in ccw probe order (incl. 3 = inner for triangle)
    std::vector<int> product_cycle_type;    // of the composed loops
};
NumericMonodromy numeric_monodromy(const PolynomialSpec& p, const CriticalData& cd,
                                   const MeshControl& mesh = {}, const Tolerances& tol = {});

// Helpers shared with the CLI.
PolynomialSpec parse_polynomial_text(const std::string& text); // six "re,im" lines, highest first
cplx evaluate(const PolynomialSpec& p, cplx z);
std::array<cplx, 5> derivative(const PolynomialSpec& p);

} // namespace cactus5
