#pragma once

#include <string>
#include <vector>

#include "cactus5/cactus.hpp"

// Independent permutation oracle.
//
// A degree-n cactus corresponds to a tuple of n-1 transpositions whose
// left-to-right product is the reference cycle rho = (1 2 ... n): sheet i of
// the covering is oval i, and the transposition in slot l names the two
// sheets glued at label l. Conjugating a tuple by a power of rho re-names
// sheets compatibly with the cyclic structure, so fixed-label classes are
// exactly tuple orbits under that action.

namespace cactus5 {

class Perm {
  public:
    Perm() = default;
    explicit Perm(int n); // identity
    static Perm identity(int n) { return Perm(n); }
    static Perm transposition(int n, int a, int b); // 1-based points
    static Perm reference_cycle(int n);             // rho = (1 2 ... n)

    int size() const { return static_cast<int>(img_.size()); }
    int apply(int p) const { return img_[static_cast<size_t>(p - 1)] + 1; } // 1-based
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    Perm inverse() const;
    bool is_transposition() const;
    std::pair<int, int> transposed_points() const; // BadInput unless is_transposition
    std::string cycle_string() const;              // e.g. "(1 3 2)"

  private:
    std::vector<int> img_; // 0-based images
    friend Perm compose(const Perm&, const Perm&);
    friend Perm conjugate(const Perm&, const Perm&);
    friend std::vector<int> cycle_type(const Perm&);
};

// Left-to-right composition: result(p) = b(a(p)).
Perm compose(const Perm& a, const Perm& b);

// g^-1 * a * g in left-to-right convention (apply g to the points of a).
Perm conjugate(const Perm& a, const Perm& g);

// Cycle lengths, descending.
std::vector<int> cycle_type(const Perm& a);

enum class TupleKind { quadrangle, triangle };

// quadrangle: all n-1 slots are border transpositions.
// triangle: the last slot is the inner transposition delta, the rest are
// border slots (only meaningful at n == 5, where it encodes a second-type
// cactus).
struct MonodromyTuple {
    TupleKind kind = TupleKind::quadrangle;
    std::vector<Perm> parts;
};

// All tuples of n-1 transpositions with left-to-right product rho, in
// lexicographic order. Supported for 3 <= n <= 7.
std::vector<MonodromyTuple> enumerate_tuples(int n, TupleKind kind);

// Slot l names the pair of ovals glued at label l.
FirstCactus tuple_to_first(const MonodromyTuple& t);

// n == 5, triangle kind: delta's pair is the big oval; a border slot
// touching the big pair gets chamber x when it touches the smaller point of
// delta's pair, y otherwise (the reference cut sits in the (2,0) gaps, which
// is what placing delta last in the product realizes).
SecondCactus tuple_to_second(const MonodromyTuple& t);

// Conjugate every part by g.
MonodromyTuple conjugate_tuple(const MonodromyTuple& t, const Perm& g);

struct OracleReport {
    int n = 0;
    long long tuple_count = 0;       // tuples with product rho
    long long class_count = 0;       // orbits under conjugation by powers of rho
    long long per_class = 0;         // tuples per orbit (uniform when agree)
    bool agree = true;               // orbit census matches the tree census
    long long tree_fixed_count = 0;  // fixed-label classes via trees
    long long tree_rotated_count = 0;
};

// Cross-checks tuple orbits against tree enumeration for 3 <= n <= 6.
OracleReport oracle_report(int n);

} // namespace cactus5
