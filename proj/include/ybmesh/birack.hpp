#pragma once
#include <array>
#include <optional>

#include "ybmesh/lq.hpp"

namespace ybm {

// Involutive solution carrier: circ rows and bullet columns are permutations,
// the pair map r(x,y) = (circ[x][y], bullet[x][y]) satisfies the braid relation
// and r*r = id. bdiv is the column-wise inverse of bullet: bdiv[bullet[x][y]][y] == x.
struct InvolutiveBirack {
    int n = 0;
    Table circ, ldiv;
    Table bullet, bdiv;
};

// Validates everything (shape, bijectivity, compatibility axioms, involutivity).
InvolutiveBirack birack_from_tables(const Table& circ, const Table& bullet);

// Builds the unique involutive structure over a right-cyclic non-degenerate
// left quasigroup table: bullet[x][y] = ldiv[circ[x][y]][x].
InvolutiveBirack birack_from_cycle_set(const Table& circ);

struct BraidResult {
    bool ok = false;
    std::array<int, 3> witness{};  // offending triple when !ok
};

BraidResult check_braid(const Table& circ, const Table& bullet);
bool check_involutive(const Table& circ, const Table& bullet,
                      std::array<int, 2>* witness = nullptr);  // r*r == id

enum class BirackProperty {
    Braid,
    Involutive,
    Lri,               // (x*y)&x == y == x*(y&x)   (* = circ, & = bullet)
    Distributive,      // circ left distributive and bullet right distributive
    TwoReductive,      // row of circ[x][y] equals row of y
    TwoPermutational,  // row of circ[z][x] independent of z
    Medial,
    RightCyclic,
    Idempotent,
    ConditionStar,
    NonDegenerate,
    OnePermutational,  // all circ rows equal
    Irretractable,     // all row classes are singletons
};

PropertyResult check_birack_property(const InvolutiveBirack& b, BirackProperty p,
                                     WorkGuard* wg = nullptr);

struct Retraction {
    InvolutiveBirack quotient;
    std::vector<int> class_of;  // element -> quotient index (by least representative)
};

Retraction retraction(const InvolutiveBirack& b);

// Diagnostic: the partition by equal circ rows should coincide with the
// partition by equal bullet columns on any involutive birack. Returns true when
// they agree; a mismatch signals a broken structure and is surfaced as a
// warning by callers, never as a crash.
bool retraction_partitions_agree(const InvolutiveBirack& b);

struct MpLevel {
    bool multipermutation = false;  // false: retraction reaches a fixed point > 1
    int level = 0;                  // valid when multipermutation
};

MpLevel mp_level(const InvolutiveBirack& b);

// Bijection h with h(x circ y) = h(x) circ h(y); the bullet operation is
// determined by circ on involutive biracks, so this is a full isomorphism.
std::optional<Perm> birack_isomorphism(const InvolutiveBirack& a, const InvolutiveBirack& b,
                                       WorkGuard* wg = nullptr);

struct GroupStructure {
    uint64_t order = 0;
    bool abelian = false;
    std::vector<int> invariant_factors;  // set when abelian; empty = trivial group
};

// Structure of the permutation group generated by all circ rows and all bullet
// columns of the solution.
GroupStructure permutation_group_structure(const InvolutiveBirack& b, WorkGuard* wg = nullptr);

}  // namespace ybm
