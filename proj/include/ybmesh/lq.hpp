#pragma once
#include <optional>
#include <vector>

#include "ybmesh/base.hpp"
#include "ybmesh/perm.hpp"

namespace ybm {

// Operation table over {0..n-1}: table[x][y] is x applied to y.
using Table = std::vector<std::vector<int>>;

bool table_shape_ok(const Table& t);                     // square, entries in range
std::optional<int> find_non_bijective_row(const Table& t);
Table invert_rows(const Table& t);                        // row-wise permutation inverse

// Left quasigroup: every row of circ is a permutation; ldiv is the row-wise
// inverse, so circ[x][ldiv[x][y]] == y == ldiv[x][circ[x][y]].
struct LeftQuasigroup {
    int n = 0;
    Table circ;
    Table ldiv;
};

LeftQuasigroup lq_from_table(const Table& circ);  // throws InvalidInput on a bad row
int left_divide(const LeftQuasigroup& q, int x, int y);

struct PropertyResult {
    bool holds = false;
    std::vector<int> witness;  // offending tuple when holds is false
};

enum class LqProperty {
    LeftDistributive,   // x(yz) == (xy)(xz)
    Medial,             // (xy)(zt) == (xz)(yt)
    RightCyclic,        // (x\y)\(x\z) == (y\x)\(y\z)
    Idempotent,         // xx == x
    NonDegenerate,      // x -> x\x is bijective
    ConditionStar,      // every x has some a with ax == x
};

PropertyResult check_property(const LeftQuasigroup& q, LqProperty p, WorkGuard* wg = nullptr);

// m-reductive: x0*x1*...*xm == x1*...*xm (left-associated), all tuples.
// m-permutational: the value of x*x1*...*xm does not depend on x.
// m == 2 uses the equivalent row comparisons (translation form).
PropertyResult check_m_reductive(const LeftQuasigroup& q, int m, WorkGuard* wg = nullptr);
PropertyResult check_m_permutational(const LeftQuasigroup& q, int m, WorkGuard* wg = nullptr);

// x -> x\x (the diagonal of the division table).
Perm t_map(const LeftQuasigroup& q);

// Partition of {0..n-1} by equal rows of circ; class ids numbered in order of
// least representative.
std::vector<int> row_classes(const Table& circ);

// Subgroup of S_n generated by a set of permutations, fully materialized.
struct PermGroup {
    std::vector<Perm> generators;  // deduplicated input
    std::vector<Perm> elements;    // sorted lexicographically
    bool abelian = false;
};

PermGroup close_group(const std::vector<Perm>& generators, int n, WorkGuard* wg = nullptr);
PermGroup lmlt(const LeftQuasigroup& q, WorkGuard* wg = nullptr);  // generated by the rows

// Orbits of the natural action; each orbit sorted, orbits ordered by minimum.
std::vector<std::vector<int>> group_orbits(const PermGroup& g, int n);

// Invariant factors d1 | d2 | ... (each >= 2, empty for the trivial group) of an
// abelian permutation group, from element-order statistics. nullopt if not abelian.
std::optional<std::vector<int>> abelian_invariant_factors(const PermGroup& g);

// Isomorphism of plain operation tables: a bijection h with h(x*y) = h(x)*h(y).
std::optional<Perm> table_isomorphism(const Table& a, const Table& b, WorkGuard* wg = nullptr);

}  // namespace ybm
