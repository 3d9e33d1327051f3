#pragma once
// Shared fixture tables for the test suites. Each has a short note of the
// properties it exhibits; the tests assert them.
#include <vector>

#include "ybmesh/abelian.hpp"
#include "ybmesh/lq.hpp"
#include "ybmesh/mesh.hpp"

namespace fx {

using ybm::Table;

// 2-reductive rack, not idempotent: L_0 = L_2 = id, L_1 = L_3 = (02)(13).
inline Table two_red4() {
    return {{0, 1, 2, 3}, {2, 3, 0, 1}, {0, 1, 2, 3}, {2, 3, 0, 1}};
}

// (01)(23)-column-twist of two_red4: 2-permutational, right cyclic, medial,
// not left distributive, not 2-reductive, no identity row.
inline Table twist4() {
    return {{1, 0, 3, 2}, {3, 2, 1, 0}, {1, 0, 3, 2}, {3, 2, 1, 0}};
}

// (0123)-column-twist of two_red4: the other non-distributive level-2 solution
// of size 4.
inline Table cyc4() {
    return {{1, 2, 3, 0}, {3, 0, 1, 2}, {1, 2, 3, 0}, {3, 0, 1, 2}};
}

// 2-permutational 3-element table whose mirror (the division table read as an
// operation) is not 2-permutational.
inline Table two_perm3() { return {{1, 0, 2}, {2, 0, 1}, {2, 0, 1}}; }

// Right cyclic table whose mirror is not right cyclic.
inline Table rc_only4() {
    return {{0, 1, 3, 2}, {2, 3, 1, 0}, {3, 2, 0, 1}, {1, 0, 2, 3}};
}

// Idempotent involutive solution satisfying lri but not 2-reductive:
// L_0 = L_3 = (24), L_1 = (02)(34), L_2 = L_4 = (03).
inline Table lri5() {
    return {{0, 1, 4, 3, 2}, {2, 1, 0, 4, 3}, {3, 1, 2, 0, 4}, {0, 1, 4, 3, 2}, {3, 1, 2, 0, 4}};
}

// 2-permutational but not medial (and not a solution fixture; plain table).
inline Table nonmedial3() { return {{0, 2, 1}, {0, 2, 1}, {1, 2, 0}}; }

// Involutive solution satisfying lri but not 2-permutational:
// L_0 = (02), L_1 = L_3 = id, L_2 = (02)(13).
inline Table lri_not2perm4() {
    return {{2, 1, 0, 3}, {0, 1, 2, 3}, {2, 3, 0, 1}, {0, 1, 2, 3}};
}

// 2-permutational solution with two non-isomorphic distributive untwists:
// L_0 = L_3 = L_4 = (12)(34), L_1 = (03)(12), L_2 = (04)(12).
inline Table perm5() {
    return {{0, 2, 1, 4, 3}, {3, 2, 1, 0, 4}, {4, 2, 1, 3, 0}, {0, 2, 1, 4, 3}, {0, 2, 1, 4, 3}};
}

// Inverse-row-0 untwist of perm5 (idempotent) and inverse-row-1 untwist (not).
inline Table untwist5a() {
    return {{0, 1, 2, 3, 4}, {3, 1, 2, 4, 0}, {4, 1, 2, 0, 3}, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}};
}
inline Table untwist5b() {
    return {{4, 1, 2, 0, 3}, {0, 1, 2, 3, 4}, {3, 1, 2, 4, 0}, {4, 1, 2, 0, 3}, {4, 1, 2, 0, 3}};
}

// Two multipermutation-level-3 solutions of size 4; the first has two
// idempotent elements, the second none.
inline Table level3a() {
    return {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 3, 2}, {1, 0, 3, 2}};
}
inline Table level3b() {
    return {{1, 0, 2, 3}, {1, 0, 2, 3}, {0, 1, 3, 2}, {1, 0, 3, 2}};
}

// Expected completing operation tables (x bullet y).
inline Table two_red4_bullet() {
    return {{0, 2, 0, 2}, {1, 3, 1, 3}, {2, 0, 2, 0}, {3, 1, 3, 1}};
}
inline Table twist4_bullet() {
    return {{3, 1, 3, 1}, {2, 0, 2, 0}, {1, 3, 1, 3}, {0, 2, 0, 2}};
}

// Projection table of size n: x circ y = y.
inline Table projection(int n) {
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = y;
    return t;
}

// Relabel a table by h: result[h(x)][h(y)] = h(t[x][y]).
inline Table relabel(const Table& t, const std::vector<int>& h) {
    int n = (int)t.size();
    Table r(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) r[h[x]][h[y]] = h[t[x][y]];
    return r;
}

// Mesh from per-block invariant-factor lists and a matrix of element indices.
inline ybm::Mesh mk_mesh(const std::vector<std::vector<int>>& factors,
                         const std::vector<std::vector<int>>& constants) {
    ybm::Mesh m;
    for (const auto& f : factors) m.groups.push_back(ybm::make_abelian(f));
    m.constants = constants;
    ybm::validate_mesh(m);
    return m;
}

// The five isomorphism classes of meshes of size 3.
inline std::vector<ybm::Mesh> meshes3() {
    return {
        mk_mesh({{3}}, {{1}}),
        mk_mesh({{2}, {}}, {{1, 0}, {0, 0}}),
        mk_mesh({{2}, {}}, {{0, 0}, {1, 0}}),
        mk_mesh({{2}, {}}, {{1, 0}, {1, 0}}),
        mk_mesh({{}, {}, {}}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
    };
}

// The seventeen isomorphism classes of meshes of size 4.
inline std::vector<ybm::Mesh> meshes4() {
    std::vector<ybm::Mesh> out;
    out.push_back(mk_mesh({{4}}, {{1}}));
    out.push_back(mk_mesh({{3}, {}}, {{0, 0}, {1, 0}}));
    out.push_back(mk_mesh({{3}, {}}, {{1, 0}, {0, 0}}));
    out.push_back(mk_mesh({{3}, {}}, {{1, 0}, {1, 0}}));
    out.push_back(mk_mesh({{3}, {}}, {{2, 0}, {1, 0}}));
    out.push_back(mk_mesh({{2}, {2}}, {{0, 0}, {1, 1}}));
    out.push_back(mk_mesh({{2}, {2}}, {{1, 1}, {1, 0}}));
    out.push_back(mk_mesh({{2}, {2}}, {{1, 0}, {1, 1}}));
    out.push_back(mk_mesh({{2}, {2}}, {{1, 0}, {0, 1}}));
    out.push_back(mk_mesh({{2}, {2}}, {{0, 1}, {1, 0}}));
    out.push_back(mk_mesh({{2}, {2}}, {{1, 1}, {1, 1}}));
    out.push_back(mk_mesh({{2}, {}, {}}, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
    out.push_back(mk_mesh({{2}, {}, {}}, {{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}));
    out.push_back(mk_mesh({{2}, {}, {}}, {{0, 0, 0}, {1, 0, 0}, {1, 0, 0}}));
    out.push_back(mk_mesh({{2}, {}, {}}, {{1, 0, 0}, {0, 0, 0}, {1, 0, 0}}));
    out.push_back(mk_mesh({{2}, {}, {}}, {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}));
    out.push_back(mk_mesh({{}, {}, {}, {}}, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
    return out;
}

// Two-block mesh over Z_4 with constants 1 and 2 crosswise: distributive but
// fails the star condition (no constants column contains 0).
inline ybm::Mesh no_star_mesh8() { return mk_mesh({{4}, {4}}, {{1, 2}, {2, 1}}); }

}  // namespace fx
