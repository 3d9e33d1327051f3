#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "ybmesh/abelian.hpp"
#include "ybmesh/birack.hpp"

namespace ybm {

// Block construction data: one abelian group per orbit and a matrix of
// constants, constants[i][j] an element index of groups[j], subject to the
// generation condition: for each j the column {constants[i][j] : i} generates
// groups[j].
struct Mesh {
    std::vector<AbelianGroup> groups;
    std::vector<std::vector<int>> constants;
};

void validate_mesh(const Mesh& m);  // throws InvalidInput
int mesh_size(const Mesh& m);
std::vector<int> mesh_offsets(const Mesh& m);  // block carrier offsets; last entry = total size

// The solution on the disjoint union of the groups: with x in block i and y in
// block j (coordinates a, b),
//   x circ y   = b + constants[i][j]   (in block j)
//   x bullet y = a - constants[j][i]   (in block i).
InvolutiveBirack mesh_sum(const Mesh& m);

bool mesh_condition_star(const Mesh& m);  // every constants column contains zero
bool mesh_is_idempotent(const Mesh& m);   // all diagonal constants are zero

// Mesh isomorphism: a block bijection pi (preserving group types) plus group
// isomorphisms psi_i : groups[i] -> b.groups[pi(i)] carrying a's constants to
// b's: psi_j(a.constants[i][j]) == b.constants[pi(i)][pi(j)].
struct MeshIso {
    Perm block_map;
    std::vector<Perm> group_maps;  // on element indices
};
std::optional<MeshIso> mesh_iso(const Mesh& a, const Mesh& b);

// Canonical representative of the isomorphism class: groups sorted by
// (order, factors), constants minimized lexicographically (flattened, row-major)
// over all block permutations and automorphism tuples.
Mesh canonical_mesh(const Mesh& m);

// Byte key of the canonical form: group signature then flattened constants.
std::string mesh_key(const Mesh& m);

// All meshes of total size n up to isomorphism, canonical representatives in a
// deterministic order. jobs <= 0 means one worker per available core.
std::vector<Mesh> enumerate_meshes(int n, int jobs = 0, WorkGuard* wg = nullptr);

// One group repeated once per generator, with constants[i][j] = generators[i].
// The permutation group of the sum is isomorphic to the group itself.
Mesh iyb_mesh(const AbelianGroup& g, const std::vector<int>& generators);

}  // namespace ybm
