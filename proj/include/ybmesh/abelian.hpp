#pragma once
#include <vector>

#include "ybmesh/base.hpp"
#include "ybmesh/perm.hpp"

namespace ybm {

// Finite abelian group in invariant-factor form Z_{d1} x ... x Z_{dr} with
// d1 | d2 | ... | dr, every di >= 2; empty factors = trivial group.
// Elements are indices 0..order-1, encoded row-major over the coordinate tuple.
struct AbelianGroup {
    std::vector<int> factors;
    int order = 1;
};

AbelianGroup make_abelian(std::vector<int> factors);  // validates the divisor chain

std::vector<int> element_coords(const AbelianGroup& g, int idx);
int coords_index(const AbelianGroup& g, const std::vector<int>& coords);

int group_add(const AbelianGroup& g, int a, int b);
int group_neg(const AbelianGroup& g, int a);
int group_sub(const AbelianGroup& g, int a, int b);
int element_order(const AbelianGroup& g, int a);

// Sorted element indices of the subgroup generated by gens.
std::vector<int> generated_subgroup(const AbelianGroup& g, const std::vector<int>& gens);
bool generates(const AbelianGroup& g, const std::vector<int>& gens);

// All isomorphism types of order n, sorted by number of factors then
// lexicographically on the factor list.
std::vector<AbelianGroup> abelian_groups_of_order(int n);

// Automorphisms as permutations of element indices (cached per factor list).
const std::vector<Perm>& automorphisms(const AbelianGroup& g);

// All k-tuples of element indices that generate g (cached per factor list and k).
const std::vector<std::vector<int>>& generating_tuples(const AbelianGroup& g, int k);

}  // namespace ybm
