#pragma once
#include <array>

#include "ybmesh/birack.hpp"

namespace ybm {

// Column twist: t[x][y] = circ[x][pi[y]]. Rows stay permutations.
Table lq_isotope(const Table& circ, const Perm& pi);

// rho(y) * rho(x*z) == rho(x) * rho(y*z) for all x,y,z.
bool check_sigma(const Table& circ, const Perm& rho, std::array<int, 3>* witness = nullptr);

// Sufficient conditions on (table, pi) for properties of the pi-isotope,
// phrased on the base table. L_x below is row x, juxtaposition is composition.
enum class IsoCondition {
    IsotopeTwoReductive,    // L_{x * pi(y)} == L_y
    IsotopeCommuting,       // L_x pi L_y == L_y pi L_x
    IsotopeTwoPermutational,// L_{x * pi(z)} == L_{y * pi(z)}
    IsotopeDistributive,    // L_{x * pi(y)} pi L_x == L_x pi L_y
};

PropertyResult check_iso_condition(const LeftQuasigroup& q, const Perm& pi, IsoCondition c,
                                   WorkGuard* wg = nullptr);

// pi-isotope of an involutive solution: circ' = lq_isotope(circ, pi), with the
// completing operation rebuilt from circ'. Throws InvalidInput when circ' is
// not right cyclic (no involutive solution exists on it).
InvolutiveBirack birack_isotope(const InvolutiveBirack& b, const Perm& pi);

// The inverse-row-e isotope of a 2-permutational solution; the result is
// distributive and row e of it is the identity. Throws InvalidInput when the
// input is not 2-permutational.
InvolutiveBirack to_distributive(const InvolutiveBirack& b, int e);

// Whether the automorphism h of the base table carries the alpha-isotope onto
// the beta-isotope: true iff alpha == h^-1 beta h. Throws InvalidInput when h
// is not an automorphism.
bool isotope_isomorphism_by_automorphism(const LeftQuasigroup& q, const Perm& h,
                                         const Perm& alpha, const Perm& beta);

}  // namespace ybm
