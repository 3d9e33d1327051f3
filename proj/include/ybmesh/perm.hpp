#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace ybm {

// A permutation of {0..n-1} as an image list: p[x] is the image of x.
using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_permutation(const std::vector<int>& p);

// Composition acts right-to-left: compose(f,g)(x) = f(g(x)).
Perm compose(const Perm& f, const Perm& g);
Perm inverse(const Perm& p);

// Cycle lengths including fixed points, sorted ascending.
std::vector<int> cycle_type(const Perm& p);
uint64_t perm_order(const Perm& p);

// "(0 2)(1 3)", "id" for the identity.
std::string format_cycles(const Perm& p);

// Parse a whitespace-separated image list; checks it is a permutation of {0..n-1}
// (any n when expected_n < 0). Throws InvalidInput.
Perm parse_image_list(const std::string& s, int expected_n = -1);
std::string format_image_list(const Perm& p);

}  // namespace ybm
