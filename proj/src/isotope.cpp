#include "ybmesh/isotope.hpp"

#include <string>

namespace ybm {

Table lq_isotope(const Table& circ, const Perm& pi) {
    const int n = static_cast<int>(circ.size());
    if (static_cast<int>(pi.size()) != n || !is_permutation(pi))
        throw InvalidInput("isotope permutation must be a permutation of {0..n-1}");
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = circ[x][pi[y]];
    return t;
}

bool check_sigma(const Table& circ, const Perm& rho, std::array<int, 3>* witness) {
    const int n = static_cast<int>(circ.size());
    if (static_cast<int>(rho.size()) != n || !is_permutation(rho))
        throw InvalidInput("sigma check needs a permutation of {0..n-1}");
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)  // the condition is symmetric in x and y
            for (int z = 0; z < n; ++z)
                if (circ[rho[y]][rho[circ[x][z]]] != circ[rho[x]][rho[circ[y][z]]]) {
                    if (witness) *witness = {x, y, z};
                    return false;
                }
    return true;
}

PropertyResult check_iso_condition(const LeftQuasigroup& q, const Perm& pi, IsoCondition c,
                                   WorkGuard* wg) {
    const int n = q.n;
    if (static_cast<int>(pi.size()) != n || !is_permutation(pi))
        throw InvalidInput("isotope permutation must be a permutation of {0..n-1}");
    const Table& t = q.circ;
    auto charge = [&](uint64_t k) {
        if (wg) wg->charge(k);
    };
    switch (c) {
        case IsoCondition::IsotopeTwoReductive:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    charge(n);
                    if (t[t[x][pi[y]]] != t[y]) return {false, {x, y}};
                }
            return {true, {}};
        case IsoCondition::IsotopeCommuting:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    charge(4ull * n);
                    for (int z = 0; z < n; ++z)
                        if (t[x][pi[t[y][z]]] != t[y][pi[t[x][z]]]) return {false, {x, y, z}};
                }
            return {true, {}};
        case IsoCondition::IsotopeTwoPermutational:
            for (int z = 0; z < n; ++z) {
                charge(2ull * n * n);
                const int r0 = t[0][pi[z]];
                for (int x = 1; x < n; ++x)
                    if (t[t[x][pi[z]]] != t[r0]) return {false, {0, x, z}};
            }
            return {true, {}};
        case IsoCondition::IsotopeDistributive:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    charge(5ull * n);
                    const int xy = t[x][pi[y]];
                    for (int z = 0; z < n; ++z)
                        if (t[xy][pi[t[x][z]]] != t[x][pi[t[y][z]]]) return {false, {x, y, z}};
                }
            return {true, {}};
    }
    throw InvalidInput("unknown isotope condition");
}

InvolutiveBirack birack_isotope(const InvolutiveBirack& b, const Perm& pi) {
    Table t = lq_isotope(b.circ, pi);
    try {
        return birack_from_cycle_set(t);
    } catch (const InvalidInput& e) {
        throw InvalidInput(std::string("isotope does not carry an involutive solution: ") +
                           e.what());
    }
}

InvolutiveBirack to_distributive(const InvolutiveBirack& b, int e) {
    if (e < 0 || e >= b.n) throw InvalidInput("base element out of range");
    LeftQuasigroup q{b.n, b.circ, b.ldiv};
    if (auto tp = check_m_permutational(q, 2); !tp.holds)
        throw InvalidInput("solution is not 2-permutational; no distributive twist exists");
    return birack_isotope(b, inverse(b.circ[e]));
}

bool isotope_isomorphism_by_automorphism(const LeftQuasigroup& q, const Perm& h,
                                         const Perm& alpha, const Perm& beta) {
    const int n = q.n;
    if (static_cast<int>(h.size()) != n || !is_permutation(h))
        throw InvalidInput("h must be a permutation of {0..n-1}");
    if (static_cast<int>(alpha.size()) != n || !is_permutation(alpha) ||
        static_cast<int>(beta.size()) != n || !is_permutation(beta))
        throw InvalidInput("isotope permutations must be permutations of {0..n-1}");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (h[q.circ[x][y]] != q.circ[h[x]][h[y]])
                throw InvalidInput("h is not an automorphism of the table (fails at (" +
                                   std::to_string(x) + "," + std::to_string(y) + "))");
    return alpha == compose(inverse(h), compose(beta, h));
}

}  // namespace ybm
