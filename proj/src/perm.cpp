#include "ybmesh/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ybmesh/base.hpp"

namespace ybm {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_permutation(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Perm compose(const Perm& f, const Perm& g) {
    Perm r(g.size());
    for (size_t x = 0; x < g.size(); ++x) r[x] = f[g[x]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
    return r;
}

std::vector<int> cycle_type(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    std::vector<int> type;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (int y = x; !seen[y]; y = p[y]) {
            seen[y] = 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

uint64_t perm_order(const Perm& p) {
    uint64_t o = 1;
    for (int len : cycle_type(p)) o = std::lcm<uint64_t>(o, static_cast<uint64_t>(len));
    return o;
}

std::string format_cycles(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    std::ostringstream os;
    bool any = false;
    for (int x = 0; x < n; ++x) {
        if (seen[x] || p[x] == x) {
            seen[x] = 1;
            continue;
        }
        os << '(';
        bool first = true;
        for (int y = x; !seen[y]; y = p[y]) {
            seen[y] = 1;
            if (!first) os << ' ';
            os << y;
            first = false;
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : "id";
}

Perm parse_image_list(const std::string& s, int expected_n) {
    std::istringstream is(s);
    Perm p;
    int v;
    while (is >> v) p.push_back(v);
    if (!is.eof()) throw InvalidInput("permutation: expected whitespace-separated integers: " + s);
    if (p.empty()) throw InvalidInput("empty permutation");
    if (expected_n >= 0 && static_cast<int>(p.size()) != expected_n)
        throw InvalidInput("permutation has " + std::to_string(p.size()) + " entries, expected " +
                           std::to_string(expected_n));
    if (!is_permutation(p)) throw InvalidInput("not a permutation of {0..n-1}: " + s);
    return p;
}

std::string format_image_list(const Perm& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ' ';
        os << p[i];
    }
    return os.str();
}

}  // namespace ybm
