#include "ybmesh/abelian.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace ybm {

AbelianGroup make_abelian(std::vector<int> factors) {
    AbelianGroup g;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) throw InvalidInput("invariant factors must be >= 2");
        if (i > 0 && factors[i] % factors[i - 1] != 0)
            throw InvalidInput("invariant factors must form a divisor chain d1 | d2 | ...");
        g.order *= factors[i];
    }
    g.factors = std::move(factors);
    return g;
}

std::vector<int> element_coords(const AbelianGroup& g, int idx) {
    std::vector<int> c(g.factors.size());
    for (int i = static_cast<int>(g.factors.size()) - 1; i >= 0; --i) {
        c[i] = idx % g.factors[i];
        idx /= g.factors[i];
    }
    return c;
}

int coords_index(const AbelianGroup& g, const std::vector<int>& coords) {
    if (coords.size() != g.factors.size()) throw InvalidInput("coordinate arity mismatch");
    int idx = 0;
    for (size_t i = 0; i < coords.size(); ++i) {
        int c = coords[i] % g.factors[i];
        if (c < 0) c += g.factors[i];
        idx = idx * g.factors[i] + c;
    }
    return idx;
}

int group_add(const AbelianGroup& g, int a, int b) {
    int idx = 0, mul = 1, r = 0;
    for (int i = static_cast<int>(g.factors.size()) - 1; i >= 0; --i) {
        const int d = g.factors[i];
        const int ca = a % d, cb = b % d;
        a /= d;
        b /= d;
        idx += ((ca + cb) % d) * mul;
        mul *= d;
        ++r;
    }
    (void)r;
    return idx;
}

int group_neg(const AbelianGroup& g, int a) {
    int idx = 0, mul = 1;
    for (int i = static_cast<int>(g.factors.size()) - 1; i >= 0; --i) {
        const int d = g.factors[i];
        const int ca = a % d;
        a /= d;
        idx += ((d - ca) % d) * mul;
        mul *= d;
    }
    return idx;
}

int group_sub(const AbelianGroup& g, int a, int b) { return group_add(g, a, group_neg(g, b)); }

int element_order(const AbelianGroup& g, int a) {
    int o = 1;
    auto c = element_coords(g, a);
    for (size_t i = 0; i < c.size(); ++i) {
        const int d = g.factors[i];
        const int co = d / std::gcd(c[i], d);  // order of c[i] in Z_d (gcd(0,d) = d)
        o = std::lcm(o, co);
    }
    return o;
}

std::vector<int> generated_subgroup(const AbelianGroup& g, const std::vector<int>& gens) {
    std::set<int> sub{0};
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        int cur = frontier.back();
        frontier.pop_back();
        for (int gen : gens) {
            if (gen < 0 || gen >= g.order) throw InvalidInput("generator index out of range");
            int nxt = group_add(g, cur, gen);
            if (sub.insert(nxt).second) frontier.push_back(nxt);
        }
    }
    return {sub.begin(), sub.end()};
}

bool generates(const AbelianGroup& g, const std::vector<int>& gens) {
    return static_cast<int>(generated_subgroup(g, gens).size()) == g.order;
}

namespace {

// partitions of n as descending lists
void partitions_of(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<AbelianGroup> abelian_groups_of_order(int n) {
    if (n < 1) throw InvalidInput("order must be positive");
    // factor n
    std::vector<std::pair<int, int>> pf;  // (prime, exponent)
    int rem = n;
    for (int p = 2; p * p <= rem; ++p)
        if (rem % p == 0) {
            int e = 0;
            while (rem % p == 0) {
                rem /= p;
                ++e;
            }
            pf.push_back({p, e});
        }
    if (rem > 1) pf.push_back({rem, 1});
    // per prime: all partitions of the exponent
    std::vector<std::vector<std::vector<int>>> choices;
    for (auto [p, e] : pf) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions_of(e, e, cur, parts);
        choices.push_back(std::move(parts));
    }
    std::vector<std::vector<int>> all_factor_lists;
    std::vector<size_t> pick(choices.size(), 0);
    while (true) {
        // combine: j-th largest factor is the product over primes of p^(j-th part)
        size_t r = 0;
        for (size_t i = 0; i < choices.size(); ++i) r = std::max(r, choices[i][pick[i]].size());
        std::vector<int> fs;
        for (size_t j = 0; j < r; ++j) {
            long long d = 1;
            for (size_t i = 0; i < choices.size(); ++i) {
                const auto& part = choices[i][pick[i]];
                int e = j < part.size() ? part[j] : 0;
                for (int t = 0; t < e; ++t) d *= pf[i].first;
            }
            fs.push_back(static_cast<int>(d));
        }
        std::reverse(fs.begin(), fs.end());  // ascending divisor chain
        all_factor_lists.push_back(std::move(fs));
        size_t i = 0;
        while (i < pick.size() && pick[i] + 1 == choices[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
        ++pick[i];
    }
    std::sort(all_factor_lists.begin(), all_factor_lists.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    std::vector<AbelianGroup> out;
    for (auto& fs : all_factor_lists) out.push_back(make_abelian(fs));
    return out;
}

namespace {

std::mutex cache_mutex;

// standard generators: the coordinate unit vectors
std::vector<int> standard_generators(const AbelianGroup& g) {
    std::vector<int> gens;
    for (size_t i = 0; i < g.factors.size(); ++i) {
        std::vector<int> c(g.factors.size(), 0);
        c[i] = 1;
        gens.push_back(coords_index(g, c));
    }
    return gens;
}

std::vector<Perm> compute_automorphisms(const AbelianGroup& g) {
    if (g.order == 1) return {Perm{0}};
    const std::vector<int> gens = standard_generators(g);
    const size_t r = gens.size();
    // candidate images per generator: elements of the same order
    std::vector<std::vector<int>> cands(r);
    for (size_t i = 0; i < r; ++i)
        for (int a = 0; a < g.order; ++a)
            if (element_order(g, a) == g.factors[i]) cands[i].push_back(a);
    std::vector<Perm> autos;
    std::vector<int> img(r, 0);
    std::vector<size_t> pick(r, 0);
    while (true) {
        for (size_t i = 0; i < r; ++i) img[i] = cands[i][pick[i]];
        // linear extension over coordinates; check bijectivity
        Perm map(g.order);
        std::vector<char> seen(g.order, 0);
        bool bij = true;
        for (int a = 0; a < g.order && bij; ++a) {
            auto c = element_coords(g, a);
            int v = 0;
            for (size_t i = 0; i < r; ++i) {
                int term = img[i];
                int acc = 0;
                for (int t = 0; t < c[i]; ++t) acc = group_add(g, acc, term);
                v = group_add(g, v, acc);
            }
            map[a] = v;
            if (seen[v]) bij = false;
            seen[v] = 1;
        }
        if (bij) autos.push_back(map);
        size_t i = 0;
        while (i < r && pick[i] + 1 == cands[i].size()) pick[i++] = 0;
        if (i == r) break;
        ++pick[i];
    }
    return autos;
}

}  // namespace

const std::vector<Perm>& automorphisms(const AbelianGroup& g) {
    static std::map<std::vector<int>, std::vector<Perm>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(g.factors);
    if (it == cache.end()) it = cache.emplace(g.factors, compute_automorphisms(g)).first;
    return it->second;
}

const std::vector<std::vector<int>>& generating_tuples(const AbelianGroup& g, int k) {
    static std::map<std::pair<std::vector<int>, int>, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(g.factors, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(k, 0);
    while (true) {
        if (generates(g, cur)) tuples.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] + 1 == g.order) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return cache.emplace(key, std::move(tuples)).first->second;
}

}  // namespace ybm
