#include "ybmesh/lq.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ybm {

bool table_shape_ok(const Table& t) {
    const int n = static_cast<int>(t.size());
    if (n == 0) return false;
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != n) return false;
        for (int v : row)
            if (v < 0 || v >= n) return false;
    }
    return true;
}

std::optional<int> find_non_bijective_row(const Table& t) {
    for (size_t x = 0; x < t.size(); ++x)
        if (!is_permutation(t[x])) return static_cast<int>(x);
    return std::nullopt;
}

Table invert_rows(const Table& t) {
    Table r(t.size());
    for (size_t x = 0; x < t.size(); ++x) r[x] = inverse(t[x]);
    return r;
}

LeftQuasigroup lq_from_table(const Table& circ) {
    if (!table_shape_ok(circ)) throw InvalidInput("table is not square over {0..n-1}");
    if (auto bad = find_non_bijective_row(circ))
        throw InvalidInput("row " + std::to_string(*bad) + " is not a bijection");
    LeftQuasigroup q;
    q.n = static_cast<int>(circ.size());
    q.circ = circ;
    q.ldiv = invert_rows(circ);
    return q;
}

int left_divide(const LeftQuasigroup& q, int x, int y) {
    if (x < 0 || x >= q.n || y < 0 || y >= q.n) throw InvalidInput("left_divide: element out of range");
    return q.ldiv[x][y];
}

namespace {

PropertyResult ok_result() { return {true, {}}; }
PropertyResult fail(std::vector<int> w) { return {false, std::move(w)}; }

void charge(WorkGuard* wg, uint64_t k) {
    if (wg) wg->charge(k);
}

}  // namespace

PropertyResult check_property(const LeftQuasigroup& q, LqProperty p, WorkGuard* wg) {
    const int n = q.n;
    const Table& t = q.circ;
    const Table& d = q.ldiv;
    switch (p) {
        case LqProperty::LeftDistributive:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    charge(wg, 4ull * n);
                    const int xy = t[x][y];
                    for (int z = 0; z < n; ++z)
                        if (t[x][t[y][z]] != t[xy][t[x][z]]) return fail({x, y, z});
                }
            return ok_result();
        case LqProperty::Medial:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z) {
                        charge(wg, 4ull * n);
                        const int xy = t[x][y], xz = t[x][z];
                        for (int w = 0; w < n; ++w)
                            if (t[xy][t[z][w]] != t[xz][t[y][w]]) return fail({x, y, z, w});
                    }
            return ok_result();
        case LqProperty::RightCyclic:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    charge(wg, 6ull * n);
                    const int a = d[x][y], a2 = d[y][x];
                    for (int z = 0; z < n; ++z)
                        if (d[a][d[x][z]] != d[a2][d[y][z]]) return fail({x, y, z});
                }
            return ok_result();
        case LqProperty::Idempotent:
            charge(wg, n);
            for (int x = 0; x < n; ++x)
                if (t[x][x] != x) return fail({x});
            return ok_result();
        case LqProperty::NonDegenerate: {
            charge(wg, 2ull * n);
            Perm tm = t_map(q);
            if (!is_permutation(tm)) {
                for (int x = 0; x < q.n; ++x)
                    for (int y = x + 1; y < q.n; ++y)
                        if (tm[x] == tm[y]) return fail({x, y});
            }
            return ok_result();
        }
        case LqProperty::ConditionStar:
            charge(wg, 1ull * n * n);
            for (int x = 0; x < n; ++x) {
                bool found = false;
                for (int a = 0; a < n && !found; ++a) found = (t[a][x] == x);
                if (!found) return fail({x});
            }
            return ok_result();
    }
    throw InvalidInput("unknown property");
}

PropertyResult check_m_reductive(const LeftQuasigroup& q, int m, WorkGuard* wg) {
    if (m < 1) throw InvalidInput("m-reductive requires m >= 1");
    const int n = q.n;
    const Table& t = q.circ;
    if (m == 2) {  // translation form: row of x*y equals row of y
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                charge(wg, n);
                if (t[t[x][y]] != t[y]) return fail({x, y});
            }
        return ok_result();
    }
    // x0*x1*...*xm  ==  x1*...*xm  for every (m+1)-tuple, folding left
    std::vector<int> xs(m + 1, 0);
    while (true) {
        charge(wg, 2ull * m);
        int lhs = xs[0];
        for (int i = 1; i <= m; ++i) lhs = t[lhs][xs[i]];
        int rhs = xs[1];
        for (int i = 2; i <= m; ++i) rhs = t[rhs][xs[i]];
        if (lhs != rhs) return fail(xs);
        int i = m;
        while (i >= 0 && xs[i] == n - 1) xs[i--] = 0;
        if (i < 0) break;
        ++xs[i];
    }
    return ok_result();
}

PropertyResult check_m_permutational(const LeftQuasigroup& q, int m, WorkGuard* wg) {
    if (m < 1) throw InvalidInput("m-permutational requires m >= 1");
    const int n = q.n;
    const Table& t = q.circ;
    if (m == 2) {  // for each x the row of z*x does not depend on z
        for (int x = 0; x < n; ++x) {
            const int r0 = t[0][x];
            for (int z = 1; z < n; ++z) {
                charge(wg, n);
                if (t[t[z][x]] != t[r0]) return fail({0, z, x});
            }
        }
        return ok_result();
    }
    // x*x1*...*xm independent of x, for every m-tuple
    std::vector<int> xs(m, 0);
    while (true) {
        charge(wg, 2ull * m * n);
        int base = 0;
        for (int i = 0; i < m; ++i) base = t[base][xs[i]];
        for (int x = 1; x < n; ++x) {
            int v = x;
            for (int i = 0; i < m; ++i) v = t[v][xs[i]];
            if (v != base) {
                std::vector<int> w{0, x};
                w.insert(w.end(), xs.begin(), xs.end());
                return fail(w);
            }
        }
        int i = m - 1;
        while (i >= 0 && xs[i] == n - 1) xs[i--] = 0;
        if (i < 0) break;
        ++xs[i];
    }
    return ok_result();
}

Perm t_map(const LeftQuasigroup& q) {
    Perm tm(q.n);
    for (int x = 0; x < q.n; ++x) tm[x] = q.ldiv[x][x];
    return tm;
}

std::vector<int> row_classes(const Table& circ) {
    const int n = static_cast<int>(circ.size());
    std::vector<int> cls(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        cls[x] = next;
        for (int y = x + 1; y < n; ++y)
            if (cls[y] < 0 && circ[y] == circ[x]) cls[y] = next;
        ++next;
    }
    return cls;
}

PermGroup close_group(const std::vector<Perm>& generators, int n, WorkGuard* wg) {
    PermGroup g;
    std::set<Perm> gen_set(generators.begin(), generators.end());
    g.generators.assign(gen_set.begin(), gen_set.end());
    std::set<Perm> elems;
    std::vector<Perm> frontier;
    Perm id = identity_perm(n);
    elems.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        Perm cur = std::move(frontier.back());
        frontier.pop_back();
        for (const Perm& gen : g.generators) {
            charge(wg, n);
            Perm nxt = compose(gen, cur);
            if (elems.insert(nxt).second) frontier.push_back(std::move(nxt));
        }
    }
    g.elements.assign(elems.begin(), elems.end());
    g.abelian = true;
    for (size_t i = 0; i < g.generators.size() && g.abelian; ++i)
        for (size_t j = i + 1; j < g.generators.size() && g.abelian; ++j)
            g.abelian = compose(g.generators[i], g.generators[j]) ==
                        compose(g.generators[j], g.generators[i]);
    return g;
}

PermGroup lmlt(const LeftQuasigroup& q, WorkGuard* wg) { return close_group(q.circ, q.n, wg); }

std::vector<std::vector<int>> group_orbits(const PermGroup& g, int n) {
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (const Perm& gen : g.generators)
        for (int x = 0; x < n; ++x) {
            int a = find(x), b = find(gen[x]);
            if (a != b) root[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, std::vector<int>> buckets;
    for (int x = 0; x < n; ++x) buckets[find(x)].push_back(x);
    std::vector<std::vector<int>> orbits;
    for (auto& [rep, members] : buckets) orbits.push_back(std::move(members));
    return orbits;
}

std::optional<std::vector<int>> abelian_invariant_factors(const PermGroup& g) {
    if (!g.abelian) return std::nullopt;
    const uint64_t order = g.elements.size();
    std::vector<uint64_t> elt_orders;
    elt_orders.reserve(g.elements.size());
    for (const Perm& e : g.elements) elt_orders.push_back(perm_order(e));
    // primes dividing the group order
    std::vector<uint64_t> primes;
    uint64_t rem = order;
    for (uint64_t p = 2; p * p <= rem; ++p)
        if (rem % p == 0) {
            primes.push_back(p);
            while (rem % p == 0) rem /= p;
        }
    if (rem > 1) primes.push_back(rem);
    // per prime: exponents of the cyclic p-power summands, descending
    std::vector<std::vector<int>> exps;
    for (uint64_t p : primes) {
        std::vector<int> m;  // m[i] = log_p #{ g : order(g) divides p^i }, i >= 0
        m.push_back(0);
        for (uint64_t pi = p;; pi *= p) {
            uint64_t cnt = 0;
            for (uint64_t o : elt_orders)
                if (pi % o == 0) ++cnt;
            int e = 0;
            for (uint64_t v = cnt; v > 1; v /= p) ++e;
            m.push_back(e);
            if (cnt == order || m[m.size() - 1] == m[m.size() - 2]) break;
        }
        std::vector<int> parts;  // parts[t] = #summands with exponent >= t+1
        for (size_t i = 1; i < m.size(); ++i) parts.push_back(m[i] - m[i - 1]);
        std::vector<int> elist;  // summand exponents, descending (conjugate partition)
        if (!parts.empty()) {
            int max_summands = parts[0];
            for (int s = 0; s < max_summands; ++s) {
                int e = 0;
                for (int c : parts)
                    if (c > s) ++e;
                elist.push_back(e);
            }
        }
        exps.push_back(std::move(elist));
    }
    size_t r = 0;
    for (const auto& e : exps) r = std::max(r, e.size());
    std::vector<int> factors;
    for (size_t j = 0; j < r; ++j) {  // j-th largest factor
        uint64_t d = 1;
        for (size_t pi = 0; pi < primes.size(); ++pi) {
            int e = j < exps[pi].size() ? exps[pi][j] : 0;
            for (int t = 0; t < e; ++t) d *= primes[pi];
        }
        if (d > 1) factors.push_back(static_cast<int>(d));
    }
    std::reverse(factors.begin(), factors.end());  // ascending, d1 | d2 | ...
    return factors;
}

namespace {

// Per-element invariant used to prune isomorphism search.
std::vector<std::vector<int>> element_invariants(const Table& t) {
    const int n = static_cast<int>(t.size());
    std::vector<int> cls = row_classes(t);
    std::vector<int> cls_size(n, 0);
    for (int c : cls) ++cls_size[c];
    LeftQuasigroup q;
    q.n = n;
    q.circ = t;
    q.ldiv = invert_rows(t);
    PermGroup g = lmlt(q);
    auto orbits = group_orbits(g, n);
    std::vector<int> orbit_size(n, 0);
    for (const auto& o : orbits)
        for (int x : o) orbit_size[x] = static_cast<int>(o.size());
    std::vector<std::vector<int>> inv(n);
    for (int x = 0; x < n; ++x) {
        inv[x] = cycle_type(t[x]);
        inv[x].push_back(cls_size[cls[x]]);
        inv[x].push_back(t[x][x] == x ? 1 : 0);
        inv[x].push_back(orbit_size[x]);
    }
    return inv;
}

bool extend_iso(const Table& a, const Table& b, const std::vector<std::vector<int>>& ia,
                const std::vector<std::vector<int>>& ib, Perm& h, Perm& hinv, int x,
                WorkGuard* wg) {
    const int n = static_cast<int>(a.size());
    if (x == n) return true;
    for (int v = 0; v < n; ++v) {
        if (hinv[v] >= 0 || ia[x] != ib[v]) continue;
        h[x] = v;
        hinv[v] = x;
        bool ok = true;
        charge(wg, 4ull * (x + 1));
        for (int y = 0; y <= x && ok; ++y) {
            // both (x,y) and (y,x) products must be consistent
            for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
                const int w = a[p][q];
                const int tv = b[h[p]][h[q]];
                if (h[w] >= 0 ? h[w] != tv : hinv[tv] >= 0) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && extend_iso(a, b, ia, ib, h, hinv, x + 1, wg)) return true;
        h[x] = -1;
        hinv[v] = -1;
    }
    return false;
}

}  // namespace

std::optional<Perm> table_isomorphism(const Table& a, const Table& b, WorkGuard* wg) {
    if (a.size() != b.size()) return std::nullopt;
    const int n = static_cast<int>(a.size());
    if (n == 0) return Perm{};
    auto ia = element_invariants(a);
    auto ib = element_invariants(b);
    auto sa = ia;
    auto sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    Perm h(n, -1), hinv(n, -1);
    if (!extend_iso(a, b, ia, ib, h, hinv, 0, wg)) return std::nullopt;
    return h;
}

}  // namespace ybm
