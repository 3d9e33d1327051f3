#include "ybmesh/mesh.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace ybm {

void validate_mesh(const Mesh& m) {
    const size_t k = m.groups.size();
    if (k == 0) throw InvalidInput("mesh needs at least one orbit group");
    if (m.constants.size() != k) throw InvalidInput("constants matrix must have one row per orbit");
    for (size_t i = 0; i < k; ++i) {
        if (m.constants[i].size() != k)
            throw InvalidInput("constants matrix must have one column per orbit");
        for (size_t j = 0; j < k; ++j) {
            const int c = m.constants[i][j];
            if (c < 0 || c >= m.groups[j].order)
                throw InvalidInput("constant (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") is not an element of orbit group " + std::to_string(j));
        }
    }
    for (size_t j = 0; j < k; ++j) {
        std::vector<int> column;
        for (size_t i = 0; i < k; ++i) column.push_back(m.constants[i][j]);
        if (!generates(m.groups[j], column))
            throw InvalidInput("generation condition fails: column " + std::to_string(j) +
                               " does not generate its orbit group");
    }
}

int mesh_size(const Mesh& m) {
    int n = 0;
    for (const auto& g : m.groups) n += g.order;
    return n;
}

std::vector<int> mesh_offsets(const Mesh& m) {
    std::vector<int> off(m.groups.size() + 1, 0);
    for (size_t i = 0; i < m.groups.size(); ++i) off[i + 1] = off[i] + m.groups[i].order;
    return off;
}

InvolutiveBirack mesh_sum(const Mesh& m) {
    const int n = mesh_size(m);
    const auto off = mesh_offsets(m);
    const size_t k = m.groups.size();
    InvolutiveBirack b;
    b.n = n;
    b.circ.assign(n, std::vector<int>(n));
    b.ldiv.assign(n, std::vector<int>(n));
    b.bullet.assign(n, std::vector<int>(n));
    b.bdiv.assign(n, std::vector<int>(n));
    for (size_t i = 0; i < k; ++i)
        for (int a = 0; a < m.groups[i].order; ++a) {
            const int x = off[i] + a;
            for (size_t j = 0; j < k; ++j) {
                const int cij = m.constants[i][j];
                const int cji = m.constants[j][i];
                for (int bb = 0; bb < m.groups[j].order; ++bb) {
                    const int y = off[j] + bb;
                    b.circ[x][y] = off[j] + group_add(m.groups[j], bb, cij);
                    b.ldiv[x][y] = off[j] + group_sub(m.groups[j], bb, cij);
                    b.bullet[x][y] = off[i] + group_sub(m.groups[i], a, cji);
                    b.bdiv[x][y] = off[i] + group_add(m.groups[i], a, cji);
                }
            }
        }
    return b;
}

bool mesh_condition_star(const Mesh& m) {
    const size_t k = m.groups.size();
    for (size_t j = 0; j < k; ++j) {
        bool zero = false;
        for (size_t i = 0; i < k && !zero; ++i) zero = (m.constants[i][j] == 0);
        if (!zero) return false;
    }
    return true;
}

bool mesh_is_idempotent(const Mesh& m) {
    for (size_t i = 0; i < m.groups.size(); ++i)
        if (m.constants[i][i] != 0) return false;
    return true;
}

namespace {

bool same_type(const AbelianGroup& a, const AbelianGroup& b) { return a.factors == b.factors; }

// all permutations of indices preserving group types
std::vector<Perm> type_preserving_perms(const std::vector<AbelianGroup>& groups) {
    const int k = static_cast<int>(groups.size());
    Perm p = identity_perm(k);
    std::vector<Perm> out;
    // enumerate via sorted position lists per type to avoid k! blowup on repeats
    std::sort(p.begin(), p.end());
    do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) ok = same_type(groups[i], groups[p[i]]);
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string flatten_constants(const std::vector<std::vector<int>>& c) {
    std::string s;
    s.reserve(c.size() * c.size());
    for (const auto& row : c)
        for (int v : row) s.push_back(static_cast<char>(v));
    return s;
}

// minimal flattened constants over type-preserving block permutations and
// automorphism tuples; groups must already be sorted
std::vector<std::vector<int>> minimize_constants(const std::vector<AbelianGroup>& groups,
                                                 const std::vector<std::vector<int>>& c,
                                                 const std::vector<Perm>& perms) {
    const int k = static_cast<int>(groups.size());
    std::vector<const std::vector<Perm>*> auts(k);
    for (int i = 0; i < k; ++i) auts[i] = &automorphisms(groups[i]);
    std::vector<std::vector<int>> best = c;
    std::string best_key = flatten_constants(c);
    std::vector<std::vector<int>> cand(k, std::vector<int>(k));
    for (const Perm& pi : perms) {
        // psi[j] in Aut(groups[j]) maps source column j to target column pi[j]
        std::vector<size_t> pick(k, 0);
        while (true) {
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    cand[pi[i]][pi[j]] = (*auts[j])[pick[j]][c[i][j]];
            std::string key = flatten_constants(cand);
            if (key < best_key) {
                best_key = std::move(key);
                best = cand;
            }
            int j = k - 1;
            while (j >= 0 && pick[j] + 1 == auts[j]->size()) pick[j--] = 0;
            if (j < 0) break;
            ++pick[j];
        }
    }
    return best;
}

std::string group_signature(const std::vector<AbelianGroup>& groups) {
    std::string s;
    s.push_back(static_cast<char>(groups.size()));
    for (const auto& g : groups) {
        s.push_back(static_cast<char>(g.factors.size()));
        for (int f : g.factors) s.push_back(static_cast<char>(f));
    }
    return s;
}

}  // namespace

Mesh canonical_mesh(const Mesh& m) {
    validate_mesh(m);
    const int k = static_cast<int>(m.groups.size());
    // sort groups by (order, factors), transporting constants
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (m.groups[a].order != m.groups[b].order) return m.groups[a].order < m.groups[b].order;
        return m.groups[a].factors < m.groups[b].factors;
    });
    Mesh sorted;
    sorted.groups.resize(k);
    sorted.constants.assign(k, std::vector<int>(k));
    std::vector<int> pos(k);  // old index -> new slot
    for (int s = 0; s < k; ++s) {
        sorted.groups[s] = m.groups[order[s]];
        pos[order[s]] = s;
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sorted.constants[pos[i]][pos[j]] = m.constants[i][j];
    auto perms = type_preserving_perms(sorted.groups);
    sorted.constants = minimize_constants(sorted.groups, sorted.constants, perms);
    return sorted;
}

std::string mesh_key(const Mesh& m) {
    Mesh c = canonical_mesh(m);
    return group_signature(c.groups) + flatten_constants(c.constants);
}

std::optional<MeshIso> mesh_iso(const Mesh& a, const Mesh& b) {
    validate_mesh(a);
    validate_mesh(b);
    const int k = static_cast<int>(a.groups.size());
    if (static_cast<int>(b.groups.size()) != k) return std::nullopt;
    // candidate block maps must preserve group types
    Perm p = identity_perm(k);
    std::sort(p.begin(), p.end());
    do {
        bool typed = true;
        for (int i = 0; i < k && typed; ++i) typed = same_type(a.groups[i], b.groups[p[i]]);
        if (!typed) continue;
        // per column j, some automorphism must carry a's column j to b's column p[j]
        std::vector<Perm> psis(k);
        bool all = true;
        for (int j = 0; j < k && all; ++j) {
            bool found = false;
            for (const Perm& psi : automorphisms(a.groups[j])) {
                bool match = true;
                for (int i = 0; i < k && match; ++i)
                    match = (psi[a.constants[i][j]] == b.constants[p[i]][p[j]]);
                if (match) {
                    psis[j] = psi;
                    found = true;
                    break;
                }
            }
            all = found;
        }
        if (all) return MeshIso{p, psis};
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

namespace {

// all multisets of abelian groups with total order n, as nondecreasing
// sequences by (order, factors); deterministic order
void group_multisets(int n, int min_order, bool has_min, std::vector<int> min_factors,
                     std::vector<AbelianGroup>& cur, std::vector<std::vector<AbelianGroup>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int o = min_order; o <= n; ++o) {
        for (const AbelianGroup& g : abelian_groups_of_order(o)) {
            if (o == min_order && has_min && g.factors < min_factors) continue;
            cur.push_back(g);
            group_multisets(n - o, o, true, g.factors, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<Mesh> enumerate_meshes(int n, int jobs, WorkGuard* wg) {
    if (n < 1) throw InvalidInput("size must be positive");
    std::vector<std::vector<AbelianGroup>> buckets;
    {
        std::vector<AbelianGroup> cur;
        group_multisets(n, 1, false, {}, cur, buckets);
    }
    const uint64_t budget = wg ? wg->budget() : default_work_limit();
    std::vector<std::vector<Mesh>> results(buckets.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> over_budget{false};
    auto worker = [&]() {
        WorkGuard local(budget);
        try {
            while (true) {
                const size_t bi = next.fetch_add(1);
                if (bi >= buckets.size() || over_budget.load()) break;
                const auto& groups = buckets[bi];
                const int k = static_cast<int>(groups.size());
                std::vector<const std::vector<std::vector<int>>*> cols(k);
                for (int j = 0; j < k; ++j) cols[j] = &generating_tuples(groups[j], k);
                uint64_t raw = 1;
                for (int j = 0; j < k; ++j) raw *= cols[j]->size();
                if (raw == 0) continue;
                auto perms = type_preserving_perms(groups);
                uint64_t transforms = perms.size();
                for (int j = 0; j < k; ++j) transforms *= automorphisms(groups[j]).size();
                local.charge(raw * transforms * k * k);
                std::set<std::string> seen;
                std::vector<Mesh> found;
                std::vector<size_t> pick(k, 0);
                Mesh mesh;
                mesh.groups = groups;
                mesh.constants.assign(k, std::vector<int>(k));
                while (true) {
                    for (int j = 0; j < k; ++j) {
                        const auto& tup = (*cols[j])[pick[j]];
                        for (int i = 0; i < k; ++i) mesh.constants[i][j] = tup[i];
                    }
                    auto canon = raw == 1 ? mesh.constants
                                          : minimize_constants(groups, mesh.constants, perms);
                    std::string key = flatten_constants(canon);
                    if (seen.insert(key).second) {
                        Mesh rep;
                        rep.groups = groups;
                        rep.constants = canon;
                        found.push_back(std::move(rep));
                    }
                    int j = k - 1;
                    while (j >= 0 && pick[j] + 1 == cols[j]->size()) pick[j--] = 0;
                    if (j < 0) break;
                    ++pick[j];
                }
                std::sort(found.begin(), found.end(), [](const Mesh& a, const Mesh& b) {
                    return flatten_constants(a.constants) < flatten_constants(b.constants);
                });
                results[bi] = std::move(found);
            }
        } catch (const WorkLimitExceeded&) {
            over_budget.store(true);
        }
    };
    int nthreads = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = std::min<int>(nthreads, static_cast<int>(buckets.size()));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (over_budget.load()) throw WorkLimitExceeded(budget);
    std::vector<Mesh> out;
    for (auto& bucket : results)
        for (auto& m : bucket) out.push_back(std::move(m));
    return out;
}

Mesh iyb_mesh(const AbelianGroup& g, const std::vector<int>& generators) {
    if (generators.empty()) throw InvalidInput("need at least one generator");
    for (int gen : generators)
        if (gen < 0 || gen >= g.order) throw InvalidInput("generator index out of range");
    if (!generates(g, generators)) throw InvalidInput("generators do not generate the group");
    const int k = static_cast<int>(generators.size());
    Mesh m;
    m.groups.assign(k, g);
    m.constants.assign(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.constants[i][j] = generators[i];
    return m;
}

}  // namespace ybm
