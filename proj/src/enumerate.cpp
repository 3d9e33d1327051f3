#include "ybmesh/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "ybmesh/isotope.hpp"

namespace ybm {

namespace {

constexpr int kMaxEnumSize = 10;

void check_enum_size(int n) {
    if (n < 1) throw InvalidInput("size must be positive");
    if (n > kMaxEnumSize)
        throw InvalidInput("size " + std::to_string(n) + " exceeds the enumeration budget (" +
                           std::to_string(kMaxEnumSize) + ")");
}

int thread_count(int jobs, size_t work_items) {
    int t = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    return std::min<int>(t, static_cast<int>(std::max<size_t>(work_items, 1)));
}

// Lexicographically least permutation conjugate to one of the given cycle
// type, subject to element 0 lying in a cycle of length pinned (pinned > 0).
std::vector<int> min_pinned_conjugate(std::vector<int> type, int pinned) {
    std::vector<int> q;
    int n = 0;
    for (int len : type) n += len;
    q.resize(n);
    auto it = std::find(type.begin(), type.end(), pinned);
    type.erase(it);
    int pos = 0;
    auto place_cycle = [&](int len) {
        for (int i = 0; i < len - 1; ++i) q[pos + i] = pos + i + 1;
        q[pos + len - 1] = pos;
        pos += len;
    };
    place_cycle(pinned);            // 0's cycle takes the least labels
    std::sort(type.begin(), type.end());
    for (int len : type) place_cycle(len);  // fixed points first, then ascending
    return q;
}

struct Canonicalizer {
    const Table& t;
    int n;
    std::vector<char> id_row;
    std::vector<int> u;     // new label -> old element
    std::vector<int> g;     // old element -> new label, -1 if unassigned
    std::vector<int> best;  // flattened row-major
    bool have_best = false;
    WorkGuard* wg;
    uint64_t pending = 0;

    explicit Canonicalizer(const Table& table, WorkGuard* guard)
        : t(table), n(static_cast<int>(table.size())), wg(guard) {
        id_row.resize(n);
        for (int x = 0; x < n; ++x) {
            bool id = true;
            for (int y = 0; y < n && id; ++y) id = (t[x][y] == y);
            id_row[x] = id;
        }
        u.assign(n, -1);
        g.assign(n, -1);
    }

    void charge(uint64_t k) {
        pending += k;
        if (wg && pending > 4096) {
            wg->charge(pending);
            pending = 0;
        }
    }

    // -1: provably cannot improve on best (prune); 0: keep going
    int compare_prefix(int k) {
        charge(static_cast<uint64_t>(n) * k);
        for (int i = 0; i < n; ++i) {
            const bool full_row = (i < k) && id_row[u[i]];
            for (int j = 0; j < n; ++j) {
                int val;
                if (i < k && j < k) {
                    val = g[t[u[i]][u[j]]];
                    if (val < 0) {
                        // value is an unassigned element, so its label is >= k
                        return best[i * n + j] < k ? -1 : 0;
                    }
                } else if (full_row) {
                    val = j;  // identity row stays the identity row
                } else {
                    return 0;  // position not determined yet
                }
                const int bv = best[i * n + j];
                if (val > bv) return -1;
                if (val < bv) return 0;
            }
        }
        return -1;  // fully decided and equal: no improvement possible
    }

    void dfs(int k, const std::vector<char>& root_ok) {
        if (k == n) {
            std::vector<int> cand(n * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) cand[i * n + j] = g[t[u[i]][u[j]]];
            charge(static_cast<uint64_t>(n) * n);
            if (!have_best || cand < best) {
                best = std::move(cand);
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (g[v] >= 0) continue;
            if (k == 0 && !root_ok[v]) continue;
            u[k] = v;
            g[v] = k;
            if (!have_best || compare_prefix(k + 1) == 0) dfs(k + 1, root_ok);
            g[v] = -1;
        }
        u[k] = -1;
    }

    Table run() {
        // only rows that can realize the least possible first row may be labeled 0
        std::vector<std::vector<int>> row0(n);
        for (int v = 0; v < n; ++v) {
            Perm row = t[v];
            auto type = cycle_type(row);
            // cycle length of v in its own row
            int len = 1;
            for (int y = row[v]; y != v; y = row[y]) ++len;
            row0[v] = min_pinned_conjugate(type, len);
        }
        std::vector<int> least = *std::min_element(row0.begin(), row0.end());
        std::vector<char> root_ok(n);
        for (int v = 0; v < n; ++v) root_ok[v] = (row0[v] == least);
        dfs(0, root_ok);
        if (wg && pending) wg->charge(pending);
        Table out(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out[i][j] = best[i * n + j];
        return out;
    }
};

}  // namespace

Table canonical_table(const Table& t, WorkGuard* wg) {
    if (!table_shape_ok(t)) throw InvalidInput("table is not square over {0..n-1}");
    if (auto bad = find_non_bijective_row(t))
        throw InvalidInput("row " + std::to_string(*bad) + " is not a bijection");
    Canonicalizer c(t, wg);
    return c.run();
}

std::string table_hex(const Table& t) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(t.size() * t.size() * 2);
    for (const auto& row : t)
        for (int v : row) {
            s.push_back(digits[(v >> 4) & 0xf]);
            s.push_back(digits[v & 0xf]);
        }
    return s;
}

Table table_from_hex(const std::string& hex, int n) {
    if (n < 1 || n > 255) throw InvalidInput("table size out of range");
    if (hex.size() != static_cast<size_t>(2 * n * n))
        throw InvalidInput("key has wrong length for size " + std::to_string(n));
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw InvalidInput("bad hex digit in key");
    };
    Table t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const size_t p = 2 * (static_cast<size_t>(i) * n + j);
            const int v = nib(hex[p]) * 16 + nib(hex[p + 1]);
            if (v >= n) throw InvalidInput("key entry out of range");
            t[i][j] = v;
        }
    return t;
}

std::string kind_name(SolutionKind k) {
    switch (k) {
        case SolutionKind::TwoReductive: return "2reductive";
        case SolutionKind::Level2NonDistributive: return "level2-nondistributive";
        case SolutionKind::AllInvolutive: return "all-involutive";
        case SolutionKind::Racks: return "racks";
    }
    return "?";
}

std::optional<SolutionKind> kind_from_name(const std::string& s) {
    if (s == "2reductive") return SolutionKind::TwoReductive;
    if (s == "level2-nondistributive") return SolutionKind::Level2NonDistributive;
    if (s == "all-involutive") return SolutionKind::AllInvolutive;
    if (s == "racks") return SolutionKind::Racks;
    return std::nullopt;
}

namespace {

std::string mesh_prov(const Mesh& m) {
    std::ostringstream os;
    os << "mesh:g=";
    for (size_t i = 0; i < m.groups.size(); ++i) {
        if (i) os << ',';
        if (m.groups[i].factors.empty()) {
            os << '1';
        } else {
            for (size_t f = 0; f < m.groups[i].factors.size(); ++f) {
                if (f) os << '.';
                os << m.groups[i].factors[f];
            }
        }
    }
    os << ":c=";
    bool first = true;
    for (const auto& row : m.constants)
        for (int v : row) {
            if (!first) os << ',';
            os << v;
            first = false;
        }
    return os.str();
}

std::string table_bytes(const Table& t) {
    std::string s;
    s.reserve(t.size() * t.size());
    for (const auto& row : t)
        for (int v : row) s.push_back(static_cast<char>(v));
    return s;
}

void sort_entries(std::vector<CatalogEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return a.circ < b.circ;
    });
}

}  // namespace

std::vector<CatalogEntry> enumerate_distributive(int n, int jobs, WorkGuard* wg) {
    check_enum_size(n);
    std::vector<Mesh> meshes = enumerate_meshes(n, jobs, wg);
    const uint64_t budget = wg ? wg->budget() : default_work_limit();
    std::vector<CatalogEntry> entries(meshes.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> over{false};
    auto worker = [&]() {
        WorkGuard local(budget);
        try {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= meshes.size() || over.load()) break;
                InvolutiveBirack b = mesh_sum(meshes[i]);
                entries[i] = {n, canonical_table(b.circ, &local), SolutionKind::TwoReductive,
                              mesh_prov(meshes[i])};
            }
        } catch (const WorkLimitExceeded&) {
            over.store(true);
        }
    };
    const int nt = thread_count(jobs, meshes.size());
    if (nt <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (over.load()) throw WorkLimitExceeded(budget);
    sort_entries(entries);
    return entries;
}

namespace {

struct Level2Base {
    Table circ;
    std::vector<int> cls;                    // row class per element
    std::vector<std::vector<int>> members;   // elements per class
    std::vector<int> reps;                   // least element per class
    std::string prov;
};

// permutation filters for one base; appends (key -> entry) into out
void level2_scan_base(int n, const Level2Base& base, std::map<std::string, CatalogEntry>& out,
                      WorkGuard* wg) {
    const Table& circ = base.circ;
    const int k = static_cast<int>(base.reps.size());
    std::unordered_set<std::string> raw_seen;
    Perm pi = identity_perm(n);
    Table t(n, std::vector<int>(n));
    uint64_t count = 0;
    do {
        if (wg) {
            count += n;
            if (count > 4096) {
                wg->charge(count);
                count = 0;
            }
        }
        // must move at least one row class, else the twist stays distributive
        bool moves = false;
        for (int x = 0; x < n && !moves; ++x) moves = (base.cls[pi[x]] != base.cls[x]);
        if (!moves) continue;
        // must map row classes onto row classes
        bool classes_ok = true;
        for (int c = 0; c < k && classes_ok; ++c) {
            const int target = base.cls[pi[base.reps[c]]];
            if (base.members[target].size() != base.members[c].size()) {
                classes_ok = false;
                break;
            }
            for (int x : base.members[c])
                if (base.cls[pi[x]] != target) {
                    classes_ok = false;
                    break;
                }
        }
        if (!classes_ok) continue;
        // sigma compatibility; class representatives suffice once classes map onto classes
        bool sigma_ok = true;
        if (wg) wg->charge(static_cast<uint64_t>(k) * k * n);
        for (int a = 0; a < k && sigma_ok; ++a)
            for (int b = a + 1; b < k && sigma_ok; ++b) {
                const int x = base.reps[a], y = base.reps[b];
                for (int z = 0; z < n; ++z)
                    if (circ[pi[y]][pi[circ[x][z]]] != circ[pi[x]][pi[circ[y][z]]]) {
                        sigma_ok = false;
                        break;
                    }
            }
        if (!sigma_ok) continue;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) t[x][y] = circ[x][pi[y]];
        // belt and braces: drop any twist that is still 2-reductive
        bool two_red = true;
        for (int x = 0; x < n && two_red; ++x)
            for (int y = 0; y < n && two_red; ++y) two_red = (t[t[x][y]] == t[y]);
        if (two_red) continue;
        std::string raw = table_bytes(t);
        if (!raw_seen.insert(raw).second) continue;
        Table canon = canonical_table(t, wg);
        std::string key = table_bytes(canon);
        if (out.find(key) == out.end())
            out.emplace(std::move(key),
                        CatalogEntry{n, std::move(canon), SolutionKind::Level2NonDistributive,
                                     "iso:" + base.prov + ":pi=" + format_image_list(pi)});
    } while (std::next_permutation(pi.begin(), pi.end()));
    if (wg && count) wg->charge(count);
}

}  // namespace

std::vector<CatalogEntry> enumerate_level2_nondistributive(int n, int jobs, WorkGuard* wg) {
    check_enum_size(n);
    std::vector<Mesh> meshes = enumerate_meshes(n, jobs, wg);
    std::vector<Level2Base> bases;
    for (const Mesh& m : meshes) {
        InvolutiveBirack b = mesh_sum(m);
        bool has_id = false;
        for (int x = 0; x < n && !has_id; ++x) {
            bool id = true;
            for (int y = 0; y < n && id; ++y) id = (b.circ[x][y] == y);
            has_id = id;
        }
        if (!has_id) continue;  // only bases with an identity row can twist anywhere new
        Level2Base base;
        base.circ = b.circ;
        base.cls = row_classes(b.circ);
        const int k = *std::max_element(base.cls.begin(), base.cls.end()) + 1;
        base.members.resize(k);
        for (int x = 0; x < n; ++x) base.members[base.cls[x]].push_back(x);
        base.reps.resize(k);
        for (int c = 0; c < k; ++c) base.reps[c] = base.members[c][0];
        base.prov = mesh_prov(m);
        bases.push_back(std::move(base));
    }
    const uint64_t budget = wg ? wg->budget() : default_work_limit();
    std::vector<std::map<std::string, CatalogEntry>> results(bases.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> over{false};
    auto worker = [&]() {
        WorkGuard local(budget);
        try {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= bases.size() || over.load()) break;
                level2_scan_base(n, bases[i], results[i], &local);
            }
        } catch (const WorkLimitExceeded&) {
            over.store(true);
        }
    };
    const int nt = thread_count(jobs, bases.size());
    if (nt <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (over.load()) throw WorkLimitExceeded(budget);
    // merge in base order so the recorded provenance is schedule-independent
    std::map<std::string, CatalogEntry> merged;
    for (auto& base_result : results)
        for (auto& [key, entry] : base_result) merged.emplace(key, std::move(entry));
    std::vector<CatalogEntry> out;
    out.reserve(merged.size());
    for (auto& [key, entry] : merged) out.push_back(std::move(entry));
    sort_entries(out);
    return out;
}

namespace {

constexpr int kMaxBrute = kMaxEnumSize;

// Exhaustive cell-by-cell search over division tables (right-cyclic identity
// holds on the division table directly); every completed table yields an
// involutive solution.
struct CycleSetSearch {
    int n;
    int D[kMaxBrute][kMaxBrute];     // division table being filled
    int Dinv[kMaxBrute][kMaxBrute];  // Dinv[x][v] = y iff D[x][y] = v
    unsigned rowmask[kMaxBrute];
    unsigned diagmask = 0;
    std::vector<Table> found;  // completed division tables
    WorkGuard* wg;
    uint64_t pending = 0;

    explicit CycleSetSearch(int size, WorkGuard* guard) : n(size), wg(guard) {
        std::memset(D, -1, sizeof(D));
        std::memset(Dinv, -1, sizeof(Dinv));
        std::memset(rowmask, 0, sizeof(rowmask));
    }

    void charge(uint64_t k) {
        pending += k;
        if (wg && pending > 8192) {
            wg->charge(pending);
            pending = 0;
        }
    }

    bool inst_ok(int x, int y, int z) const {
        const int a = D[x][y];
        if (a < 0) return true;
        const int b = D[x][z];
        if (b < 0) return true;
        const int a2 = D[y][x];
        if (a2 < 0) return true;
        const int b2 = D[y][z];
        if (b2 < 0) return true;
        const int l = D[a][b];
        if (l < 0) return true;
        const int r = D[a2][b2];
        if (r < 0) return true;
        return l == r;
    }

    bool consistent_after(int r, int c) {
        charge(18ull * n);
        for (int z = 0; z < n; ++z)
            if (!inst_ok(r, c, z)) return false;
        for (int y = 0; y < n; ++y)
            if (y != r && !inst_ok(r, y, c)) return false;
        for (int w = 0; w < n; ++w) {
            const int p = Dinv[w][r], q = Dinv[w][c];
            if (p >= 0 && q >= 0 && !inst_ok(w, p, q)) return false;
        }
        return true;
    }

    void dfs(int cell) {
        if (cell == n * n) {
            Table d(n, std::vector<int>(n));
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) d[x][y] = D[x][y];
            found.push_back(std::move(d));
            return;
        }
        const int r = cell / n, c = cell % n;
        for (int v = 0; v < n; ++v) {
            if (rowmask[r] & (1u << v)) continue;
            if (r == c && (diagmask & (1u << v))) continue;  // diagonal stays injective
            D[r][c] = v;
            Dinv[r][v] = c;
            rowmask[r] |= 1u << v;
            if (r == c) diagmask |= 1u << v;
            if (consistent_after(r, c)) dfs(cell + 1);
            D[r][c] = -1;
            Dinv[r][v] = -1;
            rowmask[r] &= ~(1u << v);
            if (r == c) diagmask &= ~(1u << v);
        }
    }
};

// Exhaustive search over left-distributive tables.
struct RackSearch {
    int n;
    int T[kMaxBrute][kMaxBrute];
    int Tinv[kMaxBrute][kMaxBrute];
    unsigned rowmask[kMaxBrute];
    std::vector<Table> found;
    WorkGuard* wg;
    uint64_t pending = 0;

    explicit RackSearch(int size, WorkGuard* guard) : n(size), wg(guard) {
        std::memset(T, -1, sizeof(T));
        std::memset(Tinv, -1, sizeof(Tinv));
        std::memset(rowmask, 0, sizeof(rowmask));
    }

    void charge(uint64_t k) {
        pending += k;
        if (wg && pending > 8192) {
            wg->charge(pending);
            pending = 0;
        }
    }

    bool inst_ok(int x, int y, int z) const {
        const int yz = T[y][z];
        if (yz < 0) return true;
        const int l0 = T[x][yz];
        if (l0 < 0) return true;
        const int xy = T[x][y];
        if (xy < 0) return true;
        const int xz = T[x][z];
        if (xz < 0) return true;
        const int r0 = T[xy][xz];
        if (r0 < 0) return true;
        return l0 == r0;
    }

    bool consistent_after(int r, int c) {
        charge(25ull * n);
        for (int x = 0; x < n; ++x)
            if (!inst_ok(x, r, c)) return false;
        for (int z = 0; z < n; ++z)
            if (!inst_ok(r, c, z)) return false;
        for (int y = 0; y < n; ++y)
            if (!inst_ok(r, y, c)) return false;
        for (int y = 0; y < n; ++y) {
            const int z = Tinv[y][c];
            if (z >= 0 && !inst_ok(r, y, z)) return false;
        }
        for (int x = 0; x < n; ++x) {
            const int y = Tinv[x][r], z = Tinv[x][c];
            if (y >= 0 && z >= 0 && !inst_ok(x, y, z)) return false;
        }
        return true;
    }

    void dfs(int cell) {
        if (cell == n * n) {
            Table t(n, std::vector<int>(n));
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) t[x][y] = T[x][y];
            found.push_back(std::move(t));
            return;
        }
        const int r = cell / n, c = cell % n;
        for (int v = 0; v < n; ++v) {
            if (rowmask[r] & (1u << v)) continue;
            T[r][c] = v;
            Tinv[r][v] = c;
            rowmask[r] |= 1u << v;
            if (consistent_after(r, c)) dfs(cell + 1);
            T[r][c] = -1;
            Tinv[r][v] = -1;
            rowmask[r] &= ~(1u << v);
        }
    }
};

// canonicalize + dedup a list of labeled tables, in parallel
std::vector<CatalogEntry> dedup_tables(int n, std::vector<Table> tables, SolutionKind kind,
                                       int jobs, WorkGuard* wg) {
    const uint64_t budget = wg ? wg->budget() : default_work_limit();
    std::vector<std::string> keys(tables.size());
    std::vector<Table> canon(tables.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> over{false};
    auto worker = [&]() {
        WorkGuard local(budget);
        try {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= tables.size() || over.load()) break;
                canon[i] = canonical_table(tables[i], &local);
                keys[i] = table_bytes(canon[i]);
            }
        } catch (const WorkLimitExceeded&) {
            over.store(true);
        }
    };
    const int nt = thread_count(jobs, tables.size());
    if (nt <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (over.load()) throw WorkLimitExceeded(budget);
    std::map<std::string, size_t> first;
    for (size_t i = 0; i < tables.size(); ++i)
        if (first.find(keys[i]) == first.end()) first.emplace(keys[i], i);
    std::vector<CatalogEntry> out;
    out.reserve(first.size());
    for (auto& [key, i] : first) out.push_back({n, std::move(canon[i]), kind, "brute"});
    sort_entries(out);
    return out;
}

}  // namespace

std::vector<CatalogEntry> enumerate_involutive_bruteforce(int n, int jobs, WorkGuard* wg) {
    check_enum_size(n);
    CycleSetSearch s(n, wg);
    s.dfs(0);
    if (wg && s.pending) wg->charge(s.pending);
    // completed tables are division tables; solutions act by the inverse rows
    std::vector<Table> circs;
    circs.reserve(s.found.size());
    for (const Table& d : s.found) circs.push_back(invert_rows(d));
    return dedup_tables(n, std::move(circs), SolutionKind::AllInvolutive, jobs, wg);
}

std::vector<CatalogEntry> enumerate_racks_bruteforce(int n, int jobs, WorkGuard* wg) {
    check_enum_size(n);
    RackSearch s(n, wg);
    s.dfs(0);
    if (wg && s.pending) wg->charge(s.pending);
    return dedup_tables(n, std::move(s.found), SolutionKind::Racks, jobs, wg);
}

std::vector<CatalogEntry> enumerate_kind(SolutionKind k, int n, int jobs, WorkGuard* wg) {
    switch (k) {
        case SolutionKind::TwoReductive: return enumerate_distributive(n, jobs, wg);
        case SolutionKind::Level2NonDistributive:
            return enumerate_level2_nondistributive(n, jobs, wg);
        case SolutionKind::AllInvolutive: return enumerate_involutive_bruteforce(n, jobs, wg);
        case SolutionKind::Racks: return enumerate_racks_bruteforce(n, jobs, wg);
    }
    throw InvalidInput("unknown kind");
}

CountReport count_solutions(int n, const std::vector<SolutionKind>& kinds, int jobs,
                            WorkGuard* wg) {
    CountReport report;
    report.n = n;
    std::optional<uint64_t> two_red, level2nd;
    for (SolutionKind k : kinds) {
        const auto start = std::chrono::steady_clock::now();
        uint64_t count;
        if (k == SolutionKind::TwoReductive) {
            // class count equals the mesh class count; skip table canonicalization
            check_enum_size(n);
            count = enumerate_meshes(n, jobs, wg).size();
        } else {
            count = enumerate_kind(k, n, jobs, wg).size();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.kinds.push_back({k, count, secs});
        if (k == SolutionKind::TwoReductive) two_red = count;
        if (k == SolutionKind::Level2NonDistributive) level2nd = count;
    }
    if (two_red && level2nd) report.level2_total = *two_red + *level2nd;
    return report;
}

}  // namespace ybm
