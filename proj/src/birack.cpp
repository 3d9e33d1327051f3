#include "ybmesh/birack.hpp"

#include <algorithm>
#include <string>

namespace ybm {

namespace {

std::optional<int> find_non_bijective_column(const Table& t) {
    const int n = static_cast<int>(t.size());
    for (int y = 0; y < n; ++y) {
        std::vector<char> seen(n, 0);
        for (int x = 0; x < n; ++x) {
            const int v = t[x][y];
            if (seen[v]) return y;
            seen[v] = 1;
        }
    }
    return std::nullopt;
}

Table invert_columns(const Table& t) {
    const int n = static_cast<int>(t.size());
    Table r(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) r[t[x][y]][y] = x;
    return r;
}

[[noreturn]] void axiom_fail(const std::string& name, int x, int y, int z) {
    throw InvalidInput("axiom violation: " + name + " at (" + std::to_string(x) + "," +
                       std::to_string(y) + "," + std::to_string(z) + ")");
}

// The three compatibility axioms of the pair map plus involutivity.
void validate_axioms(const Table& c, const Table& b) {
    const int n = static_cast<int>(c.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int xy = c[x][y], xby = b[x][y];
            if (c[xy][xby] != x) axiom_fail("left-inverse", x, y, -1);
            if (b[xy][xby] != y) axiom_fail("right-inverse", x, y, -1);
            for (int z = 0; z < n; ++z) {
                if (c[x][c[y][z]] != c[xy][c[xby][z]]) axiom_fail("circ-compatibility", x, y, z);
                if (b[xy][c[xby][z]] != c[b[x][c[y][z]]][b[y][z]])
                    axiom_fail("mixed-compatibility", x, y, z);
                if (b[xby][z] != b[b[x][c[y][z]]][b[y][z]]) axiom_fail("bullet-compatibility", x, y, z);
            }
        }
}

}  // namespace

InvolutiveBirack birack_from_tables(const Table& circ, const Table& bullet) {
    if (!table_shape_ok(circ) || !table_shape_ok(bullet) || circ.size() != bullet.size())
        throw InvalidInput("tables must be square of equal size over {0..n-1}");
    if (auto bad = find_non_bijective_row(circ))
        throw InvalidInput("row " + std::to_string(*bad) + " of the circ table is not a bijection");
    if (auto bad = find_non_bijective_column(bullet))
        throw InvalidInput("column " + std::to_string(*bad) +
                           " of the bullet table is not a bijection");
    validate_axioms(circ, bullet);
    InvolutiveBirack b;
    b.n = static_cast<int>(circ.size());
    b.circ = circ;
    b.ldiv = invert_rows(circ);
    b.bullet = bullet;
    b.bdiv = invert_columns(bullet);
    return b;
}

InvolutiveBirack birack_from_cycle_set(const Table& circ) {
    LeftQuasigroup q = lq_from_table(circ);
    if (auto rc = check_property(q, LqProperty::RightCyclic); !rc.holds)
        throw InvalidInput("table is not right cyclic at (" + std::to_string(rc.witness[0]) + "," +
                           std::to_string(rc.witness[1]) + "," + std::to_string(rc.witness[2]) +
                           "); no involutive solution completes it");
    if (auto nd = check_property(q, LqProperty::NonDegenerate); !nd.holds)
        throw InvalidInput("table is degenerate: x -> x\\x is not bijective");
    InvolutiveBirack b;
    b.n = q.n;
    b.circ = std::move(q.circ);
    b.ldiv = std::move(q.ldiv);
    b.bullet.assign(b.n, std::vector<int>(b.n));
    for (int x = 0; x < b.n; ++x)
        for (int y = 0; y < b.n; ++y) b.bullet[x][y] = b.ldiv[b.circ[x][y]][x];
    if (auto bad = find_non_bijective_column(b.bullet))
        throw InvalidInput("derived bullet column " + std::to_string(*bad) + " is not a bijection");
    b.bdiv = invert_columns(b.bullet);
    return b;
}

BraidResult check_braid(const Table& c, const Table& b) {
    const int n = static_cast<int>(c.size());
    auto r1 = [&](int& x, int& y) {  // r on the first two coordinates
        const int nx = c[x][y], ny = b[x][y];
        x = nx;
        y = ny;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int a0 = x, a1 = y, a2 = z;  // (id x r)(r x id)(id x r)
                r1(a1, a2);
                r1(a0, a1);
                r1(a1, a2);
                int b0 = x, b1 = y, b2 = z;  // (r x id)(id x r)(r x id)
                r1(b0, b1);
                r1(b1, b2);
                r1(b0, b1);
                if (a0 != b0 || a1 != b1 || a2 != b2) return {false, {x, y, z}};
            }
    return {true, {0, 0, 0}};
}

bool check_involutive(const Table& c, const Table& b, std::array<int, 2>* witness) {
    const int n = static_cast<int>(c.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int xy = c[x][y], xby = b[x][y];
            if (c[xy][xby] != x || b[xy][xby] != y) {
                if (witness) *witness = {x, y};
                return false;
            }
        }
    return true;
}

PropertyResult check_birack_property(const InvolutiveBirack& b, BirackProperty p, WorkGuard* wg) {
    const int n = b.n;
    LeftQuasigroup q{b.n, b.circ, b.ldiv};
    switch (p) {
        case BirackProperty::Braid: {
            if (wg) wg->charge(12ull * n * n * n);
            BraidResult r = check_braid(b.circ, b.bullet);
            if (r.ok) return {true, {}};
            return {false, {r.witness[0], r.witness[1], r.witness[2]}};
        }
        case BirackProperty::Involutive: {
            if (wg) wg->charge(4ull * n * n);
            std::array<int, 2> w{};
            if (check_involutive(b.circ, b.bullet, &w)) return {true, {}};
            return {false, {w[0], w[1]}};
        }
        case BirackProperty::Lri:
            if (wg) wg->charge(4ull * n * n);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (b.bullet[b.circ[x][y]][x] != y) return {false, {x, y}};
                    if (b.circ[x][b.bullet[y][x]] != y) return {false, {x, y}};
                }
            return {true, {}};
        case BirackProperty::Distributive: {
            auto ld = check_property(q, LqProperty::LeftDistributive, wg);
            if (!ld.holds) return ld;
            // right distributivity of the bullet operation
            if (wg) wg->charge(5ull * n * n * n);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        if (b.bullet[b.bullet[x][y]][z] !=
                            b.bullet[b.bullet[x][z]][b.bullet[y][z]])
                            return {false, {x, y, z}};
            return {true, {}};
        }
        case BirackProperty::TwoReductive:
            return check_m_reductive(q, 2, wg);
        case BirackProperty::TwoPermutational:
            return check_m_permutational(q, 2, wg);
        case BirackProperty::Medial:
            return check_property(q, LqProperty::Medial, wg);
        case BirackProperty::RightCyclic:
            return check_property(q, LqProperty::RightCyclic, wg);
        case BirackProperty::Idempotent:
            return check_property(q, LqProperty::Idempotent, wg);
        case BirackProperty::ConditionStar:
            return check_property(q, LqProperty::ConditionStar, wg);
        case BirackProperty::NonDegenerate:
            return check_property(q, LqProperty::NonDegenerate, wg);
        case BirackProperty::OnePermutational:
            if (wg) wg->charge(1ull * n * n);
            for (int x = 1; x < n; ++x)
                if (b.circ[x] != b.circ[0]) return {false, {0, x}};
            return {true, {}};
        case BirackProperty::Irretractable: {
            if (wg) wg->charge(1ull * n * n);
            std::vector<int> cls = row_classes(b.circ);
            int top = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
            if (top == n) return {true, {}};
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y)
                    if (cls[x] == cls[y]) return {false, {x, y}};
            return {true, {}};
        }
    }
    throw InvalidInput("unknown property");
}

Retraction retraction(const InvolutiveBirack& b) {
    std::vector<int> cls = row_classes(b.circ);
    const int k = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<int> rep(k, -1);
    for (int x = 0; x < b.n; ++x)
        if (rep[cls[x]] < 0) rep[cls[x]] = x;  // least representative: first occurrence
    Retraction r;
    r.class_of = cls;
    r.quotient.n = k;
    r.quotient.circ.assign(k, std::vector<int>(k));
    r.quotient.bullet.assign(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            r.quotient.circ[i][j] = cls[b.circ[rep[i]][rep[j]]];
            r.quotient.bullet[i][j] = cls[b.bullet[rep[i]][rep[j]]];
        }
    r.quotient.ldiv = invert_rows(r.quotient.circ);
    r.quotient.bdiv.assign(k, std::vector<int>(k));
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) r.quotient.bdiv[r.quotient.bullet[x][y]][y] = x;
    return r;
}

bool retraction_partitions_agree(const InvolutiveBirack& b) {
    std::vector<int> by_rows = row_classes(b.circ);
    // partition by equal bullet columns
    const int n = b.n;
    std::vector<int> by_cols(n, -1);
    int next = 0;
    for (int y = 0; y < n; ++y) {
        if (by_cols[y] >= 0) continue;
        by_cols[y] = next;
        for (int z = y + 1; z < n; ++z) {
            if (by_cols[z] >= 0) continue;
            bool same = true;
            for (int x = 0; x < n && same; ++x) same = (b.bullet[x][y] == b.bullet[x][z]);
            if (same) by_cols[z] = next;
        }
        ++next;
    }
    return by_rows == by_cols;
}

MpLevel mp_level(const InvolutiveBirack& b) {
    InvolutiveBirack cur = b;
    int level = 0;
    const int cap = b.n + 1;
    while (cur.n > 1) {
        if (level >= cap) return {false, 0};
        Retraction r = retraction(cur);
        if (r.quotient.n == cur.n) return {false, 0};
        cur = std::move(r.quotient);
        ++level;
    }
    return {true, level};
}

std::optional<Perm> birack_isomorphism(const InvolutiveBirack& a, const InvolutiveBirack& b,
                                       WorkGuard* wg) {
    return table_isomorphism(a.circ, b.circ, wg);
}

GroupStructure permutation_group_structure(const InvolutiveBirack& b, WorkGuard* wg) {
    std::vector<Perm> gens;
    for (int x = 0; x < b.n; ++x) gens.push_back(b.circ[x]);
    for (int y = 0; y < b.n; ++y) {
        Perm col(b.n);
        for (int x = 0; x < b.n; ++x) col[x] = b.bullet[x][y];
        gens.push_back(std::move(col));
    }
    PermGroup g = close_group(gens, b.n, wg);
    GroupStructure s;
    s.order = g.elements.size();
    s.abelian = g.abelian;
    if (auto f = abelian_invariant_factors(g)) s.invariant_factors = *f;
    return s;
}

}  // namespace ybm
