#pragma once
#include <cstdint>
#include <optional>
#include <string>

#include "ybmesh/mesh.hpp"

namespace ybm {

// Lexicographically least row-major table over all relabelings of {0..n-1}.
// Two tables are isomorphic iff their canonical tables are equal.
Table canonical_table(const Table& t, WorkGuard* wg = nullptr);

std::string table_hex(const Table& t);                    // row-major, 2 hex digits per cell
Table table_from_hex(const std::string& hex, int n);      // throws InvalidInput

enum class SolutionKind { TwoReductive, Level2NonDistributive, AllInvolutive, Racks };

std::string kind_name(SolutionKind k);
std::optional<SolutionKind> kind_from_name(const std::string& s);

struct CatalogEntry {
    int n = 0;
    Table circ;        // canonical representative
    SolutionKind kind = SolutionKind::TwoReductive;
    std::string prov;  // how the representative was constructed
};

// Enumeration streams, each up to isomorphism, deterministically ordered by
// canonical key. jobs <= 0 means one worker per available core; results are
// schedule-independent.
//
// TwoReductive: sums of all meshes of size n (the distributive solutions).
// Level2NonDistributive: column twists of distributive solutions having an
//   identity row, by every permutation that maps row classes onto row classes,
//   satisfies the sigma compatibility, and moves at least one row class;
//   deduplicated across all bases.
// AllInvolutive: exhaustive search over right-cyclic division tables.
// Racks: exhaustive search over left-distributive tables.
std::vector<CatalogEntry> enumerate_distributive(int n, int jobs = 0, WorkGuard* wg = nullptr);
std::vector<CatalogEntry> enumerate_level2_nondistributive(int n, int jobs = 0,
                                                           WorkGuard* wg = nullptr);
std::vector<CatalogEntry> enumerate_involutive_bruteforce(int n, int jobs = 0,
                                                          WorkGuard* wg = nullptr);
std::vector<CatalogEntry> enumerate_racks_bruteforce(int n, int jobs = 0, WorkGuard* wg = nullptr);
std::vector<CatalogEntry> enumerate_kind(SolutionKind k, int n, int jobs = 0,
                                         WorkGuard* wg = nullptr);

struct KindCount {
    SolutionKind kind;
    uint64_t count = 0;
    double seconds = 0.0;
};

struct CountReport {
    int n = 0;
    std::vector<KindCount> kinds;
    // TwoReductive + Level2NonDistributive when both were computed.
    std::optional<uint64_t> level2_total;
};

CountReport count_solutions(int n, const std::vector<SolutionKind>& kinds, int jobs = 0,
                            WorkGuard* wg = nullptr);

}  // namespace ybm
