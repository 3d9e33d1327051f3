#pragma once
#include <iosfwd>
#include <optional>
#include <string>

#include "ybmesh/enumerate.hpp"

namespace ybm {

// Solution table file (.lqt): '#' comments, "n <size>", n rows of n integers
// (row x of circ), then optionally a line "bullet" and n more rows.
struct SolutionFile {
    int n = 0;
    Table circ;
    std::optional<Table> bullet;
};

SolutionFile read_solution(std::istream& in);
SolutionFile read_solution_path(const std::string& path);
void write_solution(std::ostream& out, const Table& circ, const Table* bullet);
void write_solution_path(const std::string& path, const Table& circ, const Table* bullet);

// Mesh file (.mesh): "orbits <k>", k lines "group <i> <factors...>" (no factors
// = trivial group), k*k lines "const <i> <j> <coords...>".
Mesh read_mesh(std::istream& in);
Mesh read_mesh_path(const std::string& path);
void write_mesh(std::ostream& out, const Mesh& m);
void write_mesh_path(const std::string& path, const Mesh& m);

// Catalog (.cat): one record per line, "n=<n>;key=<hex>;kind=<kind>;prov=<text>".
// Loading re-validates each record: braid + involutivity for solution kinds,
// left distributivity for racks.
std::vector<CatalogEntry> read_catalog(std::istream& in);
std::vector<CatalogEntry> read_catalog_path(const std::string& path);
void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries);
void write_catalog_path(const std::string& path, const std::vector<CatalogEntry>& entries);

}  // namespace ybm
