#include "ybmesh/io.hpp"

#include <fstream>
#include <sstream>

#include "ybmesh/birack.hpp"

namespace ybm {

namespace {

// strip comments and surrounding whitespace; empty result means "skip line"
std::string clean_line(const std::string& raw) {
    std::string s = raw;
    const size_t hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    const char* ws = " \t\r\n";
    const size_t b = s.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    const size_t e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string> read_clean_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        std::string s = clean_line(raw);
        if (!s.empty()) lines.push_back(std::move(s));
    }
    return lines;
}

int parse_int_token(const std::string& tok, const std::string& what) {
    try {
        size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw InvalidInput("bad integer '" + tok + "' in " + what);
    }
}

std::vector<int> parse_int_row(const std::string& s, const std::string& what) {
    std::vector<int> row;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) row.push_back(parse_int_token(tok, what));
    return row;
}

Table parse_table_block(const std::vector<std::string>& lines, size_t& pos, int n,
                        const std::string& what) {
    Table t;
    for (int i = 0; i < n; ++i) {
        if (pos >= lines.size())
            throw InvalidInput("missing row " + std::to_string(i) + " of " + what);
        std::vector<int> row = parse_int_row(lines[pos++], what);
        if (static_cast<int>(row.size()) != n)
            throw InvalidInput(what + " row " + std::to_string(i) + " has " +
                               std::to_string(row.size()) + " entries, expected " +
                               std::to_string(n));
        for (int v : row)
            if (v < 0 || v >= n) throw InvalidInput(what + " entry out of range");
        t.push_back(std::move(row));
    }
    return t;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    return out;
}

void write_row(std::ostream& out, const std::vector<int>& row) {
    for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
}

}  // namespace

SolutionFile read_solution(std::istream& in) {
    std::vector<std::string> lines = read_clean_lines(in);
    if (lines.empty()) throw InvalidInput("empty solution input");
    size_t pos = 0;
    std::istringstream hs(lines[pos++]);
    std::string kw, size_tok, extra;
    hs >> kw >> size_tok;
    if (kw != "n" || size_tok.empty() || (hs >> extra))
        throw InvalidInput("first line must be 'n <size>'");
    const int n = parse_int_token(size_tok, "size header");
    if (n < 1) throw InvalidInput("size must be positive");
    SolutionFile f;
    f.n = n;
    f.circ = parse_table_block(lines, pos, n, "action table");
    if (pos < lines.size()) {
        if (lines[pos] != "bullet")
            throw InvalidInput("expected 'bullet' section line, got '" + lines[pos] + "'");
        ++pos;
        f.bullet = parse_table_block(lines, pos, n, "bullet table");
        if (pos < lines.size()) throw InvalidInput("trailing content after tables");
    }
    return f;
}

SolutionFile read_solution_path(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_solution(in);
}

void write_solution(std::ostream& out, const Table& circ, const Table* bullet) {
    out << "n " << circ.size() << "\n";
    for (const auto& row : circ) write_row(out, row);
    if (bullet) {
        out << "bullet\n";
        for (const auto& row : *bullet) write_row(out, row);
    }
}

void write_solution_path(const std::string& path, const Table& circ, const Table* bullet) {
    std::ofstream out = open_output(path);
    write_solution(out, circ, bullet);
}

Mesh read_mesh(std::istream& in) {
    std::vector<std::string> lines = read_clean_lines(in);
    size_t pos = 0;
    auto next_row = [&](const std::string& what) -> std::vector<std::string> {
        if (pos >= lines.size()) throw InvalidInput("missing " + what);
        std::vector<std::string> toks;
        std::istringstream is(lines[pos++]);
        std::string tok;
        while (is >> tok) toks.push_back(std::move(tok));
        return toks;
    };
    std::vector<std::string> head = next_row("'orbits <k>' line");
    if (head.size() != 2 || head[0] != "orbits")
        throw InvalidInput("first line must be 'orbits <k>'");
    const int k = parse_int_token(head[1], "orbit count");
    if (k < 1) throw InvalidInput("orbit count must be positive");
    Mesh m;
    for (int i = 0; i < k; ++i) {
        std::vector<std::string> toks = next_row("'group " + std::to_string(i) + " …' line");
        if (toks.size() < 2 || toks[0] != "group" ||
            parse_int_token(toks[1], "group index") != i)
            throw InvalidInput("expected 'group " + std::to_string(i) + " <factors…>'");
        std::vector<int> factors;
        for (size_t t = 2; t < toks.size(); ++t)
            factors.push_back(parse_int_token(toks[t], "group factors"));
        m.groups.push_back(make_abelian(factors));
    }
    m.constants.assign(k, std::vector<int>(k, -1));
    for (int c = 0; c < k * k; ++c) {
        std::vector<std::string> toks = next_row("'const <i> <j> …' line");
        if (toks.size() < 3 || toks[0] != "const")
            throw InvalidInput("expected 'const <i> <j> <coords…>'");
        const int i = parse_int_token(toks[1], "const row index");
        const int j = parse_int_token(toks[2], "const column index");
        if (i < 0 || i >= k || j < 0 || j >= k)
            throw InvalidInput("const indices out of range");
        if (m.constants[i][j] >= 0)
            throw InvalidInput("duplicate const " + std::to_string(i) + " " + std::to_string(j));
        std::vector<int> coords;
        for (size_t t = 3; t < toks.size(); ++t)
            coords.push_back(parse_int_token(toks[t], "const coordinates"));
        const AbelianGroup& g = m.groups[j];
        if (coords.size() != g.factors.size())
            throw InvalidInput("const " + std::to_string(i) + " " + std::to_string(j) + " has " +
                               std::to_string(coords.size()) + " coordinates, expected " +
                               std::to_string(g.factors.size()));
        for (size_t f = 0; f < coords.size(); ++f)
            if (coords[f] < 0 || coords[f] >= g.factors[f])
                throw InvalidInput("const coordinate out of range");
        m.constants[i][j] = coords_index(g, coords);
    }
    if (pos < lines.size()) throw InvalidInput("trailing content after constants");
    validate_mesh(m);
    return m;
}

Mesh read_mesh_path(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_mesh(in);
}

void write_mesh(std::ostream& out, const Mesh& m) {
    const int k = static_cast<int>(m.groups.size());
    out << "orbits " << k << "\n";
    for (int i = 0; i < k; ++i) {
        out << "group " << i;
        for (int f : m.groups[i].factors) out << " " << f;
        out << "\n";
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            out << "const " << i << " " << j;
            for (int c : element_coords(m.groups[j], m.constants[i][j])) out << " " << c;
            out << "\n";
        }
}

void write_mesh_path(const std::string& path, const Mesh& m) {
    std::ofstream out = open_output(path);
    write_mesh(out, m);
}

std::vector<CatalogEntry> read_catalog(std::istream& in) {
    std::vector<std::string> lines = read_clean_lines(in);
    std::vector<CatalogEntry> entries;
    for (const std::string& line : lines) {
        CatalogEntry e;
        std::string key_hex;
        bool have_kind = false;
        std::string rest = line;
        int fields = 0;
        // fields are `name=value` separated by ';'; prov comes last and keeps
        // any ';'-free punctuation it contains
        while (!rest.empty()) {
            std::string field;
            if (fields < 3) {
                const size_t semi = rest.find(';');
                if (semi == std::string::npos) {
                    field = rest;
                    rest.clear();
                } else {
                    field = rest.substr(0, semi);
                    rest.erase(0, semi + 1);
                }
            } else {
                field = rest;
                rest.clear();
            }
            const size_t eq = field.find('=');
            if (eq == std::string::npos) throw InvalidInput("bad catalog field '" + field + "'");
            const std::string name = field.substr(0, eq);
            const std::string value = field.substr(eq + 1);
            if (name == "n") {
                e.n = parse_int_token(value, "catalog size");
            } else if (name == "key") {
                key_hex = value;
            } else if (name == "kind") {
                auto kk = kind_from_name(value);
                if (!kk) throw InvalidInput("unknown catalog kind '" + value + "'");
                e.kind = *kk;
                have_kind = true;
            } else if (name == "prov") {
                e.prov = value;
            } else {
                throw InvalidInput("unknown catalog field '" + name + "'");
            }
            ++fields;
        }
        if (e.n < 1 || key_hex.empty() || !have_kind)
            throw InvalidInput("catalog line missing n=, key=, or kind=");
        e.circ = table_from_hex(key_hex, e.n);
        // loaded tables are re-checked so a corrupted catalog cannot pass as data
        if (e.kind == SolutionKind::Racks) {
            LeftQuasigroup q = lq_from_table(e.circ);
            PropertyResult ld = check_property(q, LqProperty::LeftDistributive);
            if (!ld.holds) throw InvalidInput("catalog entry is not left distributive");
        } else {
            InvolutiveBirack b = birack_from_cycle_set(e.circ);
            BraidResult br = check_braid(b.circ, b.bullet);
            if (!br.ok) throw InvalidInput("catalog entry fails the braid relation");
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<CatalogEntry> read_catalog_path(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_catalog(in);
}

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries) {
    for (const CatalogEntry& e : entries)
        out << "n=" << e.n << ";key=" << table_hex(e.circ) << ";kind=" << kind_name(e.kind)
            << ";prov=" << e.prov << "\n";
}

void write_catalog_path(const std::string& path, const std::vector<CatalogEntry>& entries) {
    std::ofstream out = open_output(path);
    write_catalog(out, entries);
}

}  // namespace ybm
