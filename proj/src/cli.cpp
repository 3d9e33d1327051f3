#include "ybmesh/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "ybmesh/io.hpp"
#include "ybmesh/isotope.hpp"

namespace ybm {

namespace {

InvolutiveBirack build_birack(const SolutionFile& f) {
    if (f.bullet) return birack_from_tables(f.circ, *f.bullet);
    return birack_from_cycle_set(f.circ);
}

void emit_solution(const std::string& out_path, std::ostream& out, const InvolutiveBirack& b) {
    if (out_path.empty())
        write_solution(out, b.circ, &b.bullet);
    else
        write_solution_path(out_path, b.circ, &b.bullet);
}

int print_check_result(std::ostream& out, bool holds, const std::vector<int>& witness) {
    if (holds) {
        out << "true\n";
        return 0;
    }
    out << "false";
    if (!witness.empty()) {
        out << " (witness:";
        for (int v : witness) out << " " << v;
        out << ")";
    }
    out << "\n";
    return 1;
}

int do_check(const SolutionFile& f, const std::string& prop, std::ostream& out, WorkGuard* wg) {
    // table-only properties: answerable on any left quasigroup file
    static const std::map<std::string, LqProperty> lq_props = {
        {"right-cyclic", LqProperty::RightCyclic},
        {"medial", LqProperty::Medial},
        {"idempotent", LqProperty::Idempotent},
        {"star", LqProperty::ConditionStar},
        {"non-degenerate", LqProperty::NonDegenerate},
    };
    if (auto it = lq_props.find(prop); it != lq_props.end()) {
        PropertyResult r = check_property(lq_from_table(f.circ), it->second, wg);
        return print_check_result(out, r.holds, r.witness);
    }
    if (prop == "2reductive") {
        PropertyResult r = check_m_reductive(lq_from_table(f.circ), 2, wg);
        return print_check_result(out, r.holds, r.witness);
    }
    if (prop == "2permutational") {
        PropertyResult r = check_m_permutational(lq_from_table(f.circ), 2, wg);
        return print_check_result(out, r.holds, r.witness);
    }
    // pair-map properties: use the stored second table, or derive it
    if (prop == "braid" || prop == "involutive") {
        const Table bullet = f.bullet ? *f.bullet : birack_from_cycle_set(f.circ).bullet;
        if (prop == "braid") {
            BraidResult r = check_braid(f.circ, bullet);
            std::vector<int> w;
            if (!r.ok) w.assign(r.witness.begin(), r.witness.end());
            return print_check_result(out, r.ok, w);
        }
        std::array<int, 2> wt{};
        const bool ok = check_involutive(f.circ, bullet, &wt);
        std::vector<int> w;
        if (!ok) w.assign(wt.begin(), wt.end());
        return print_check_result(out, ok, w);
    }
    if (prop == "lri" || prop == "distributive") {
        InvolutiveBirack b = build_birack(f);
        PropertyResult r = check_birack_property(
            b, prop == "lri" ? BirackProperty::Lri : BirackProperty::Distributive, wg);
        return print_check_result(out, r.holds, r.witness);
    }
    throw InvalidInput(
        "unknown property '" + prop +
        "' (expected braid|involutive|lri|distributive|2reductive|2permutational|medial|"
        "right-cyclic|idempotent|star|non-degenerate)");
}

std::vector<int> parse_csv_ints(const std::string& s, const std::string& what) {
    std::vector<int> vals;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        try {
            size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw InvalidInput("bad integer '" + item + "' in " + what);
        }
    }
    return vals;
}

int do_iyb(const std::string& group_str, const std::string& gens_str,
           const std::string& out_path, std::ostream& out, std::ostream& err, WorkGuard* wg) {
    std::vector<int> factors = parse_csv_ints(group_str, "--group");
    // a lone "1" (or stray 1 factors) denote the trivial direct factor
    factors.erase(std::remove(factors.begin(), factors.end(), 1), factors.end());
    AbelianGroup g = make_abelian(factors);
    std::vector<int> gens;
    if (gens_str.empty()) {
        // standard basis: one generator per invariant factor
        if (g.factors.empty()) {
            gens.push_back(0);
        } else {
            for (size_t i = 0; i < g.factors.size(); ++i) {
                std::vector<int> coords(g.factors.size(), 0);
                coords[i] = 1;
                gens.push_back(coords_index(g, coords));
            }
        }
    } else {
        std::string tuple;
        std::istringstream is(gens_str);
        while (std::getline(is, tuple, ';')) {
            std::vector<int> coords = parse_csv_ints(tuple, "--generators");
            if (g.factors.empty() && coords == std::vector<int>{0}) {
                gens.push_back(0);
                continue;
            }
            if (coords.size() != g.factors.size())
                throw InvalidInput("generator tuple '" + tuple + "' needs " +
                                   std::to_string(g.factors.size()) + " coordinates");
            for (size_t i = 0; i < coords.size(); ++i)
                if (coords[i] < 0 || coords[i] >= g.factors[i])
                    throw InvalidInput("generator coordinate out of range in '" + tuple + "'");
            gens.push_back(coords_index(g, coords));
        }
        if (gens.empty()) throw InvalidInput("--generators must name at least one tuple");
    }
    Mesh m = iyb_mesh(g, gens);
    if (out_path.empty())
        write_mesh(out, m);
    else
        write_mesh_path(out_path, m);
    GroupStructure s = permutation_group_structure(mesh_sum(m), wg);
    err << "# permutation group: order " << s.order << ", invariant factors";
    if (s.invariant_factors.empty())
        err << " (trivial)";
    else
        for (int d : s.invariant_factors) err << " " << d;
    err << "\n";
    return 0;
}

int do_tables(int max_n, int brute_max, int jobs, std::ostream& out, std::ostream& err,
              WorkGuard* wg) {
    if (max_n < 1) throw InvalidInput("--max-n must be positive");
    const int rows = 5;
    const char* labels[rows] = {"racks", "2-reductive racks", "involutive solutions",
                                "multipermutation level <= 2",
                                "2-permutational not 2-reductive"};
    std::vector<std::vector<std::string>> cells(rows, std::vector<std::string>(max_n, "-"));
    for (int n = 1; n <= max_n; ++n) {
        std::vector<SolutionKind> kinds = {SolutionKind::TwoReductive,
                                           SolutionKind::Level2NonDistributive};
        if (n <= brute_max) {
            kinds.push_back(SolutionKind::AllInvolutive);
            kinds.push_back(SolutionKind::Racks);
        }
        CountReport rep = count_solutions(n, kinds, jobs, wg);
        for (const KindCount& kc : rep.kinds) {
            err << "# n=" << n << " " << kind_name(kc.kind) << ": " << kc.count << " ("
                << std::fixed << std::setprecision(2) << kc.seconds << "s)\n";
            switch (kc.kind) {
                case SolutionKind::Racks: cells[0][n - 1] = std::to_string(kc.count); break;
                case SolutionKind::TwoReductive:
                    cells[1][n - 1] = std::to_string(kc.count);
                    break;
                case SolutionKind::AllInvolutive:
                    cells[2][n - 1] = std::to_string(kc.count);
                    break;
                case SolutionKind::Level2NonDistributive:
                    cells[4][n - 1] = std::to_string(kc.count);
                    break;
            }
        }
        if (rep.level2_total) cells[3][n - 1] = std::to_string(*rep.level2_total);
    }
    const int label_w = 33, col_w = 8;
    out << std::left << std::setw(label_w) << "n" << std::right;
    for (int n = 1; n <= max_n; ++n) out << std::setw(col_w) << n;
    out << "\n";
    for (int r = 0; r < rows; ++r) {
        out << std::left << std::setw(label_w) << labels[r] << std::right;
        for (int n = 1; n <= max_n; ++n) out << std::setw(col_w) << cells[r][n - 1];
        out << "\n";
    }
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Involutive Yang-Baxter solution toolkit: construction, checks, enumeration"};
    app.require_subcommand(1);
    int code = 0;
    WorkGuard guard;

    // enumerate
    std::string en_kind, en_out;
    int en_size = 0, en_jobs = 0;
    bool en_count_only = false;
    auto* en = app.add_subcommand("enumerate", "Enumerate solution classes of one size");
    en->add_option("--kind", en_kind,
                   "2reductive | level2-nondistributive | all-involutive | racks")
        ->required();
    en->add_option("--size", en_size, "set size")->required();
    en->add_flag("--count-only", en_count_only, "print only the class count");
    en->add_option("--out", en_out, "write the catalog to this file");
    en->add_option("--jobs", en_jobs, "worker threads (default: all cores)");
    en->callback([&]() {
        auto kind = kind_from_name(en_kind);
        if (!kind) throw InvalidInput("unknown kind '" + en_kind + "'");
        if (en_count_only) {
            CountReport rep = count_solutions(en_size, {*kind}, en_jobs, &guard);
            const KindCount& kc = rep.kinds.at(0);
            err << "# " << kind_name(kc.kind) << " n=" << rep.n << ": " << kc.count
                << " classes in " << std::fixed << std::setprecision(2) << kc.seconds << "s\n";
            out << kc.count << "\n";
            return;
        }
        std::vector<CatalogEntry> entries = enumerate_kind(*kind, en_size, en_jobs, &guard);
        err << "# " << kind_name(*kind) << " n=" << en_size << ": " << entries.size()
            << " classes\n";
        if (en_out.empty())
            write_catalog(out, entries);
        else
            write_catalog_path(en_out, entries);
    });

    // check
    std::string ck_file, ck_prop;
    auto* ck = app.add_subcommand("check", "Check a property of a solution file");
    ck->add_option("file", ck_file, "solution file")->required();
    ck->add_option("--property", ck_prop,
                   "braid|involutive|lri|distributive|2reductive|2permutational|medial|"
                   "right-cyclic|idempotent|star|non-degenerate")
        ->required();
    ck->callback(
        [&]() { code = do_check(read_solution_path(ck_file), ck_prop, out, &guard); });

    // sum
    std::string sm_file, sm_out;
    auto* sm = app.add_subcommand("sum", "Build the solution of a mesh file");
    sm->add_option("meshfile", sm_file, "mesh file")->required();
    sm->add_option("--out", sm_out, "write the solution to this file");
    sm->callback([&]() { emit_solution(sm_out, out, mesh_sum(read_mesh_path(sm_file))); });

    // isotope
    std::string it_file, it_perm, it_out;
    auto* it = app.add_subcommand("isotope", "Twist the columns of a solution by a permutation");
    it->add_option("file", it_file, "solution file")->required();
    it->add_option("--perm", it_perm, "image list, e.g. \"1 0 3 2\"")->required();
    it->add_option("--out", it_out, "write the twisted solution to this file");
    it->callback([&]() {
        SolutionFile f = read_solution_path(it_file);
        InvolutiveBirack b = build_birack(f);
        emit_solution(it_out, out, birack_isotope(b, parse_image_list(it_perm, b.n)));
    });

    // to-distributive
    std::string td_file, td_out;
    int td_elem = 0;
    auto* td = app.add_subcommand("to-distributive",
                                  "Untwist a 2-permutational solution into a distributive one");
    td->add_option("file", td_file, "solution file")->required();
    td->add_option("--element", td_elem, "element whose row provides the untwisting")
        ->required();
    td->add_option("--out", td_out, "write the distributive solution to this file");
    td->callback([&]() {
        SolutionFile f = read_solution_path(td_file);
        emit_solution(td_out, out, to_distributive(build_birack(f), td_elem));
    });

    // retract
    std::string rt_file, rt_out;
    auto* rt = app.add_subcommand("retract", "Quotient a solution by equal rows");
    rt->add_option("file", rt_file, "solution file")->required();
    rt->add_option("--out", rt_out, "write the quotient to this file");
    rt->callback([&]() {
        SolutionFile f = read_solution_path(rt_file);
        Retraction r = retraction(build_birack(f));
        emit_solution(rt_out, out, r.quotient);
    });

    // level
    std::string lv_file;
    auto* lv = app.add_subcommand("level", "Print the multipermutation level of a solution");
    lv->add_option("file", lv_file, "solution file")->required();
    lv->callback([&]() {
        SolutionFile f = read_solution_path(lv_file);
        MpLevel l = mp_level(build_birack(f));
        if (l.multipermutation)
            out << l.level << "\n";
        else
            out << "not-multipermutation\n";
    });

    // iso
    std::string is_a, is_b;
    auto* is = app.add_subcommand("iso", "Find an isomorphism between two solution files");
    is->add_option("file1", is_a, "first solution file")->required();
    is->add_option("file2", is_b, "second solution file")->required();
    is->callback([&]() {
        SolutionFile fa = read_solution_path(is_a);
        SolutionFile fb = read_solution_path(is_b);
        auto h = table_isomorphism(fa.circ, fb.circ, &guard);
        if (h) {
            out << format_image_list(*h) << "\n";
            code = 0;
        } else {
            out << "non-isomorphic\n";
            code = 1;
        }
    });

    // iyb
    std::string iy_group, iy_gens, iy_out;
    auto* iy = app.add_subcommand(
        "iyb", "Build the mesh whose solution has a prescribed abelian permutation group");
    iy->add_option("--group", iy_group, "invariant factors, e.g. \"2,4\" (\"1\" = trivial)")
        ->required();
    iy->add_option("--generators", iy_gens,
                   "';'-separated coordinate tuples (default: standard basis)");
    iy->add_option("--out", iy_out, "write the mesh to this file");
    iy->callback([&]() { code = do_iyb(iy_group, iy_gens, iy_out, out, err, &guard); });

    // tables
    int tb_max_n = 0, tb_brute = 5, tb_jobs = 0;
    auto* tb = app.add_subcommand("tables", "Reproduce the classification count tables");
    tb->add_option("--max-n", tb_max_n, "largest size to count")->required();
    tb->add_option("--bruteforce-max", tb_brute,
                   "largest size for the brute-force rows (default 5)");
    tb->add_option("--jobs", tb_jobs, "worker threads (default: all cores)");
    tb->callback([&]() { code = do_tables(tb_max_n, tb_brute, tb_jobs, out, err, &guard); });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const WorkLimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return code;
}

}  // namespace ybm
