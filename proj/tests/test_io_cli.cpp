#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/stat.h>
#include <sys/wait.h>

#include "doctest.h"
#include "fixtures.hpp"
#include "ybmesh/cli.hpp"
#include "ybmesh/io.hpp"
#include "ybmesh/isotope.hpp"

using namespace ybm;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp_dir() {
    static std::string dir = [] {
        std::string d = "io_cli_tmp";
        mkdir(d.c_str(), 0755);
        return d;
    }();
    return dir;
}

std::string write_solution_file(const std::string& name, const Table& circ,
                                const Table* bullet = nullptr) {
    std::string path = tmp_dir() + "/" + name;
    write_solution_path(path, circ, bullet);
    return path;
}

std::string write_text(const std::string& name, const std::string& text) {
    std::string path = tmp_dir() + "/" + name;
    std::ofstream f(path);
    f << text;
    return path;
}

std::vector<int> ints_in(const std::string& line) {
    std::istringstream is(line);
    std::vector<int> out;
    int v;
    while (is >> v) out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("solution file round trip") {
    auto b = birack_from_cycle_set(fx::twist4());
    std::ostringstream os;
    write_solution(os, b.circ, &b.bullet);
    std::istringstream is(os.str());
    auto f = read_solution(is);
    CHECK(f.n == 4);
    CHECK(f.circ == b.circ);
    REQUIRE(f.bullet.has_value());
    CHECK(*f.bullet == b.bullet);

    std::ostringstream os2;
    write_solution(os2, b.circ, nullptr);
    std::istringstream is2(os2.str());
    auto f2 = read_solution(is2);
    CHECK(f2.circ == b.circ);
    CHECK(!f2.bullet.has_value());

    // comments and blank lines are tolerated
    std::istringstream is3("# title\n\nn 2\n # indented comment\n0 1\n\n1 0\n");
    auto f3 = read_solution(is3);
    CHECK(f3.circ == Table{{0, 1}, {1, 0}});

    auto bad = [](const std::string& body) {
        std::istringstream s(body);
        CHECK_THROWS_AS((void)read_solution(s), InvalidInput);
    };
    bad("");
    bad("n 2\n0 1\n");                  // missing row
    bad("n 2\n0 1\n1 0\n0 1\n");        // trailing garbage
    bad("n 2\n0 1 1\n1 0\n");           // row too long
    bad("n 2\n0 2\n1 0\n");             // entry out of range
    bad("m 2\n0 1\n1 0\n");             // bad header
    bad("n 2\n0 1\n1 0\nbullet\n0 0\n");  // incomplete second table
}

TEST_CASE("mesh file round trip") {
    for (const auto& m : {fx::mk_mesh({{2, 4}, {}}, {{5, 0}, {3, 0}}), fx::no_star_mesh8(),
                          fx::mk_mesh({{}, {}}, {{0, 0}, {0, 0}})}) {
        std::ostringstream os;
        write_mesh(os, m);
        std::istringstream is(os.str());
        auto r = read_mesh(is);
        REQUIRE(r.groups.size() == m.groups.size());
        for (size_t i = 0; i < m.groups.size(); ++i) CHECK(r.groups[i].factors == m.groups[i].factors);
        CHECK(r.constants == m.constants);
    }

    auto bad = [](const std::string& body) {
        std::istringstream s(body);
        CHECK_THROWS_AS((void)read_mesh(s), InvalidInput);
    };
    bad("orbits 1\ngroup 0 2\n");                          // missing constants
    bad("orbits 2\ngroup 0 2\ngroup 1\nconst 0 0 1\nconst 0 0 1\nconst 1 0 0\nconst 1 1\n");  // duplicate cell
    bad("orbits 1\ngroup 0 2\nconst 0 0 3\n");             // coordinate out of range
    bad("orbits 1\ngroup 0 2\nconst 0 0 0\n");             // column fails to generate
    bad("orbits 2\ngroup 0 2\ngroup 1 2\nconst 0 0 1\nconst 0 1 0\nconst 1 0 0\n");  // missing cell
    bad("orbits 1\ngroup 0 2 3\nconst 0 0 1 0\n");         // 2 does not divide 3
    bad("orbits 1\ngroup 0 2\nconst 0 0 1\nconst 0 0 1\n");  // trailing extra line

    // a trivial-group line has no factor tokens and its constants no coordinates
    std::istringstream is("orbits 2\ngroup 0 2\ngroup 1\nconst 0 0 1\nconst 0 1\nconst 1 0 0\nconst 1 1\n");
    auto m = read_mesh(is);
    CHECK(m.groups[1].order == 1);
    CHECK(mesh_sum(m).circ == Table{{1, 0, 2}, {1, 0, 2}, {0, 1, 2}});
}

TEST_CASE("catalog round trip and re-validation") {
    auto entries = enumerate_distributive(3);
    REQUIRE(entries.size() == 5);
    std::ostringstream os;
    write_catalog(os, entries);
    std::istringstream is(os.str());
    auto back = read_catalog(is);
    REQUIRE(back.size() == 5);
    for (size_t i = 0; i < 5; ++i) {
        CHECK(back[i].n == entries[i].n);
        CHECK(back[i].circ == entries[i].circ);
        CHECK(back[i].kind == entries[i].kind);
        CHECK(back[i].prov == entries[i].prov);
    }

    std::ostringstream empty;
    write_catalog(empty, {});
    std::istringstream eis(empty.str());
    CHECK(read_catalog(eis).empty());

    auto bad = [](const std::string& line) {
        std::istringstream s(line);
        CHECK_THROWS_AS((void)read_catalog(s), InvalidInput);
    };
    bad("n=2;key=00010100;kind=2reductive;prov=x\n");   // not right cyclic: no completion
    bad("n=2;key=0001;kind=2reductive;prov=x\n");       // truncated key
    bad("n=2;key=00010001;kind=nonsense;prov=x\n");     // unknown kind
    bad("n=2;key=00010001;prov=x\n");                   // missing field
    // a non-distributive solution cannot pose as a rack
    bad("n=4;key=" + table_hex(fx::twist4()) + ";kind=racks;prov=x\n");
    // prov preserves separators after the third field
    std::istringstream pis("n=4;key=" + table_hex(fx::twist4()) +
                           ";kind=level2-nondistributive;prov=iso:mesh:g=2,2:c=0,0,1,1:pi=1 0 3 2\n");
    auto pe = read_catalog(pis);
    REQUIRE(pe.size() == 1);
    CHECK(pe[0].prov == "iso:mesh:g=2,2:c=0,0,1,1:pi=1 0 3 2");
}

TEST_CASE("cli help and argument errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"enumerate", "--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"enumerate"}).code == 2);                          // missing required options
    CHECK(run({"enumerate", "--kind", "blue", "--size", "3"}).code == 2);
    CHECK(run({"enumerate", "--kind", "racks", "--size", "99"}).code == 2);
    CHECK(run({"check", "no_such_file.lqt", "--property", "braid"}).code == 2);
}

TEST_CASE("cli check") {
    auto path = write_solution_file("tr4.lqt", fx::two_red4());
    auto r = run({"check", path, "--property", "2reductive"});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
    CHECK(run({"check", path, "--property", "distributive"}).code == 0);
    CHECK(run({"check", path, "--property", "lri"}).code == 0);
    CHECK(run({"check", path, "--property", "idempotent"}).code == 1);

    auto tw = write_solution_file("tw4.lqt", fx::twist4());
    auto rf = run({"check", tw, "--property", "2reductive"});
    CHECK(rf.code == 1);
    CHECK(rf.out.rfind("false (witness:", 0) == 0);
    CHECK(run({"check", tw, "--property", "medial"}).code == 0);
    CHECK(run({"check", tw, "--property", "2permutational"}).code == 0);
    CHECK(run({"check", tw, "--property", "star"}).code == 1);

    auto r2 = run({"check", path, "--property", "unicorn"});
    CHECK(r2.code == 2);

    // pair-map properties use the stored second table when present
    auto b = birack_from_cycle_set(fx::twist4());
    auto wp = write_solution_file("tw4b.lqt", b.circ, &b.bullet);
    CHECK(run({"check", wp, "--property", "braid"}).code == 0);
    CHECK(run({"check", wp, "--property", "involutive"}).code == 0);
    Table shift = {{1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}, {0, 0, 0, 0}};
    auto bad = write_solution_file("badpair.lqt", fx::projection(4), &shift);
    CHECK(run({"check", bad, "--property", "braid"}).code == 0);
    CHECK(run({"check", bad, "--property", "involutive"}).code == 1);

    // a table that is not even a left quasigroup is invalid input
    auto nl = write_text("notlq.lqt", "n 2\n0 0\n1 0\n");
    CHECK(run({"check", nl, "--property", "idempotent"}).code == 2);
}

TEST_CASE("cli enumerate") {
    auto r = run({"enumerate", "--kind", "2reductive", "--size", "4", "--count-only"});
    CHECK(r.code == 0);
    CHECK(r.out == "17\n");
    CHECK(r.err.find("classes") != std::string::npos);

    auto cat = tmp_dir() + "/l2n4.cat";
    auto r2 = run({"enumerate", "--kind", "level2-nondistributive", "--size", "4", "--out", cat});
    CHECK(r2.code == 0);
    auto entries = read_catalog_path(cat);
    CHECK(entries.size() == 2);

    auto r3 = run({"enumerate", "--kind", "racks", "--size", "3", "--jobs", "2"});
    CHECK(r3.code == 0);
    std::istringstream is(r3.out);
    CHECK(read_catalog(is).size() == 6);
}

TEST_CASE("cli sum and iyb") {
    auto mesh_path = tmp_dir() + "/m.mesh";
    write_mesh_path(mesh_path, fx::mk_mesh({{2}, {2}}, {{0, 0}, {1, 1}}));
    auto r = run({"sum", mesh_path});
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    auto f = read_solution(is);
    CHECK(f.circ == Table{{0, 1, 2, 3}, {0, 1, 2, 3}, {1, 0, 3, 2}, {1, 0, 3, 2}});
    REQUIRE(f.bullet.has_value());
    CHECK(check_braid(f.circ, *f.bullet).ok);

    auto r2 = run({"iyb", "--group", "2,4"});
    CHECK(r2.code == 0);
    CHECK(r2.err.find("order 8") != std::string::npos);
    CHECK(r2.err.find("invariant factors 2 4") != std::string::npos);
    std::istringstream mis(r2.out);
    auto m = read_mesh(mis);
    CHECK(mesh_size(m) == 16);
    auto g = permutation_group_structure(mesh_sum(m));
    CHECK(g.invariant_factors == std::vector<int>{2, 4});

    // explicit generators: Z_6 generated by 2 and 3
    auto r3 = run({"iyb", "--group", "6", "--generators", "2;3"});
    CHECK(r3.code == 0);
    CHECK(r3.err.find("order 6") != std::string::npos);

    CHECK(run({"iyb", "--group", "6", "--generators", "2"}).code == 2);  // does not generate
    CHECK(run({"iyb", "--group", "0"}).code == 2);
    CHECK(run({"iyb", "--group", "x"}).code == 2);
    CHECK(run({"iyb", "--group", "1"}).code == 0);  // trivial group is allowed

    // the sum of an emitted mesh file re-validates
    auto mesh2 = tmp_dir() + "/iyb.mesh";
    CHECK(run({"iyb", "--group", "3", "--out", mesh2}).code == 0);
    CHECK(run({"sum", mesh2}).code == 0);
}

TEST_CASE("cli isotope, to-distributive, retract, level") {
    auto base = write_solution_file("base.lqt", fx::two_red4());
    auto r = run({"isotope", base, "--perm", "1 0 3 2"});
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    auto f = read_solution(is);
    CHECK(f.circ == fx::twist4());
    REQUIRE(f.bullet.has_value());
    CHECK(*f.bullet == fx::twist4_bullet());

    CHECK(run({"isotope", base, "--perm", "1 0 3"}).code == 2);
    CHECK(run({"isotope", base, "--perm", "1 1 3 2"}).code == 2);
    // a twist that breaks right-cyclicity is rejected: use one on the lri fixture
    auto l5 = write_solution_file("lri5.lqt", fx::lri5());
    bool found_bad = false;
    Perm p = identity_perm(5);
    while (std::next_permutation(p.begin(), p.end())) {
        auto t = lq_isotope(fx::lri5(), p);
        if (!check_property(lq_from_table(t), LqProperty::RightCyclic).holds) {
            CHECK(run({"isotope", l5, "--perm", format_image_list(p)}).code == 2);
            found_bad = true;
            break;
        }
    }
    CHECK(found_bad);

    auto tw = write_solution_file("tw.lqt", fx::twist4());
    auto rd = run({"to-distributive", tw, "--element", "0"});
    CHECK(rd.code == 0);
    std::istringstream ds(rd.out);
    CHECK(read_solution(ds).circ == fx::two_red4());
    CHECK(run({"to-distributive", tw, "--element", "9"}).code == 2);
    CHECK(run({"to-distributive", l5, "--element", "0"}).code == 2);  // not 2-permutational

    auto rr = run({"retract", tw});
    CHECK(rr.code == 0);
    std::istringstream rs(rr.out);
    auto q = read_solution(rs);
    CHECK(q.circ == Table{{1, 0}, {1, 0}});
    REQUIRE(q.bullet.has_value());
    CHECK(*q.bullet == Table{{1, 1}, {0, 0}});

    CHECK(run({"level", tw}).out == "2\n");
    CHECK(run({"level", tw}).code == 0);
    auto l3 = write_solution_file("l3.lqt", fx::level3a());
    CHECK(run({"level", l3}).out == "3\n");

    // an irretractable solution has no level
    for (const auto& e : enumerate_involutive_bruteforce(4)) {
        auto b = birack_from_cycle_set(e.circ);
        if (check_birack_property(b, BirackProperty::Irretractable).holds && b.n > 1) {
            auto ir = write_solution_file("irr.lqt", e.circ);
            auto lr = run({"level", ir});
            CHECK(lr.code == 0);
            CHECK(lr.out == "not-multipermutation\n");
            break;
        }
    }
}

TEST_CASE("cli iso") {
    auto a = write_solution_file("iso_a.lqt", fx::perm5());
    auto b = write_solution_file("iso_b.lqt", fx::relabel(fx::perm5(), {4, 2, 0, 1, 3}));
    auto r = run({"iso", a, b});
    CHECK(r.code == 0);
    auto h = parse_image_list(r.out, 5);
    CHECK(fx::relabel(fx::perm5(), h) == fx::relabel(fx::perm5(), {4, 2, 0, 1, 3}));

    auto c = write_solution_file("iso_c.lqt", fx::cyc4());
    auto d = write_solution_file("iso_d.lqt", fx::twist4());
    auto r2 = run({"iso", c, d});
    CHECK(r2.code == 1);
    CHECK(r2.out == "non-isomorphic\n");
}

TEST_CASE("cli tables") {
    // value cells start after the fixed-width row label
    auto parse_rows = [](const std::string& text) {
        std::istringstream is(text);
        std::string line;
        std::getline(is, line);  // header
        std::vector<std::vector<int>> rows;
        while (std::getline(is, line)) {
            REQUIRE(line.size() > 33);
            rows.push_back(ints_in(line.substr(33)));
        }
        return rows;
    };
    auto r = run({"tables", "--max-n", "4"});
    CHECK(r.code == 0);
    auto rows = parse_rows(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<int>{1, 2, 6, 19});    // racks
    CHECK(rows[1] == std::vector<int>{1, 2, 5, 17});    // 2-reductive racks
    CHECK(rows[2] == std::vector<int>{1, 2, 5, 23});    // involutive solutions
    CHECK(rows[3] == std::vector<int>{1, 2, 5, 19});    // level <= 2
    CHECK(rows[4] == std::vector<int>{0, 0, 0, 2});     // 2-permutational, not 2-reductive

    // beyond the brute-force bound the exhaustive rows show dashes
    auto r2 = run({"tables", "--max-n", "4", "--bruteforce-max", "3"});
    CHECK(r2.code == 0);
    auto rows2 = parse_rows(r2.out);
    REQUIRE(rows2.size() == 5);
    CHECK(rows2[0] == std::vector<int>{1, 2, 6});       // n=4 cell is "-"
    CHECK(rows2[2] == std::vector<int>{1, 2, 5});
    CHECK(rows2[1] == std::vector<int>{1, 2, 5, 17});
    CHECK(r2.out.find("-") != std::string::npos);
    CHECK(run({"tables", "--max-n", "0"}).code == 2);
}

TEST_CASE("cli work limit surfaces as exit 3") {
    // through the real binary so the environment override is fresh
    struct stat st{};
    if (stat("./ybm", &st) != 0) return;  // only run next to the built binary
    int rc = std::system(
        "YBMESH_WORK_LIMIT=1000 ./ybm enumerate --kind all-involutive --size 5 --count-only "
        ">/dev/null 2>&1");
    REQUIRE(rc != -1);
    CHECK(WIFEXITED(rc));
    CHECK(WEXITSTATUS(rc) == 3);
}

TEST_CASE("emitted files re-parse and re-validate") {
    // every writer output feeds back through its reader
    auto sol = tmp_dir() + "/roundtrip.lqt";
    auto r1 = run({"isotope", write_solution_file("rt_base.lqt", fx::perm5()), "--perm",
                   "0 2 1 4 3", "--out", sol});
    CHECK(r1.code == 0);
    auto f = read_solution_path(sol);
    CHECK(check_braid(f.circ, *f.bullet).ok);

    auto cat = tmp_dir() + "/roundtrip.cat";
    CHECK(run({"enumerate", "--kind", "all-involutive", "--size", "4", "--out", cat}).code == 0);
    auto entries = read_catalog_path(cat);
    CHECK(entries.size() == 23);
    for (const auto& e : entries) CHECK(e.kind == SolutionKind::AllInvolutive);
}
