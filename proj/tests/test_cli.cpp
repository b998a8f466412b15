#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "loops/analysis.hpp"
#include "loops/cli.hpp"
#include "loops/io.hpp"

#include "test_util.hpp"

using namespace loops;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        std::random_device rd;
        path = std::filesystem::temp_directory_path() /
               ("loops_cli_test_" + std::to_string(rd()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("cli check") {
    TempDir tmp;
    write_loop_table_file(tmp.file("q6.loop"), testutil::q6());
    auto r = run_cli({"check", tmp.file("q6.loop")});
    CHECK(r.code == 0);
    CHECK(r.out.find("automorphic=true\n") != std::string::npos);
    CHECK(r.out.find("nonassociative=true\n") != std::string::npos);

    auto missing = run_cli({"check", tmp.file("nope.loop")});
    CHECK(missing.code == 1);

    std::ofstream bad(tmp.file("bad.loop"));
    bad << "2\n1 2\n2 2\n";
    bad.close();
    CHECK(run_cli({"check", tmp.file("bad.loop")}).code == 1);
}

TEST_CASE("cli check with normalization") {
    TempDir tmp;
    std::ofstream f(tmp.file("shifted.loop"));
    f << "3\n3 1 2\n1 2 3\n2 3 1\n"; // identity is element 2
    f.close();
    CHECK(run_cli({"check", tmp.file("shifted.loop")}).code == 1);
    auto r = run_cli({"check", "--normalize", tmp.file("shifted.loop")});
    CHECK(r.code == 0);
    CHECK(r.out.find("order=3\n") != std::string::npos);
    CHECK(r.out.find("associative=true\n") != std::string::npos);
}

TEST_CASE("cli construct and associate") {
    TempDir tmp;
    CHECK(run_cli({"construct", "dih", "--m", "2", "--n", "3", "-o", tmp.file("d.loop")}).code ==
          0);
    LoopTable d = read_loop_table_file(tmp.file("d.loop"));
    CHECK(are_isomorphic(d, testutil::q6()).has_value());

    CHECK(run_cli({"construct", "qab", "--n", "3", "--a", "1", "--b", "2", "-o",
                   tmp.file("q.loop")})
              .code == 0);
    LoopTable q = read_loop_table_file(tmp.file("q.loop"));
    CHECK(q.order() == 27);

    // Associated Bruck loop of an order-27 commutative automorphic loop.
    CHECK(run_cli({"associate", "bruck", tmp.file("q.loop"), "-o", tmp.file("b.loop")}).code ==
          0);
    LoopTable b = read_loop_table_file(tmp.file("b.loop"));
    CHECK(b.order() == 27);

    // Gamma of that Bruck loop returns the original.
    CHECK(run_cli({"associate", "gamma", tmp.file("b.loop"), "-o", tmp.file("g.loop")}).code ==
          0);
    CHECK(read_loop_table_file(tmp.file("g.loop")) == q);

    // Lie ring of an eligible loop writes an algebra file.
    CHECK(run_cli({"construct", "fieldext", "--p", "3", "--a", "0", "-o", tmp.file("w.loop")})
              .code == 0);
    CHECK(run_cli({"associate", "lie", tmp.file("w.loop"), "-o", tmp.file("w.alg")}).code == 0);
    Algebra a = read_algebra_file(tmp.file("w.alg"));
    CHECK(a.order() == 27);

    // Preconditions surface as exit 1 with a diagnostic.
    write_loop_table_file(tmp.file("q6.loop"), testutil::q6());
    auto r = run_cli({"associate", "lie", tmp.file("q6.loop"), "-o", tmp.file("no.alg")});
    CHECK(r.code == 1);
    CHECK(!r.err.empty());

    // The drapal construction reports failed orbit conditions.
    CHECK(run_cli({"construct", "drapal", "--p", "5", "--t", "2", "-o", tmp.file("d15.loop")})
              .code == 0);
    CHECK(read_loop_table_file(tmp.file("d15.loop")).order() == 15);
    CHECK(run_cli({"construct", "drapal", "--p", "5", "--t", "1", "-o", tmp.file("x.loop")})
              .code == 1);
}

TEST_CASE("cli enumerate") {
    auto r = run_cli({"enumerate", "--order", "5", "--naive"});
    CHECK(r.code == 0);
    CHECK(r.out.find("count=56\n") != std::string::npos);

    auto f = run_cli({"enumerate", "--order", "6", "--naive", "--filter",
                      "automorphic,nonassociative", "--jobs", "2"});
    CHECK(f.code == 0);
    CHECK(f.out.find("count=20\n") != std::string::npos);
    CHECK(f.out.find("classes=1\n") != std::string::npos);

    // Output merging does not depend on the worker count.
    auto f1 = run_cli({"enumerate", "--order", "6", "--naive", "--filter",
                       "automorphic,nonassociative"});
    CHECK(f1.out == f.out);

    CHECK(run_cli({"enumerate", "--order", "9", "--naive"}).code == 2);
    CHECK(run_cli({"enumerate", "--order", "6", "--naive", "--naive-max", "5"}).code == 2);
    CHECK(run_cli({"enumerate", "--order", "3", "--naive", "--filter", "bogus"}).code == 1);
}

TEST_CASE("cli enumerate writes representatives") {
    TempDir tmp;
    auto r = run_cli({"enumerate", "--order", "4", "--naive", "--out-dir",
                      tmp.file("census")});
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(tmp.file("census/census.csv")));
    CHECK(std::filesystem::exists(tmp.file("census/rep_001.loop")));
    LoopTable rep = read_loop_table_file(tmp.file("census/rep_001.loop"));
    CHECK(rep.order() == 4);
}

TEST_CASE("cli enumerate from a group file") {
    TempDir tmp;
    {
        std::ofstream f(tmp.file("z5.gens"));
        f << "# regular 5-cycle\n2 3 4 5 1\n";
    }
    auto r = run_cli({"enumerate", "--order", "5", "--group", tmp.file("z5.gens"), "--h",
                      "trivial"});
    CHECK(r.code == 0);
    CHECK(r.out.find("count=1\n") != std::string::npos);

    auto s = run_cli({"enumerate", "--order", "5", "--group", tmp.file("z5.gens")});
    CHECK(s.code == 0); // stabilizer of 1 is trivial here anyway
    CHECK(s.out.find("count=1\n") != std::string::npos);

    CHECK(run_cli({"enumerate", "--order", "6", "--group", tmp.file("z5.gens")}).code == 1);

    // A tiny materialization cap is a resource failure, exit 2.
    CHECK(run_cli({"enumerate", "--order", "5", "--group", tmp.file("z5.gens"),
                   "--group-cap", "2"})
              .code == 2);
}

TEST_CASE("cli census") {
    auto r = run_cli({"census", "2p", "--p", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("classes=3\n", 0) == 0);

    auto p3 = run_cli({"census", "p3", "--p", "3", "--jobs", "3"});
    CHECK(p3.code == 0);
    CHECK(p3.out.rfind("classes=7\n", 0) == 0);

    auto pq = run_cli({"census", "pq", "--p", "5", "--q", "3"});
    CHECK(pq.code == 0);
    CHECK(pq.out.rfind("classes=1\n", 0) == 0);

    auto pq2 = run_cli({"census", "pq", "--p", "11", "--q", "7"});
    CHECK(pq2.code == 0);
    CHECK(pq2.out.rfind("classes=0\n", 0) == 0);

    CHECK(run_cli({"census", "2p", "--p", "4"}).code == 1);
    CHECK(run_cli({"census", "nope", "--p", "3"}).code == 1);
}

TEST_CASE("cli simple hunt") {
    TempDir tmp;
    std::filesystem::create_directories(tmp.file("groups"));
    {
        std::ofstream f(tmp.file("groups/psl25.gens"));
        write_generators(f, testutil::psl25_gens());
        std::ofstream g(tmp.file("groups/pgl25.gens"));
        write_generators(g, testutil::pgl25_gens());
        std::ofstream h(tmp.file("groups/s6.gens"));
        write_generators(h, testutil::s6_gens());
    }
    auto r = run_cli({"simple-hunt", "--order", "6", "--groups", tmp.file("groups")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("stored=0\n", 0) == 0);
    CHECK(r.err.find("4-transitive") != std::string::npos);

    CHECK(run_cli({"simple-hunt", "--order", "5", "--groups", tmp.file("groups")}).code == 1);
}

TEST_CASE("cli argument errors") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"no-such-command"}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
}
