#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "ms2c/cli.hpp"
#include "ms2c/io.hpp"

using namespace ms2c;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("ms2col_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
        write_file(path("flip.txt"), "p ms2c 3 2\nl 1 2\ne 1 2\ne 2 3\nl 2 1\ne 1 3\n");
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, SolveFlipExample) {
    auto yes = run({"solve", path("flip.txt"), "--d", "1", "--algo", "bruteforce"});
    EXPECT_EQ(yes.code, kExitYes);
    EXPECT_EQ(yes.out, "s yes\n");
    auto no = run({"solve", path("flip.txt"), "--d", "0", "--algo", "bruteforce"});
    EXPECT_EQ(no.code, kExitNo);
    EXPECT_EQ(no.out, "s no\n");
}

TEST_F(Cli, VerifyAcceptsWitnesses) {
    for (const std::string algo : {"auto", "bruteforce", "layered", "orientation", "dcc", "treewidth"}) {
        const auto w = path("w_" + algo + ".txt");
        ASSERT_EQ(run({"solve", path("flip.txt"), "--d", "1", "--algo", algo, "--witness", w}).code, kExitYes) << algo;
        EXPECT_EQ(run({"verify", path("flip.txt"), w, "--d", "1"}).code, kExitYes) << algo;
        EXPECT_EQ(run({"verify", path("flip.txt"), w, "--d", "0"}).code, kExitNo) << algo;
    }
    const auto g = path("wg.txt");
    ASSERT_EQ(run({"solve-global", path("flip.txt"), "--D", "1", "--witness", g}).code, kExitYes);
    EXPECT_EQ(run({"verify", path("flip.txt"), g, "--D", "1"}).code, kExitYes);
    EXPECT_EQ(run({"solve-global", path("flip.txt"), "--D", "0", "--algo", "a2sat"}).code, kExitNo);
}

TEST_F(Cli, BudgetFromFile) {
    write_file(path("b.txt"), "p ms2c 3 2\nb local 1\nl 1 2\ne 1 2\ne 2 3\nl 2 1\ne 1 3\n");
    EXPECT_EQ(run({"solve", path("b.txt")}).code, kExitYes);
    EXPECT_EQ(run({"solve", path("b.txt"), "--d", "0"}).code, kExitNo);
    EXPECT_EQ(run({"solve-global", path("b.txt")}).code, kExitUsage);
    EXPECT_EQ(run({"solve", path("flip.txt")}).code, kExitUsage);
}

TEST_F(Cli, ReduceCounts) {
    auto r = run({"reduce", path("flip.txt"), "--to", "ms2sat", "--d", "1"});
    ASSERT_EQ(r.code, kExitYes);
    auto inst = parse_ms2sat(r.out);
    EXPECT_EQ(inst.variables, 3);
    EXPECT_EQ(inst.stages, 2);
    EXPECT_EQ(inst.clauses[0].size(), 4U);
    EXPECT_EQ(inst.clauses[1].size(), 2U);
    auto w = run({"reduce", path("flip.txt"), "--to", "a2sat", "--D", "1", "-o", path("f.wcnf")});
    ASSERT_EQ(w.code, kExitYes);
    auto [f, k] = parse_wcnf(read_file(path("f.wcnf")));
    EXPECT_EQ(k, 1);
    EXPECT_EQ(f.variables, 6);
    EXPECT_EQ(f.soft_count(), 6);
}

TEST_F(Cli, GenOutputsParse) {
    const std::vector<std::vector<std::string>> cases{
        {"gen", "x13sat", "--formula", "1 -2 3, 2 3 -1"},
        {"gen", "x13sat", "--vars", "3", "--clauses", "2", "--seed", "4"},
        {"gen", "edgebip", "--n", "4", "--edges", "1-2,2-3,1-3,3-4", "--k", "1"},
        {"gen", "clique", "--n", "4", "--edges", "1-2,2-3,1-3,3-4", "--k", "3"},
        {"gen", "mcclique", "--k", "2", "--n", "2", "--edges", "1-3,2-4"},
        {"gen", "random", "--n", "5", "--tau", "3", "--p", "0.3", "--d", "1"},
    };
    for (const auto& args : cases) {
        auto r = run(args);
        ASSERT_EQ(r.code, kExitYes) << args[1] << ": " << r.err;
        EXPECT_NO_THROW(parse_instance(r.out)) << args[1];
    }
    ASSERT_EQ(run({"gen", "random", "--n", "3", "--tau", "2", "--d", "1", "-o", path("a.txt")}).code, kExitYes);
    auto few = run({"gen", "fewedges", "--inner", path("a.txt"), "--labels", path("labels.json")});
    ASSERT_EQ(few.code, kExitYes) << few.err;
    EXPECT_NO_THROW(parse_instance(few.out));
    EXPECT_NE(read_file(path("labels.json")).find("\"1\": "), std::string::npos);
    auto both = run({"gen", "andcompose", path("a.txt"), path("a.txt")});
    ASSERT_EQ(both.code, kExitYes);
    EXPECT_EQ(parse_instance(both.out).graph.lifetime(), 2 + 3 + 2);
}

TEST_F(Cli, Params) {
    auto r = run({"params", path("flip.txt"), "--param", "ncc", "--kv"});
    ASSERT_EQ(r.code, kExitYes);
    EXPECT_NE(r.out.find("ncc.layers=1,2\n"), std::string::npos);
    EXPECT_NE(r.out.find("ncc.p_sum=3\n"), std::string::npos);
    EXPECT_EQ(run({"params", path("flip.txt"), "--param", "nope"}).code, kExitUsage);
}

TEST_F(Cli, BenchHeader) {
    for (const std::string suite : {"local", "global", "gadgets"}) {
        auto r = run({"bench", "--suite", suite, "--count", "2", "--seed", "3"});
        ASSERT_EQ(r.code, kExitYes) << suite;
        EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "instance,algo,verdict,micros,states");
    }
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitYes);
    EXPECT_EQ(run({"solve"}).code, kExitUsage);
    EXPECT_EQ(run({"solve", path("missing.txt"), "--d", "1"}).code, kExitUsage);
    write_file(path("bad.txt"), "p ms2c 2 1\nl 1 1\ne 1 3\n");
    auto bad = run({"solve", path("bad.txt"), "--d", "1"});
    EXPECT_EQ(bad.code, kExitUsage);
    EXPECT_NE(bad.err.find("line 3, column 5"), std::string::npos) << bad.err;

    // 30 vertices over one layer exceed the brute-force bit cap.
    std::string big = "p ms2c 30 1\nl 1 0\n";
    write_file(path("big.txt"), big);
    EXPECT_EQ(run({"solve", path("big.txt"), "--d", "0", "--algo", "bruteforce"}).code, kExitCap);
}
