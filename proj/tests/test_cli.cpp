#include "potts/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

std::string data(const std::string& name) { return std::string(POTTS_TEST_DATA) + "/" + name; }

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "potts");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = potts::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("potts-cli-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST(Cli, Compute) {
    EXPECT_EQ(run({"compute", "--chromatic", data("triangle.g")}).out, "1*q^3 + -3*q^2 + 2*q^1\n");
    EXPECT_EQ(run({"compute", "--z", "--weights", "uniform:1", data("loop.g")}).out, "2*q^1\n");
    EXPECT_EQ(run({"compute", "--flow", data("triangle.g")}).out, "1*q^1 + -1\n");
    EXPECT_EQ(run({"compute", "--z-delcon", "--weights", "uniform:1", data("triangle.g")}).out,
              "1*q^3 + 3*q^2 + 4*q^1\n");
    EXPECT_EQ(run({"compute", "--zt", "--weights", "uniform:1", data("u12.matroid")}).out, "1 + 3*q^-1\n");
    EXPECT_EQ(run({"compute", "--z", "--weights", "uniform:-q", data("triangle.g")}).out, "-1*q^4 + 1*q^3\n");
    const auto fig = run({"compute", "--z", data("figure1.g")});
    EXPECT_EQ(fig.code, 0);
    EXPECT_EQ(fig.out, run({"compute", "--z-delcon", data("figure1.g")}).out);
}

TEST(Cli, ComputeErrors) {
    const auto symbolic = run({"compute", "--z", data("triangle.g")});
    EXPECT_EQ(symbolic.code, 3);
    EXPECT_NE(symbolic.err.find("symbolic"), std::string::npos);
    const auto dir = scratch_dir("errors");
    std::ofstream(dir / "bad.g") << "p graph 2 1\ne 0 0 7\n";
    const auto bad = run({"compute", "--chromatic", (dir / "bad.g").string()});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
    EXPECT_EQ(run({"compute", "--chromatic", (dir / "missing.g").string()}).code, 2);
    EXPECT_EQ(run({"compute", "--chromatic", "--subset-cap", "2", data("triangle.g")}).code, 3);
    EXPECT_EQ(run({"verify", "--identity", "nonsense", data("triangle.g")}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"verify", "--identity", "eq1.1", "--v", "uniform:0", "--u", "uniform:1", data("triangle.g")}).code,
              3);
}

TEST(Cli, Verify) {
    const auto loop = run({"verify", "--identity", "eq1.2", "--v", "uniform:3", "--u", "uniform:1", data("loop.g")});
    EXPECT_EQ(loop.code, 0);
    EXPECT_EQ(loop.out, "PASS contraction-expansion loop.g seed=1 lhs=4*q^1 rhs=4*q^1\n");

    const auto fig = run({"verify", "--identity", "all", "--seed", "5", data("figure1.g")});
    EXPECT_EQ(fig.code, 0) << fig.out << fig.err;
    EXPECT_EQ(fig.out.find("FAIL"), std::string::npos);
    EXPECT_GT(fig.out.size(), 0U);

    const auto dual = run({"verify", "--identity", "lemma3.3", data("u12.matroid"), "--v", "uniform:1"});
    EXPECT_EQ(dual.code, 0);
    EXPECT_EQ(dual.out.rfind("PASS dual-transform u12.matroid", 0), 0U) << dual.out;
}

TEST(Cli, WitnessAndKeyValue) {
    const auto r = run({"verify", "--identity", "eq1.2", "--v", "uniform:3", "--u", "uniform:1", "--witness",
                        "--format", "kv", data("loop.g")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("identity=contraction-expansion\n"), std::string::npos);
    EXPECT_NE(r.out.find("status=PASS\n"), std::string::npos);
    EXPECT_NE(r.out.find("witness.1.subset={0}\n"), std::string::npos);
    EXPECT_NE(r.out.find("witness.1.term=2*q^1\n"), std::string::npos);
    EXPECT_NE(r.out.find("seed=1\n"), std::string::npos);
}

TEST(Cli, CheckAxioms) {
    EXPECT_EQ(run({"check-axioms", data("u12.matroid")}).code, 0);
    const auto bad = run({"check-axioms", data("corrupted.matroid")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("FAIL axioms corrupted.matroid"), std::string::npos);
    EXPECT_NE(bad.err.find("corrupted.matroid"), std::string::npos);
}

TEST(Cli, Corpus) {
    const auto random = run({"corpus", "--random", "50", "--max-edges", "8", "--seed", "7"});
    EXPECT_EQ(random.code, 0) << random.err;
    EXPECT_NE(random.out.find("summary: instances=50 "), std::string::npos);
    EXPECT_NE(random.out.find(" fail=0 "), std::string::npos);

    const auto empty_dir = scratch_dir("empty");
    const auto empty = run({"corpus", empty_dir.string()});
    EXPECT_EQ(empty.code, 0);
    EXPECT_NE(empty.out.find("summary: instances=0 reports=0"), std::string::npos);
    EXPECT_EQ(run({"corpus"}).code, 0);

    const auto dir = scratch_dir("corrupt");
    std::filesystem::copy_file(data("corrupted.matroid"), dir / "corrupted.matroid");
    std::filesystem::copy_file(data("triangle.g"), dir / "triangle.g");
    const auto corrupt = run({"corpus", dir.string()});
    EXPECT_EQ(corrupt.code, 1);
    EXPECT_NE(corrupt.out.find("FAIL axioms corrupted.matroid"), std::string::npos) << corrupt.out;
    EXPECT_NE(corrupt.out.find("PASS [1] triangle.g"), std::string::npos) << corrupt.out;
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"corpus", "--random", "12", "--seed", "99", "--witness"};
    const auto first = run(args);
    EXPECT_EQ(first.out, run(args).out);
    auto parallel = args;
    parallel.insert(parallel.end(), {"--jobs", "4"});
    EXPECT_EQ(first.out, run(parallel).out);
    EXPECT_NE(first.out, run({"corpus", "--random", "12", "--seed", "100", "--witness"}).out);
}

TEST(Cli, EchoRoundTrip) {
    const auto dir = scratch_dir("echo");
    const auto once = run({"compute", "--echo", data("figure1.g")});
    ASSERT_EQ(once.code, 0);
    std::ofstream(dir / "again.g") << once.out;
    EXPECT_EQ(run({"compute", "--echo", (dir / "again.g").string()}).out, once.out);
    const auto table = run({"compute", "--rank-table", data("figure1.g")});
    std::ofstream(dir / "fig.matroid") << table.out;
    EXPECT_EQ(run({"compute", "--rank-table", (dir / "fig.matroid").string()}).out, table.out);
}
