#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fdalg/cli.hpp"

namespace fs = std::filesystem;
using fdalg::json::Json;

namespace {

struct CliRun {
    int code;
    Json out;
    std::string raw;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "fdalg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = fdalg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    Json j;
    try {
        j = Json::parse(out.str());
    } catch (...) {
    }
    return {code, j, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        dir_ = fs::temp_directory_path() / ("fdalg_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
        for (const char* name : {"t3", "m2", "n2", "c3", "u2"})
            ASSERT_EQ(run({"zoo", "--name", name, "--emit-dir", dir_.string()}).code, 0);
    }
    static void TearDownTestSuite() { fs::remove_all(dir_); }
    static std::string path(const std::string& file) { return (dir_ / file).string(); }

    static fs::path dir_;
};

fs::path Cli::dir_;

}  // namespace

TEST_F(Cli, AnalyzeTruncatedPolynomial) {
    CliRun r = run({"analyze", path("t3.json")});
    ASSERT_EQ(r.code, 0) << r.raw;
    EXPECT_EQ(r.out["dim"], 3);
    EXPECT_EQ(r.out["radical_dim"], 2);
    EXPECT_EQ(r.out["slf_dim"], 3);
    EXPECT_EQ(r.out["symmetric"], true);
}

TEST_F(Cli, AnalyzeMatrixAlgebra) {
    CliRun r = run({"analyze", "--algebra", path("m2.json")});
    ASSERT_EQ(r.code, 0) << r.raw;
    EXPECT_EQ(r.out["blocks"], 1);
    EXPECT_EQ(r.out["basic_dim"], 1);
    EXPECT_EQ(r.out["slf_dim"], 1);
}

TEST_F(Cli, AnalyzeRejectsCorruptedTensor) {
    Json j = fdalg::json::read_file(path("t3.json"));
    j["mult"][0][0] = Json::array({"2", "0", "0"});
    fdalg::json::write_file(path("bad.json"), j);
    CliRun r = run({"analyze", path("bad.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.out["error"], "AssociativityViolation");
    EXPECT_EQ(r.out["violation"]["kind"], "AssociativityViolation");
}

TEST_F(Cli, AnalyzeRejectsMalformedJson) {
    std::ofstream(path("garbage.json")) << "{ not json";
    EXPECT_EQ(run({"analyze", path("garbage.json")}).code, 2);
}

TEST_F(Cli, AnalyzeNonSplit) {
    CliRun r = run({"analyze", path("c3.json")});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(r.out["minimal_polynomial"], "x^3 - 1");
}

TEST_F(Cli, PseudotraceWithEndomorphism) {
    // Left multiplication by x² on the regular module.
    fdalg::json::write_file(path("lx2.json"), Json{{"matrix", {{"0", "0", "1"}, {"0", "0", "0"}, {"0", "0", "0"}}}});
    CliRun r = run({"pseudotrace", "--algebra", path("t3.json"), "--phi", path("t3.phi.json"), "--module",
                 path("t3.regular.module.json"), "--endo", path("lx2.json")});
    ASSERT_EQ(r.code, 0) << r.raw;
    EXPECT_EQ(r.out["pseudotrace"], "1");
    EXPECT_EQ(r.out["phi_W"], "1");
    EXPECT_EQ(r.out["equal"], true);
    EXPECT_EQ(r.out["interlocked"], true);
    EXPECT_EQ(r.out["multiplicities"], Json::array({1}));
    EXPECT_TRUE(r.out.contains("omega_report"));
}

TEST_F(Cli, PseudotraceRejectsNonHomomorphism) {
    fdalg::json::write_file(path("notendo.json"), Json{{"matrix", {{"0", "1", "0"}, {"0", "0", "0"}, {"1", "0", "0"}}}});
    CliRun r = run({"pseudotrace", "--algebra", path("t3.json"), "--phi", path("t3.phi.json"), "--module",
                 path("t3.regular.module.json"), "--endo", path("notendo.json")});
    EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, PseudotraceOnSimpleIsNotProjective) {
    CliRun r = run({"pseudotrace", "--algebra", path("t3.json"), "--phi", path("t3.phi.json"), "--module",
                 path("t3.simple1.module.json")});
    EXPECT_EQ(r.code, 4);
    EXPECT_EQ(r.out["error"], "NotProjective");
    EXPECT_EQ(r.out["residual_dim"], 1);
}

TEST_F(Cli, PseudotraceHypothesisFailure) {
    fdalg::json::write_file(path("n2bad.phi.json"), Json{{"values", {"1", "0", "0", "0", "1", "1"}}});
    CliRun r = run({"pseudotrace", "--algebra", path("n2.json"), "--phi", path("n2bad.phi.json"), "--module",
                 path("n2.regular.module.json")});
    EXPECT_EQ(r.code, 5);
    EXPECT_EQ(r.out["error"], "PhiNonzeroOnIdempotent");
}

TEST_F(Cli, SlfWithDeformation) {
    CliRun r = run({"slf", "--algebra", path("t3.json"), "--phi", path("t3.phi.json"), "--nu", "0,1,0", "--r", "0"});
    ASSERT_EQ(r.code, 0) << r.raw;
    EXPECT_EQ(r.out["slf_dim"], 3);
    EXPECT_EQ(r.out["rad_phi_dim"], 0);
    EXPECT_EQ(r.out["nu_deformation"]["kernel_dim"], 1);
    EXPECT_EQ(r.out["nu_deformation"]["phi_prime"]["values"], Json::array({"0", "1"}));
}

TEST_F(Cli, SlfRejectsNonNilpotentShift) {
    CliRun r = run({"slf", "--algebra", path("t3.json"), "--phi", path("t3.phi.json"), "--nu", "0,1,0", "--r", "1"});
    EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, VerifyInterlockedOnUserAlgebra) {
    CliRun r = run({"verify", "--suite", "interlocked", "--algebra", path("t3.json")});
    ASSERT_EQ(r.code, 0) << r.raw;
    const Json& suite = r.out["suites"][0];
    EXPECT_EQ(suite["failed"], 0);
    EXPECT_EQ(suite["checks"][0]["witness"]["module_instances"], 4);
}

TEST_F(Cli, VerifyAllOnZoo) {
    CliRun r = run({"verify", "--suite", "all"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out["all_passed"], true);
    EXPECT_EQ(r.out["suites"].size(), 10u);
}

TEST_F(Cli, VerifyUnknownSuite) { EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 2); }

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"analyze"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, ZooListAndEmit) {
    CliRun list = run({"zoo", "--list"});
    EXPECT_EQ(list.out["entries"].size(), 7u);
    CliRun one = run({"zoo", "--name", "n2", "--emit", path("n2.all.json")});
    ASSERT_EQ(one.code, 0);
    Json doc = fdalg::json::read_file(path("n2.all.json"));
    EXPECT_EQ(doc["notes"]["composition"], "left-to-right path composition");
    EXPECT_TRUE(doc["modules"].contains("regular"));
    CliRun pt = run({"pseudotrace", "--algebra", path("n2.all.json"), "--phi", path("n2.all.json"), "--module",
                  path("n2.all.json"), "--module-name", "e1A+A"});
    EXPECT_EQ(pt.code, 0) << pt.raw;
    EXPECT_EQ(pt.out["multiplicities"], Json::array({2, 1}));
}

TEST_F(Cli, OutputIsDeterministicAndMetaGoesToStderr) {
    CliRun a = run({"analyze", path("n2.json")});
    CliRun b = run({"--meta", "analyze", path("n2.json")});
    EXPECT_EQ(a.raw, b.raw);
    EXPECT_TRUE(a.err.empty());
    EXPECT_NE(b.err.find("elapsed_ms"), std::string::npos);
}
