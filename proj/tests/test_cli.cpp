#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "motrec/run.hpp"

using namespace motrec;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "motrec");
    std::istringstream in(input);
    std::ostringstream out, err;
    const int status = run_cli(args, in, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST(Cli, GenerateGoldenPrefix) {
    const auto r = cli({"generate", "--source", "fibonacci", "--length", "35"});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_EQ(r.out, "abaababaabaababaababaabaababaabaaba\n");
}

TEST(Cli, GenerateEmptyPrefixPrintsNothing) {
    const auto r = cli({"generate", "--source", "fibonacci", "--length", "0"});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_EQ(r.out, "");
}

TEST(Cli, TransformFromSourceAndStdin) {
    auto r = cli({"transform", "--source", "fibonacci", "--length", "30", "--k", "2", "--power", "3", "--letter", "c"});
    EXPECT_EQ(r.out, "cccbacccbacccaacccaacccabcccab\n");
    r = cli({"transform", "--k", "1", "--power", "1", "--letter", "c"}, "abab\n");
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_EQ(r.out, "cbcb\n");
}

TEST(Cli, ComplexityCsvAndJson) {
    auto r = cli({"complexity", "--source", "fibonacci", "--n-max", "3"});
    EXPECT_EQ(r.out, "n,P,S,Pf\n1,2,1,2\n2,3,1,3\n3,4,1,4\n");
    r = cli({"complexity", "--source", "champernowne", "--n-max", "4", "--format", "json"});
    ASSERT_EQ(r.status, kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["stable"].get<bool>());
    EXPECT_EQ(doc["rows"].size(), 4u);
    EXPECT_EQ(doc["rows"][3]["P"].get<int>(), 16);
}

TEST(Cli, VerifySturmianExitsZero) {
    const auto r = cli({"verify", "--theorem", "sturmian", "--source", "fibonacci", "--k", "2", "--power", "3", "--letter",
                        "c", "--n-max", "60"});
    EXPECT_EQ(r.status, kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t rows = 0;
    std::getline(lines, line);
    EXPECT_EQ(line, "n,branch,closed,empirical,match");
    while (std::getline(lines, line)) {
        ++rows;
        EXPECT_TRUE(line.ends_with(",true")) << line;
    }
    EXPECT_EQ(rows, 60u);
}

TEST(Cli, VerifyMismatchExitsTwo) {
    const auto r = cli({"verify", "--theorem", "general", "--source-model", "full", "--source", "champernowne", "--k", "2",
                        "--power", "2", "--letter", "c", "--n-max", "6"});
    EXPECT_EQ(r.status, kExitMismatch);
    EXPECT_NE(r.out.find(",false"), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(cli({}).status, kExitUsage);
    EXPECT_EQ(cli({"generate", "--source", "nonsense", "--length", "3"}).status, kExitUsage);
    EXPECT_EQ(cli({"generate", "--source", "fibonacci"}).status, kExitUsage);
    // internal flag contradicts an external letter
    EXPECT_EQ(cli({"generate", "--source", "fibonacci", "--length", "3", "--k", "1", "--power", "1", "--letter", "c",
                   "--internal"})
                  .status,
              kExitUsage);
    EXPECT_EQ(cli({"verify", "--theorem", "sturmian", "--source", "fibonacci", "--k", "1", "--power", "2", "--letter", "a",
                   "--internal", "--n-max", "5"})
                  .status,
              kExitUsage);
    EXPECT_EQ(cli({"complexity", "--source", "fibonacci", "--n-max", "100", "--prefix-cap", "50"}).status, kExitUsage);
    EXPECT_EQ(cli({"generate", "--source", "fibonacci", "--length", "3", "--k", "1"}).status, kExitUsage);
}

TEST(Cli, HelpExitsZero) {
    const auto r = cli({"--help"});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, CheckModuloRecurrence) {
    EXPECT_EQ(cli({"check-mr", "--source", "fibonacci", "--n-max", "4", "--mod-max", "5"}).status, kExitOk);
    const auto r = cli({"check-mr", "--source", "fibonacci", "--k", "2", "--power", "3", "--letter", "c", "--n-max", "4",
                        "--mod-max", "5"});
    EXPECT_EQ(r.status, kExitMismatch);
    EXPECT_NE(r.out.find(",fail,"), std::string::npos);
}

TEST(Cli, InternalTheoremReportsThreshold) {
    const auto r = cli({"verify", "--theorem", "internal", "--source", "fibonacci", "--k", "1", "--power", "2", "--letter",
                        "a", "--internal", "--n-max", "30", "--format", "json"});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_EQ(nlohmann::json::parse(r.out)["n_k"].get<int>(), 11);
}

TEST(Cli, SelftestAgrees) {
    const auto r = cli({"selftest", "--trials", "5", "--length", "500", "--seed", "3"});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_EQ(r.out.find("false"), std::string::npos);
}

TEST(Cli, OutputIsDeterministicAndWritesFiles) {
    const std::vector<std::string> args{"verify", "--theorem", "sturmian", "--source", "sturmian:2,1", "--k", "3",
                                        "--power", "1", "--letter", "c", "--n-max", "25", "--format", "json"};
    EXPECT_EQ(cli(args).out, cli(args).out);

    const auto path = std::filesystem::temp_directory_path() / "motrec_cli_test.csv";
    const auto r = cli({"generate", "--source", "champernowne", "--length", "10", "--output", path.string()});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_EQ(r.out, "");
    std::ifstream file(path);
    std::string content((std::istreambuf_iterator<char>(file)), {});
    EXPECT_EQ(content, "0110111001\n");
    std::filesystem::remove(path);
}
