#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "htv/cli/options.hpp"

using htv::cli::Json;

namespace {

const std::string kFixtures = HTV_FIXTURE_TEST_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "htv");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = htv::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST(Cli, PristineFixturePasses) {
    const Outcome r = invoke({"derive-key", "--fixture", kFixtures + "/../../data/key_polynomial.poly"});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, MutatedFixtureIsMismatch) {
    const Outcome r = invoke({"derive-key", "--fixture", kFixtures + "/mutated/key_polynomial.poly"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("first mismatch at a^8"), std::string::npos);
}

TEST(Cli, CorruptFixtureIsInputError) {
    const Outcome r = invoke({"derive-key", "--fixture", kFixtures + "/corrupt/key_polynomial.poly"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("at position 51"), std::string::npos) << r.err;
}

TEST(Cli, MissingFixtureIsInputError) {
    EXPECT_EQ(invoke({"derive-key", "--fixture", kFixtures + "/absent.poly"}).code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"bogus"}).code, 2);
    EXPECT_EQ(invoke({"oracle", "--frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"degenerate"}).code, 2);
    EXPECT_EQ(invoke({"degenerate", "--branch", "a6"}).code, 2);
    EXPECT_EQ(invoke({"roots", "--c", "1/0"}).code, 2);
    EXPECT_EQ(invoke({"roots", "--c", "symbolic"}).code, 2);
    const Outcome r = invoke({"bogus"});
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, 0); }

TEST(Cli, IdentitiesTextOneLinePerItem) {
    const Outcome r = invoke({"identities", "--extended"});
    EXPECT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    int passes = 0;
    while (std::getline(lines, line)) {
        passes += line.find("PASS") != std::string::npos;
    }
    EXPECT_EQ(passes, 10);
}

TEST(Cli, JsonSchema) {
    const Outcome r = invoke({"derive-key", "--json"});
    ASSERT_EQ(r.code, 0);
    const Json document = Json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [key, value] : document.items()) {
        keys.push_back(key);
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"command", "status", "timing_ms", "payload"}));
    EXPECT_EQ(document["status"], "pass");
    EXPECT_EQ(document["timing_ms"], 0);
    EXPECT_EQ(document["payload"]["lambda"], "1/1024");
    EXPECT_EQ(document["payload"]["coefficients"].size(), 15u);
}

TEST(Cli, JsonDeterministic) {
    const Outcome x = invoke({"oracle", "--json", "--samples", "20", "--seed", "7"});
    const Outcome y = invoke({"oracle", "--json", "--samples", "20", "--seed", "7"});
    EXPECT_EQ(x.code, 0);
    EXPECT_EQ(x.out, y.out);
    EXPECT_EQ(invoke({"identities", "--json"}).out, invoke({"identities", "--json"}).out);
}

TEST(Cli, FlatEliminantIsMonomial) {
    const Outcome r = invoke({"eliminate", "--c", "0", "--method", "sylvester", "--json"});
    ASSERT_EQ(r.code, 0);
    const Json payload = Json::parse(r.out)["payload"];
    ASSERT_EQ(payload["specializations"].size(), 1u);
    EXPECT_TRUE(payload["specializations"][0]["monomial"].get<bool>());
    EXPECT_EQ(payload["specializations"][0]["degree_alpha"], 40);
}

TEST(Cli, FlatRootsOnlyZero) {
    const Outcome r = invoke({"roots", "--c", "0", "--json"});
    ASSERT_EQ(r.code, 0);
    const Json payload = Json::parse(r.out)["payload"];
    ASSERT_EQ(payload["roots"].size(), 1u);
    EXPECT_EQ(payload["roots"][0]["upper"], "0");
    EXPECT_EQ(payload["positive_roots"], 0);
}

TEST(Cli, DegenerateBranches) {
    for (const char* branch : {"a4", "a5"}) {
        const Outcome r = invoke({"degenerate", "--branch", branch, "--json"});
        EXPECT_EQ(r.code, 0) << branch;
        EXPECT_EQ(Json::parse(r.out)["payload"]["restricted"]["degree_alpha"], 8) << branch;
    }
}

TEST(Cli, OutWritesAtomically) {
    const auto dir = std::filesystem::temp_directory_path() / "htv_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "report.json";
    const Outcome r = invoke({"identities", "--json", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(read_file(path), invoke({"identities", "--json"}).out);
    EXPECT_FALSE(std::filesystem::exists(dir / "report.json.tmp"));
    std::filesystem::remove_all(dir);
}

TEST(Cli, UnwritableOutIsInputError) {
    EXPECT_EQ(invoke({"identities", "--out", "/nonexistent-htv-dir/report.txt"}).code, 2);
}

TEST(Cli, EnvironmentFixtureDirectory) {
    ::setenv("HTV_FIXTURE_DIR", (kFixtures + "/mutated").c_str(), 1);
    const int mutated = invoke({"derive-key"}).code;
    ::unsetenv("HTV_FIXTURE_DIR");
    EXPECT_EQ(mutated, 1);
    EXPECT_EQ(invoke({"derive-key"}).code, 0);
}

TEST(Cli, VerifyAllPasses) {
    const Outcome r = invoke({"verify-all", "--json"});
    EXPECT_EQ(r.code, 0) << r.out;
    const Json document = Json::parse(r.out);
    std::vector<std::string> order;
    for (const auto& stage : document["payload"]["stages"]) {
        order.push_back(stage["command"]);
    }
    EXPECT_EQ(order, (std::vector<std::string>{"identities", "derive-key", "eliminate", "degenerate", "degenerate",
                                               "oracle"}));
}

TEST(Cli, VerifyAllMutatedFails) {
    EXPECT_EQ(invoke({"verify-all", "--fixture", kFixtures + "/mutated/key_polynomial.poly"}).code, 1);
}
