#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcq/cli.hpp"

using namespace qcq;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "qcq");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

std::vector<json> json_lines(const std::string& s) {
    std::vector<json> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) out.push_back(json::parse(line));
    }
    return out;
}

}  // namespace

TEST(Cli, UsageErrors) {
    auto r = run({"verify", "--q2", "4", "--n", "7", "--g1", "1^201", "--g2", "1^201", "--t", "1x3"});
    EXPECT_EQ(r.code, cli::kUsage);
    EXPECT_TRUE(has(r.err, "--t")) << r.err;
    EXPECT_TRUE(has(r.err, "position 1")) << r.err;
    r = run({"search", "--q2", "4", "--n", "7", "--t1", "1", "--t2", "3", "--trials", "0"});
    EXPECT_EQ(r.code, cli::kUsage);
    EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
    EXPECT_EQ(run({"gv", "--q", "2"}).code, cli::kUsage);
    EXPECT_EQ(run({"verify", "--q2", "6", "--n", "5", "--g1", "1", "--g2", "1", "--t", "1"}).code, cli::kUsage);
    // 1 + 2x does not divide x^7 - 1 over GF(4).
    EXPECT_EQ(run({"verify", "--q2", "4", "--n", "7", "--g1", "12", "--g2", "1^201", "--t", "1"}).code, cli::kUsage);
    EXPECT_EQ(run({"verify", "--fixture", "T9-1"}).code, cli::kUsage);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyFixture) {
    const auto r = run({"verify", "--fixture", "T2-10-7"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_TRUE(has(r.out, "[10,7,4]_9")) << r.out;
    EXPECT_TRUE(has(r.out, "[[10,4,4]]_3")) << r.out;
}

TEST(Cli, VerifyExampleThreeFlags) {
    const auto r = run({"verify", "--fixture", "E3", "--no-distance", "--no-bound", "--json"});
    EXPECT_EQ(r.code, cli::kOk);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["dual_containing"]["thm_main"], false);
    EXPECT_EQ(j["dual_containing"]["thm_extended_divisibility"], true);
    EXPECT_EQ(j["dual_containing"]["direct"], true);
}

TEST(Cli, VerifyFailsOnNonDualContaining) {
    const auto r = run({"verify", "--q2", "4", "--n", "7", "--g1", "1^2", "--g2", "1^2", "--t", "0", "--no-bound"});
    EXPECT_EQ(r.code, cli::kCheckFailed);
}

TEST(Cli, JsonRecordReverifies) {
    const auto a = run({"verify", "--fixture", "T4-8-5", "--json", "--threads", "1"});
    ASSERT_EQ(a.code, 0);
    const json j = json::parse(a.out);
    const auto b = run({"verify", "--q2", std::to_string(j["q2"].get<unsigned>()), "--n", std::to_string(j["n"].get<unsigned>()),
                        "--g1", j["g1"].get<std::string>(), "--g2", j["g2"].get<std::string>(), "--t",
                        j["t"].get<std::string>(), "--json", "--threads", "1"});
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Cosets) {
    auto r = run({"cosets", "--q2", "4", "--n", "41"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "C0: {0} symmetric"));
    EXPECT_TRUE(has(r.out, "C1: {1, 4, 16, 23, 10, 40, 37, 25, 18, 31} asymmetric partner=C2"));
    r = run({"cosets", "--q2", "4", "--n", "41", "--t1", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "10320102301")) << r.out;
    r = run({"cosets", "--q2", "4", "--n", "41", "--t1", "0"});
    EXPECT_EQ(r.code, cli::kCheckFailed);
}

TEST(Cli, Gv) {
    auto r = run({"gv", "--q", "2", "--n", "82", "--k", "42", "--d", "9"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "k_GV         36")) << r.out;
    r = run({"gv", "--q", "2", "--n", "82", "--k", "30", "--d", "9"});
    EXPECT_EQ(r.code, cli::kCheckFailed);
}

TEST(Cli, Bound) {
    const auto r = run({"bound", "--fixture", "T2-10-7", "--json"});
    EXPECT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["cases"].size(), 7u);
}

TEST(Cli, SearchIsDeterministic) {
    const std::vector<std::string> args{"search", "--q2", "4", "--n", "7", "--t1", "1", "--t2", "3", "--trials", "200", "--seed", "7"};
    const auto a = run(args);
    auto many = args;
    many.insert(many.end(), {"--threads", "3"});
    const auto b = run(many);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto lines = json_lines(a.out);
    ASSERT_FALSE(lines.empty());
    const json& summary = lines.back()["summary"];
    EXPECT_EQ(summary["trials"], 200);
    EXPECT_EQ(summary["survivors"].get<std::size_t>(), lines.size() - 1);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        EXPECT_EQ(lines[i]["dual_containing"]["verdict"], true);
        if (i) {
            EXPECT_LT(lines[i - 1]["trial"].get<unsigned>(), lines[i]["trial"].get<unsigned>());
        }
    }
}

TEST(Cli, SearchWritesFileAndInjectsTrialZero) {
    const auto path = (std::filesystem::temp_directory_path() / "qcq_search.jsonl").string();
    const auto r = run({"search", "--q2", "9", "--n", "5", "--g1", "121", "--g2", "51", "--trials", "3", "--seed", "1", "--t0", "41781", "--out", path});
    EXPECT_EQ(r.code, 0);
    std::ifstream in(path);
    std::stringstream body;
    body << in.rdbuf();
    const auto lines = json_lines(body.str());
    ASSERT_GE(lines.size(), 2u);
    EXPECT_EQ(lines[0]["trial"], 0);
    EXPECT_EQ(lines[0]["t"], "41781");
    EXPECT_TRUE(has(r.out, "summary"));
    EXPECT_EQ(run({"search", "--q2", "9", "--n", "5", "--g1", "121", "--g2", "51", "--trials", "1", "--out", "/nonexistent/dir/x"}).code, cli::kUsage);
}

TEST(Cli, TablesSubset) {
    const auto r = run({"tables", "--id", "T2-10-7,T1-3,T4-32-26"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "rows 3")) << r.out;
    EXPECT_TRUE(has(r.out, "ERRATUM")) << r.out;
    EXPECT_TRUE(has(r.out, "FAIL 0")) << r.out;
}

TEST(Cli, SearchReplaysExampleOne) {
    const std::string t = "10203^{5}2130^{2}2^{2}3^{2}102^{2}3010^{2}1313^{2}2031^{2}3032";
    const auto r = run({"search", "--q2", "4", "--n", "41", "--t1", "1", "--t2", "3", "--trials", "1", "--t0", t,
                        "--criterion", "main", "--budget-secs", "1", "--no-bound", "--threads", "1"});
    EXPECT_EQ(r.code, 0);
    const auto lines = json_lines(r.out);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[0]["dims"]["k"], 62);
    EXPECT_EQ(lines[0]["t"], t);
}
