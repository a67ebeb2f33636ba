#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rbell/record.hpp"

namespace {

struct RunResult {
    std::string out;
    int exit_code = -1;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string("\"") + RBELL_CLI_PATH + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, TableMatchesGoldenFile) {
    const RunResult r = run("table --nmax 6 --rmax 6 --format json");
    EXPECT_EQ(r.exit_code, 0);
    const std::string golden = read_file(std::string(RBELL_GOLDEN_DIR) + "/table_6_6.json");
    ASSERT_FALSE(golden.empty());
    EXPECT_EQ(r.out, golden);
}

TEST(Cli, BellExamples) {
    EXPECT_EQ(run("bell -n 2 -r 2").out, "{\"op\":\"bell\",\"params\":{\"n\":2,\"r\":2},\"value\":\"10\"}\n");
    EXPECT_EQ(run("bell -n 2 -r 2 --poly").out,
              "{\"op\":\"bell\",\"params\":{\"n\":2,\"r\":2},\"value\":[\"4\",\"5\",\"1\"]}\n");
    EXPECT_EQ(run("bell -n 2 -r 2 --x 1/2 --format plain").out, "27/4\n");
}

TEST(Cli, BigIntegersStayExact) {
    const RunResult r = run("bell -n 40 -r 0");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("\"157450588391204931289324344702531067\""), std::string::npos);
}

TEST(Cli, StirlingAndOracle) {
    EXPECT_EQ(run("stirling2 -n 4 -k 3 -r 2 --format plain").out, "5\n");
    EXPECT_EQ(run("stirling1 -n 4 -k 2 -r 0 --format plain").out, "11\n");
    const RunResult o = run("oracle -n 2 -r 2");
    EXPECT_EQ(o.out,
              "{\"op\":\"oracle\",\"params\":{\"n\":2,\"r\":2},\"value\":{\"by_blocks\":{\"2\":\"4\",\"3\":\"5\",\"4\":\"1\"},"
              "\"total\":\"10\"}}\n");
}

TEST(Cli, ApproximationsCarryErrorBounds) {
    const RunResult d = run("dobinski -n 2 -r 2 --tol 1e-9");
    EXPECT_EQ(d.exit_code, 0);
    const auto rec = rbell::OutputRecord::parse(d.out);
    EXPECT_EQ(rec.op, "dobinski");
    ASSERT_TRUE(rec.value.contains("err"));
    EXPECT_NEAR(rec.value["value"].get<double>(), 10.0, rec.value["err"].get<double>() + 1e-15);
    const RunResult q = run("integral -n 3 -r 1 --tol 1e-8");
    EXPECT_EQ(q.exit_code, 0);
    EXPECT_TRUE(rbell::OutputRecord::parse(q.out).value.contains("err"));
}

TEST(Cli, UsageAndDomainErrorsExitTwo) {
    EXPECT_EQ(run("bell -n 2 -r 2 --bogus").exit_code, 2);
    EXPECT_EQ(run("frobnicate").exit_code, 2);
    EXPECT_EQ(run("bell -n 2 -r 2 --x 1/0").exit_code, 2);
    const RunResult guard = run("oracle -n 10 -r 4", true);
    EXPECT_EQ(guard.exit_code, 2);
    EXPECT_NE(guard.out.find("guard"), std::string::npos);
    EXPECT_EQ(run("verify --suite nope").exit_code, 2);
}

TEST(Cli, VerifyAllPassesAndIsDeterministic) {
    const RunResult a = run("verify --suite all --nmax 10 --rmax 6");
    EXPECT_EQ(a.exit_code, 0) << a.out;
    EXPECT_NE(a.out.find("KNOWN-ERRATUM"), std::string::npos);
    EXPECT_EQ(a.out.find("\nFAIL"), std::string::npos);
    const RunResult b = run("verify --suite all --nmax 10 --rmax 6");
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, JsonRoundTrips) {
    for (const char* args : {"bell -n 5 -r 3 --poly", "hankel -r 2 --nmax 5", "roots -n 4 -r 0", "maxindex -n 6 -r 0",
                             "verify --suite cigler --format json"}) {
        const RunResult r = run(args);
        ASSERT_EQ(r.exit_code, 0) << args;
        const auto rec = rbell::OutputRecord::parse(r.out);
        EXPECT_EQ(rec.dump() + "\n", r.out) << args;
    }
}
