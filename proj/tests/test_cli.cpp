#include "Fixtures.hpp"
#include "zxec/Cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
protected:
    fs::path dir;

    void SetUp() override {
        dir = fs::temp_directory_path() / ("zxec_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text) {
        const auto path = dir / name;
        std::ofstream(path) << text;
        return path.string();
    }

    int run(std::vector<std::string> args, std::string* outText = nullptr,
            std::string* errText = nullptr) {
        std::ostringstream out, err;
        const int         code = zx::runCli(args, out, err);
        if (outText != nullptr) {
            *outText = out.str();
        }
        if (errText != nullptr) {
            *errText = err.str();
        }
        return code;
    }
};

} // namespace

TEST_F(CliTest, selfCheckExitsZero) {
    const auto a = write("a.qasm", zxtest::ghzQasm);
    std::string out;
    EXPECT_EQ(run({"check", a, a}, &out), 0);
    EXPECT_NE(out.find("equivalent"), std::string::npos);
}

TEST_F(CliTest, ghzAgainstMappedFormWithExpectedPermutation) {
    const auto a = write("ghz.qasm", zxtest::ghzQasm);
    const auto b = write("ghz_mapped.qasm", zxtest::ghzMappedQasm);
    std::string out;
    EXPECT_EQ(run({"check", a, b, "--expect-perm", "0,2,1"}, &out), 0);
    EXPECT_NE(out.find("equivalent_up_to_permutation"), std::string::npos);
}

TEST_F(CliTest, provenNonEquivalenceExitsTwo) {
    const auto a = write("a.qasm", zxtest::ghzQasm);
    const auto b = write("b.qasm", "OPENQASM 2.0;\nqreg q[3];\nh q[0];\ncx q[0],q[1];\n");
    std::string out;
    EXPECT_EQ(run({"check", a, b}, &out), 2);
    EXPECT_NE(out.find("non_equivalent"), std::string::npos);
    EXPECT_NE(out.find("witness"), std::string::npos);
}

TEST_F(CliTest, inconclusiveAncillaCheckExitsThree) {
    const auto a = write("mcx.qasm", zxtest::mcxNoAncillaQasm);
    const auto b = write("mcx_anc.qasm", zxtest::mcxAncillaQasm);
    std::string out;
    EXPECT_EQ(run({"check", a, b, "--ancilla", "a0:0", "--oracle-max", "0"}, &out), 3);
    EXPECT_NE(out.find("no_information"), std::string::npos);
    // with the oracle enabled the same pair proves equivalent
    EXPECT_EQ(run({"check", a, b, "--ancilla", "a0:0"}, &out), 0);
}

TEST_F(CliTest, usageErrorsExitOne) {
    std::string err;
    EXPECT_EQ(run({"check", "missing_a.qasm", "missing_b.qasm"}, nullptr, &err), 1);
    EXPECT_NE(err.find("error"), std::string::npos);
    EXPECT_EQ(run({"frobnicate"}, nullptr, &err), 1);
}

TEST_F(CliTest, malformedQasmReportsLocation) {
    const auto a = write("bad.qasm", "OPENQASM 2.0;\nqreg q[1];\nh q[0\n");
    std::string err;
    EXPECT_EQ(run({"check", a, a}, nullptr, &err), 1);
    EXPECT_NE(err.find("line"), std::string::npos);
}

TEST_F(CliTest, jsonVerdictHasSchema) {
    const auto a = write("a.qasm", zxtest::ghzQasm);
    std::string out;
    EXPECT_EQ(run({"check", a, a, "--json"}, &out), 0);
    EXPECT_NE(out.find("\"schema\": 1"), std::string::npos);
    EXPECT_NE(out.find("\"time_ms\""), std::string::npos);
}

TEST_F(CliTest, reduceDumpsDiagramJson) {
    const auto a    = write("a.qasm", zxtest::ghzQasm);
    const auto json = (dir / "out.json").string();
    std::string out;
    EXPECT_EQ(run({"reduce", a, "--dump-diagram", json}, &out), 0);
    EXPECT_TRUE(fs::exists(json));
    std::ifstream     f(json);
    std::stringstream buf;
    buf << f.rdbuf();
    EXPECT_NE(buf.str().find("\"vertices\""), std::string::npos);
}

TEST_F(CliTest, dumpPrintsPreReductionDiagram) {
    const auto a = write("a.qasm", zxtest::ghzQasm);
    std::string out;
    EXPECT_EQ(run({"dump", a}, &out), 0);
    EXPECT_NE(out.find("\"edges\""), std::string::npos);
    EXPECT_NE(out.find("\"inputs\""), std::string::npos);
}

TEST_F(CliTest, benchWritesCsv) {
    const auto csv = (dir / "suite.csv").string();
    std::string out;
    EXPECT_EQ(run({"bench", "--family", "clifford", "--qubits", "3", "--gates", "20", "--seed",
                   "5", "--count", "3", "--csv", csv}),
              0);
    std::ifstream     f(csv);
    std::stringstream buf;
    buf << f.rdbuf();
    EXPECT_NE(buf.str().find("family,qubits,gates"), std::string::npos);
    EXPECT_NE(buf.str().find("clifford,3,20,5"), std::string::npos);
}

TEST_F(CliTest, benchEmitsQasmPairs) {
    const auto emit = (dir / "emitted").string();
    fs::create_directories(emit);
    std::string out;
    EXPECT_EQ(run({"bench", "--qubits", "2", "--gates", "10", "--count", "1", "--emit-dir", emit},
                  &out),
              0);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(emit)) {
        files += entry.path().extension() == ".qasm" ? 1 : 0;
    }
    EXPECT_EQ(files, 2U);
}

TEST_F(CliTest, noSwapReconstructFlagIsHonored) {
    const auto a = write("ghz.qasm", zxtest::ghzQasm);
    const auto b = write("ghz_mapped.qasm", zxtest::ghzMappedQasm);
    std::string out;
    // still correct, just slower: the triple stays three CX gadgets
    EXPECT_EQ(run({"check", a, b, "--no-swap-reconstruct"}, &out), 0);
}

TEST_F(CliTest, helpIsAvailable) {
    std::string out;
    EXPECT_EQ(run({"--help"}, &out), 0);
    EXPECT_NE(out.find("check"), std::string::npos);
    EXPECT_NE(out.find("bench"), std::string::npos);
}
