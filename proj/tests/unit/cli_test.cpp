#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "cszi/grid.hpp"
#include "support/fields.hpp"

namespace fs = std::filesystem;
using namespace cszi;
using namespace cszi::testing;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string &args, const std::string &env = "") {
    const std::string cmd = env + std::string(CSZI_CLI_PATH) + " " + args + " 2>&1";
    FILE *p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[512];
    while (std::fgets(buf, sizeof buf, p)) out += buf;
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() / ("cszi_cli_" + std::to_string(::getpid()) + "_" +
                                          ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string path(const std::string &n) const { return (dir / n).string(); }

    fs::path dir;
};

}  // namespace

TEST_F(Cli, RoundTripAndVerify) {
    store_raw(sinusoid_field(Dims{20, 30, 40}, 20), path("a.f32"));
    auto c = run("compress " + path("a.f32") + " -d 20 30 40 --eb 1e-3 -o " + path("a.cszi"));
    ASSERT_EQ(c.status, 0) << c.out;
    EXPECT_NE(c.out.find("CR "), std::string::npos);
    EXPECT_NE(c.out.find("dim order"), std::string::npos);

    auto d = run("decompress " + path("a.cszi") + " -o " + path("b.f32"));
    ASSERT_EQ(d.status, 0) << d.out;
    auto v = run("verify " + path("a.f32") + " " + path("b.f32") + " -d 20 30 40 --eb 1e-3");
    EXPECT_EQ(v.status, 0) << v.out;
    EXPECT_NE(v.out.find("violations 0"), std::string::npos);

    auto d2 = run("decompress " + path("a.cszi") + " -o " + path("c.f32"));
    ASSERT_EQ(d2.status, 0);
    EXPECT_EQ(slurp(path("b.f32")), slurp(path("c.f32")));

    auto tight = run("verify " + path("a.f32") + " " + path("b.f32") + " -d 20 30 40 --eb 1e-7");
    EXPECT_EQ(tight.status, 5) << tight.out;

    auto i = run("info " + path("a.cszi"));
    EXPECT_EQ(i.status, 0);
    EXPECT_NE(i.out.find("interp"), std::string::npos);
}

TEST_F(Cli, SummaryReportsResolvedBoundAndAlpha) {
    // Range 6: values span [-3, 3].
    store_raw(make_field(Dims{32, 32}, [](double, double y, double x) { return 6.0 * (x + 32 * y) / 1023.0 - 3.0; }),
              path("r.f32"));
    auto c = run("compress " + path("r.f32") + " -d 32 32 --eb 1e-2 --mode rel -o " + path("r.cszi"));
    ASSERT_EQ(c.status, 0) << c.out;
    EXPECT_NE(c.out.find("eb_abs 0.06"), std::string::npos) << c.out;
    EXPECT_NE(c.out.find("alpha 1.75"), std::string::npos) << c.out;
}

TEST_F(Cli, ConstantGridTinyArchive) {
    store_raw(constant_field(Dims{64, 64, 64}, 3.0f), path("k.f32"));
    auto c = run("compress " + path("k.f32") + " -d 64 64 64 --eb 1e-3 -o " + path("k.cszi"));
    ASSERT_EQ(c.status, 0) << c.out;
    EXPECT_LT(fs::file_size(path("k.cszi")) * 200, fs::file_size(path("k.f32")));
    EXPECT_NE(c.out.find("zero codes 100.00%"), std::string::npos) << c.out;
}

TEST_F(Cli, Deterministic) {
    store_raw(noise_field(Dims{33, 34}, 3), path("n.f32"));
    ASSERT_EQ(run("compress " + path("n.f32") + " -d 33 34 --eb 1e-2 -o " + path("1.cszi")).status, 0);
    ASSERT_EQ(run("compress " + path("n.f32") + " -d 33 34 --eb 1e-2 -o " + path("2.cszi"), "CSZI_THREADS=1 ").status, 0);
    EXPECT_EQ(slurp(path("1.cszi")), slurp(path("2.cszi")));
}

TEST_F(Cli, ExitCodeClasses) {
    store_raw(sinusoid_field(Dims{10, 10}, 5), path("s.f32"));
    EXPECT_EQ(run("compress " + path("s.f32") + " --eb 1e-3").status, 2);
    EXPECT_EQ(run("compress " + path("s.f32") + " -d 10 10 --eb -1").status, 2);
    EXPECT_EQ(run("compress " + path("s.f32") + " -d 10 10 --eb 1e-3 --mode foo").status, 2);
    EXPECT_EQ(run("bogus").status, 2);
    EXPECT_EQ(run("compress " + path("missing.f32") + " -d 10 10 --eb 1e-3").status, 3);
    EXPECT_EQ(run("compress " + path("s.f32") + " -d 10 11 --eb 1e-3").status, 4);

    ASSERT_EQ(run("compress " + path("s.f32") + " -d 10 10 --eb 1e-3 -o " + path("s.cszi")).status, 0);
    std::string bytes = slurp(path("s.cszi"));
    {
        std::ofstream out(path("t.cszi"), std::ios::binary);
        out.write(bytes.data(), std::streamsize(bytes.size() - 5));
    }
    auto t = run("decompress " + path("t.cszi") + " -o " + path("t.f32"));
    EXPECT_EQ(t.status, 4);
    EXPECT_NE(t.out.find("LengthMismatch"), std::string::npos) << t.out;
    {
        std::ofstream out(path("m.cszi"), std::ios::binary);
        out << "NOPE" << bytes.substr(4);
    }
    EXPECT_EQ(run("decompress " + path("m.cszi")).status, 4);
}

TEST_F(Cli, SweepCartesianRows) {
    store_raw(sinusoid_field(Dims{24, 24, 24}, 24), path("w.f32"));
    auto s = run("sweep " + path("w.f32") + " -d 24 24 24 --eb 1e-2 1e-3 1e-4 --pass2 both -o " + path("w.csv"));
    ASSERT_EQ(s.status, 0) << s.out;
    std::istringstream in(slurp(path("w.csv")));
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line.rfind("dataset,predictor,", 0), 0u);
    int rows = 0, interp_rows = 0;
    bool lorenzo_seen = false, order_ok = true;
    while (std::getline(in, line)) {
        ++rows;
        const bool interp = line.find(",interp,") != std::string::npos;
        interp_rows += interp;
        if (!interp) lorenzo_seen = true;
        else if (lorenzo_seen) order_ok = false;
    }
    EXPECT_EQ(rows, 12);
    EXPECT_EQ(interp_rows, 6);
    EXPECT_TRUE(order_ok);

    auto j = run("sweep " + path("w.f32") + " -d 24 24 24 --eb 1e-2 --predictor interp --report jsonl");
    ASSERT_EQ(j.status, 0);
    EXPECT_EQ(j.out.front(), '{');
}
