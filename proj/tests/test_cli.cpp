// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run sh(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + std::string(ALPHAPERM_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("alphaperm-cli-" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        std::ofstream(dir_ / name) << text;
        return (dir_ / name).string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, ComputeExamples) {
    auto ones1 = write("ones1.mat", R"({"n":1,"field":"rational","entries":[["1"]]})");
    auto dbl = write("d1.mat", R"({"n":2,"field":"rational","entries":[["1","1"],["1","1"]]})");
    auto m22 = write("m22.mat", R"({"n":2,"field":"rational","entries":[["1","2"],["3","4"]]})");
    EXPECT_EQ(sh("compute per-alpha --alpha 1/2 --algo dp " + ones1).out, "1/2\n");
    EXPECT_EQ(sh("compute per-alpha --alpha 1/2 --algo naive " + ones1).out, "1/2\n");
    EXPECT_EQ(sh("compute haf " + dbl).out, "1\n");
    EXPECT_EQ(sh("compute per-alpha --alpha -1 " + m22).out, "-2\n");
    EXPECT_EQ(sh("compute det " + m22).out, "-2\n");
    EXPECT_EQ(sh("compute per " + m22).out, "10\n");
    EXPECT_EQ(sh("compute det-alpha --alpha 1 " + m22).out, "10\n");
    EXPECT_EQ(sh("compute per-alpha --alpha 1+1 i " + ones1).code, 2);
    EXPECT_EQ(sh("compute per-alpha --alpha \"1+1 i\" " + ones1).out, "1+1 i\n");
    EXPECT_EQ(sh("compute per --mode float " + m22).out, "10.0\n");
    EXPECT_EQ(sh("compute per < " + m22 + " -").out, "10\n");
}

TEST_F(Cli, ExitCodes) {
    auto bad = write("bad.mat", "{\"n\": 2, \"field\": \"rational\"");
    auto flt = write("f.mat", R"({"n":1,"field":"float","entries":[["0.5"]]})");
    auto big = write("big.mat", [] {
        std::string s = R"({"n":11,"field":"rational","entries":[)";
        for (int i = 0; i < 11; ++i) {
            s += i ? ",[" : "[";
            for (int j = 0; j < 11; ++j) s += std::string(j ? "," : "") + "\"1\"";
            s += "]";
        }
        return s + "]}";
    }());
    EXPECT_EQ(sh("compute per " + bad).code, 3);
    EXPECT_EQ(sh("compute per " + path("missing.mat")).code, 3);
    EXPECT_EQ(sh("compute per " + flt).code, 2);
    EXPECT_EQ(sh("compute per --mode float " + flt).code, 0);
    EXPECT_EQ(sh("compute nonsense " + flt).code, 2);
    EXPECT_EQ(sh("").code, 2);
    EXPECT_EQ(sh("compute per-alpha --algo naive " + big).code, 4);
    auto m22 = write("m22.mat", R"({"n":2,"field":"rational","entries":[["1","2"],["3","4"]]})");
    EXPECT_EQ(sh("--caps naive=1 compute per-alpha --algo naive " + m22).code, 4);
    EXPECT_EQ(sh("--caps naive=2 compute per-alpha --algo naive " + m22).code, 0);
    EXPECT_EQ(sh("compute per-alpha " + m22, "ALPHAPERM_CAPS=dp=1").code, 4);
    EXPECT_EQ(sh("--caps bogus=1 compute per " + big).code, 2);
    EXPECT_EQ(sh("check --suite identities --matrix " + bad).code, 3);
}

TEST_F(Cli, GenIsReproducible) {
    auto a = path("a.json"), b = path("b.json");
    auto r = sh("gen --n 5 --kind real --seed 7 --out " + a);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, a + "\n");
    sh("gen --n 5 --kind real --seed 7 --out " + b);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_FALSE(slurp(a).empty());
    EXPECT_EQ(sh("compute per " + a).code, 0);
    auto h = sh("gen --n 3 --kind hermitian --seed 1 --out -");
    EXPECT_NE(h.out.find("complex-rational"), std::string::npos);
}

TEST_F(Cli, CheckSuites) {
    auto r = sh("check --suite identities --n-max 5 --trials 50 --seed 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("result\tPASS"), std::string::npos);
    auto q = sh("check --suite inequalities --n-max 5 --trials 50 --alpha-set theorem2");
    EXPECT_EQ(q.code, 0);
    EXPECT_EQ(sh("check --suite inequalities --n-max 5 --trials 50 --alpha-set theorem2 --jobs 3").out, q.out);
    auto g = path("g.json");
    sh("gen --n 4 --kind hermitian --seed 2 --out " + g);
    EXPECT_EQ(sh("check --suite inequalities --trials 0 --matrix " + g).code, 0);
    EXPECT_EQ(sh("check --suite all --trials 5 --mode float").code, 0);
}

TEST_F(Cli, HuntWritesFindings) {
    auto f1 = path("f1.jsonl"), f2 = path("f2.jsonl");
    auto r = sh("hunt --target marcus --n 5 --alpha-range 1:2 --trials 500 --seed 3 --keep-smallest 2 --out " + f1);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verified_violations\t0"), std::string::npos);
    EXPECT_TRUE(fs::exists(f1 + ".argmin.json"));
    sh("hunt --target marcus --n 5 --alpha-range 1:2 --trials 500 --seed 3 --keep-smallest 2 --jobs 4 --out " + f2);
    EXPECT_EQ(slurp(f1), slurp(f2));
    EXPECT_NE(slurp(f1).find("matrix_sha256"), std::string::npos);

    auto np = path("np.jsonl");
    auto n = sh("hunt --target neg-positivity --n 3 --alpha 3/2 --trials 200 --out " + np);
    EXPECT_EQ(n.code, 0);
    EXPECT_NE(slurp(np).find("\"regime\":\"ungated\""), std::string::npos);
    EXPECT_EQ(sh("hunt --target nope --trials 1 --out " + np).code, 2);
    EXPECT_EQ(sh("hunt --alpha-range 1-2 --trials 1 --out " + np).code, 2);
}

TEST_F(Cli, Bench) {
    auto r = sh("bench --kernel dp,naive --n-min 2 --n-max 4 --reps 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("kernel\tn\treps\tseconds\n", 0), 0u);
    EXPECT_EQ(sh("bench --kernel warp").code, 2);
}
