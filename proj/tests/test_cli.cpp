#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// QTE_BIN and QTE_DATA are injected by the build

namespace {

namespace fs = std::filesystem;

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run(const std::string& args) {
    const std::string out_file = (fs::temp_directory_path() / "qte_cli_out.txt").string();
    const std::string cmd = std::string(QTE_BIN) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    int code = -1;
#ifdef WIFEXITED
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
#else
    code = status;
#endif
    return {code, buf.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string karate() { return std::string(QTE_DATA) + "/karate.edges"; }

std::string tmp(const std::string& name) {
    return (fs::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("recognize reports quasi-threshold status") {
    auto res = run("recognize " + karate());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("quasi-threshold: no") != std::string::npos);
    CHECK(res.output.find("certificate_kind") != std::string::npos);

    // a generated instance with no planted edits is quasi-threshold
    auto gen = run("generate --n 50 --k 0 --seed 3 --out " + tmp("qt_gen"));
    REQUIRE(gen.exit_code == 0);
    auto yes = run("recognize " + tmp("qt_gen") + ".edges --skeleton " + tmp("qt_gen.skel2"));
    CHECK(yes.exit_code == 0);
    CHECK(yes.output.find("quasi-threshold: yes") != std::string::npos);
    CHECK(fs::exists(tmp("qt_gen.skel2")));
}

TEST_CASE("bad flags exit with status 2, io failures with 1") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("qtm").exit_code == 2);
    CHECK(run("recognize /nonexistent/graph.edges").exit_code == 1);
}

TEST_CASE("identical flags and seed give byte-identical outputs") {
    auto a = run("qtm " + karate() + " --seed 7 --rounds 4 --skeleton " + tmp("a.skel") +
                 " --edits " + tmp("a.edits"));
    auto b = run("qtm " + karate() + " --seed 7 --rounds 4 --skeleton " + tmp("b.skel") +
                 " --edits " + tmp("b.edits"));
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(slurp(tmp("a.skel")) == slurp(tmp("b.skel")));
    CHECK(slurp(tmp("a.edits")) == slurp(tmp("b.edits")));
    CHECK_FALSE(slurp(tmp("a.skel")).empty());
}

TEST_CASE("verify accepts edit sets from qtm, ng and exact") {
    auto q = run("qtm " + karate() + " --seed 1 --edits " + tmp("qtm.edits"));
    REQUIRE(q.exit_code == 0);
    auto vq = run("verify " + karate() + " --edits " + tmp("qtm.edits"));
    CHECK(vq.exit_code == 0);
    CHECK(vq.output.find("verification: yes") != std::string::npos);

    auto n = run("ng " + karate() + " --edits " + tmp("ng.edits"));
    REQUIRE(n.exit_code == 0);
    auto vn = run("verify " + karate() + " --edits " + tmp("ng.edits"));
    CHECK(vn.output.find("verification: yes") != std::string::npos);

    // small instance for the exact solver: a single P4
    {
        std::ofstream p4(tmp("p4.edges"));
        p4 << "0 1\n1 2\n2 3\n";
    }
    auto e = run("exact " + tmp("p4.edges") + " --kmax 2 --edits " + tmp("exact.edits"));
    REQUIRE(e.exit_code == 0);
    CHECK(e.output.find("solved=yes") != std::string::npos);
    auto ve = run("verify " + tmp("p4.edges") + " --edits " + tmp("exact.edits"));
    CHECK(ve.output.find("verification: yes") != std::string::npos);
}

TEST_CASE("bench prints the summary statistics") {
    auto res = run("bench " + karate() + " --algo qtm --runs 3 --seed 7");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("edits_min=") != std::string::npos);
    CHECK(res.output.find("edits_mean=") != std::string::npos);
    CHECK(res.output.find("edits_std=") != std::string::npos);
    CHECK(res.output.find("time_mean_ms=") != std::string::npos);
}

TEST_CASE("json switch emits a machine-readable summary") {
    auto res = run("--json bound " + karate() + " --seed 0");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"bound\"") != std::string::npos);
}

TEST_CASE("generate writes graph, skeleton and edit list") {
    auto res = run("generate --n 120 --k 30 --seed 11 --out " + tmp("gen"));
    CHECK(res.exit_code == 0);
    CHECK(fs::exists(tmp("gen.edges")));
    CHECK(fs::exists(tmp("gen.skel")));
    CHECK(fs::exists(tmp("gen.edits")));
    // planted list has the 80/20 split
    std::ifstream edits(tmp("gen.edits"));
    std::string line;
    int ins = 0, dels = 0;
    while (std::getline(edits, line)) {
        if (line.rfind("+ ", 0) == 0) ++ins;
        if (line.rfind("- ", 0) == 0) ++dels;
    }
    CHECK(ins == 24);
    CHECK(dels == 6);
}
