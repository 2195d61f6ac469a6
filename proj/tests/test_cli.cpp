#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// stdout only; stderr is discarded.
Run mcut(const std::string& args) {
    std::string cmd = std::string(MCUT_BIN) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(MCUT_TEST_DATA) + "/" + name; }

fs::path scratch() {
    fs::path p = fs::temp_directory_path() / "mcut_cli_test";
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("cli solve") {
    auto right = mcut("solve " + data("fig5_right.graph") + " --problem pmc");
    CHECK(right.code == 0);
    CHECK(right.out.rfind("YES\nX: 0 1 4\nY: 2 3 5\n", 0) == 0);

    auto left = mcut("solve " + data("fig5_left.graph") + " --problem pmc --algo fourchordal");
    CHECK(left.code == 0);
    CHECK(left.out == "NO\n");
    CHECK(mcut("solve " + data("fig5_left.graph") + " --problem pmc --root 2 --reverse").out == "NO\n");

    CHECK(mcut("solve " + data("fig1_ab.graph") + " --problem dpm").out == "NO\n");
    auto cd = mcut("solve " + data("fig1_cd.graph") + " --problem dpm --format json");
    auto j = nlohmann::json::parse(cd.out);
    CHECK(j["verdict"] == "YES");
    CHECK(j["matching"].size() == 3);

    for (const char* algo : {"oracle", "fourchordal"}) {
        auto r = mcut("solve " + data("fig1_ab.graph") + " --problem mc --algo " + std::string(algo));
        CHECK(r.out.rfind("YES\n", 0) == 0);
    }
}

TEST_CASE("cli emits the 2-CNF") {
    fs::path out = scratch() / "right.cnf";
    auto r = mcut("solve " + data("fig5_right.graph") + " --problem pmc --emit-2cnf " + out.string());
    CHECK(r.code == 0);
    std::string cnf = slurp(out);
    CHECK(cnf.find("p cnf 6 10\n6 2 0\n-6 -2 0\n4 5 0\n") != std::string::npos);
    auto map = nlohmann::json::parse(slurp(out.string() + ".map.json"));
    CHECK(map["1"] == 0);
    CHECK(map["6"] == 5);

    fs::path cnf_file = scratch() / "two.cnf";
    std::ofstream(cnf_file) << "p cnf 2 2\n1 2 0\n-1 0\n";
    CHECK(mcut("twosat " + cnf_file.string()).out == "SAT\nv -1 2 0\n");
    CHECK(mcut("twosat " + out.string()).out.rfind("SAT\n", 0) == 0);
}

TEST_CASE("cli check") {
    auto p3 = mcut("check " + data("p3.graph") + " --pt-free 3");
    CHECK(p3.code == 0);
    CHECK(p3.out.rfind("pt_free(3): false", 0) == 0);
    CHECK(mcut("check " + data("p3.graph") + " --pt-free 4").out.rfind("pt_free(4): true", 0) == 0);
    auto ab = mcut("check " + data("fig1_ab.graph") + " --k-chordal 4 --pattern " + data("p3.graph") +
                   " --format json");
    auto j = nlohmann::json::parse(ab.out);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["holds"] == true);
    CHECK(j[1]["holds"] == false);
    CHECK(j[1]["witness"].size() == 3);
    CHECK(mcut("check " + data("p3.graph")).code == 2);
}

TEST_CASE("cli reduce") {
    fs::path prefix = scratch() / "fig4";
    auto r = mcut("reduce " + data("fig4.cnf") + " --out " + prefix.string());
    CHECK(r.code == 0);
    CHECK(r.out.rfind("clauses=3 n=42 m=109 |F|=6 |T|=9 |Q|=1,2,3,1,1,1\n", 0) == 0);
    CHECK(slurp(prefix.string() + ".graph").rfind("42 109\n", 0) == 0);
    auto layout = nlohmann::json::parse(slurp(prefix.string() + ".layout.json"));
    CHECK(layout["Q[2]"] == std::vector<int>{3, 16, 29});

    auto check = mcut("check " + prefix.string() + ".graph --pt-free 14 --k-chordal 8 --max-oracle-n 45");
    CHECK(check.code == 0);
    CHECK(check.out.find("pt_free(14): true  longest induced path P13") != std::string::npos);
    CHECK(check.out.find("k_chordal(8): true  longest induced cycle C8") != std::string::npos);

    fs::path bad = scratch() / "bad.cnf";
    std::ofstream(bad) << "p cnf 2 1\n1 1 2 0\n";
    CHECK(mcut("reduce " + bad.string() + " --out " + prefix.string()).code == 2);
}

TEST_CASE("cli crosscheck") {
    auto a = mcut("--seed 1 crosscheck --count 40 --max-n 12");
    CHECK(a.code == 0);
    CHECK(a.out.find("disagreements: 0") != std::string::npos);
    CHECK(mcut("crosscheck --count 40 --max-n 12 --seed 1").out == a.out);
    CHECK(mcut("crosscheck --count 0").out.find("instances=0") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    CHECK(mcut("solve /nonexistent.graph").code == 2);
    CHECK(mcut("frobnicate").code == 2);
    CHECK(mcut("solve " + data("fig1_ab.graph") + " --problem xyz").code == 2);
    fs::path broken = scratch() / "broken.graph";
    std::ofstream(broken) << "3 2\n0 1\n";
    CHECK(mcut("solve " + broken.string()).code == 2);
    fs::path cycle = scratch() / "c40.graph";
    {
        std::ofstream o(cycle);
        o << "40 40\n";
        for (int i = 0; i < 40; ++i) o << i << ' ' << (i + 1) % 40 << '\n';
    }
    CHECK(mcut("solve " + cycle.string() + " --problem mc --algo oracle").code == 3);
    CHECK(mcut("solve " + cycle.string() + " --problem mc --algo fourchordal").code == 0);
}
