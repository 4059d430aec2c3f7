#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lohg/io.hpp"

// end-to-end checks of the command-line surface; LOHG_BIN is provided by the
// build so the suite runs the real binary
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("lohg_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
    const std::string cmd = std::string(LOHG_BIN) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// JSON-lines records with the wall-time field removed
std::string records_without_runtime(const std::string& path) {
    std::ifstream in(path);
    std::string line, out;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        j.erase("runtime_ms");
        out += j.dump() + "\n";
    }
    return out;
}

} // namespace

TEST_CASE("gen / solve / verify round trip") {
    TempDir tmp;
    const std::string inst = tmp.file("a.lohg");
    const std::string wit = tmp.file("a.wit");
    const std::string sol = tmp.file("a.sol");
    REQUIRE(run("gen --n 60 --m 90 --seed 5 --out " + inst + " --witness " + wit) == 0);
    CHECK(run("verify " + inst + " " + wit) == 0);
    REQUIRE(run("solve " + inst + " --out " + sol) == 0);
    CHECK(run("verify " + inst + " " + sol) == 0);
    // outputs are parseable canonical files
    CHECK_NOTHROW(lohg::load_hypergraph(inst));
    CHECK_NOTHROW(lohg::load_colouring(sol));
}

TEST_CASE("exit codes") {
    TempDir tmp;
    const std::string inst = tmp.file("b.lohg");
    REQUIRE(run("gen --n 12 --m 8 --seed 9 --out " + inst) == 0);

    SUBCASE("negative decisions exit 1") {
        CHECK(run("exact --k 1 " + inst) == 1);
        // wrong-length colouring counts as usage error, a failing one as 1
        const std::string bad = tmp.file("bad.sol");
        lohg::write_file_atomic(bad, "s lo 2 12\n2 2 2 2 2 2 2 2 2 2 2 2\n");
        CHECK(run("verify " + inst + " " + bad) == 1);
        CHECK(run("minion cocolour --m 6 --k 3 --p 2") == 1);
        CHECK(run("minion homcheck --rsrc 4 --rdst 3 --k 3") == 1);
    }
    SUBCASE("positive decisions exit 0") {
        CHECK(run("exact --k 2 " + inst) == 0);
        CHECK(run("minion cocolour --m 5 --k 3 --p 2") == 0);
        CHECK(run("minion witness --k 3 --variant 1") == 0);
        CHECK(run("minion witness --k 3 --variant 2") == 0);
    }
    SUBCASE("usage and IO errors exit 2") {
        CHECK(run("nonsense") == 2);
        CHECK(run("solve " + tmp.file("missing.lohg")) == 2);
        CHECK(run("exact " + inst) == 2); // --k required
        CHECK(run("gen --n 6 --m 500 --linear --out " + tmp.file("x.lohg")) == 2);
    }
    SUBCASE("budget exhaustion exits 3") {
        CHECK(run("minion --budget 5 homcheck --rsrc 3 --rdst 3 --k 3") == 3);
        CHECK(run("minion homcheck --rsrc 5 --rdst 7 --k 3") == 3);
    }
}

TEST_CASE("bench is reproducible and summarised") {
    TempDir tmp;
    const std::string rec1 = tmp.file("r1.jsonl");
    const std::string rec2 = tmp.file("r2.jsonl");
    REQUIRE(run("bench --sizes 64,128 --seeds 2 --seed 7 --out " + rec1) == 0);
    REQUIRE(run("bench --sizes 64,128 --seeds 2 --seed 7 --jobs 3 --out " + rec2) == 0);
    // parallel fan-out keeps canonical order; everything but wall time agrees
    CHECK(records_without_runtime(rec1) == records_without_runtime(rec2));

    const std::string csv = tmp.file("r.csv");
    const std::string plot = tmp.file("r.dat");
    REQUIRE(run("bench --sizes 64,128 --seeds 2 --seed 7 --format csv --out " + csv +
                " --plot " + plot) == 0);
    CHECK(slurp(csv).starts_with("n,m,seed"));
    CHECK(slurp(plot).starts_with("# n mean_colours"));
}

TEST_CASE("gf2 and is subcommands run on an instance") {
    TempDir tmp;
    const std::string inst = tmp.file("c.lohg");
    REQUIRE(run("gen --n 40 --m 60 --seed 2 --out " + inst) == 0);
    CHECK(run("gf2 " + inst) == 0);
    CHECK(run("is " + inst) == 0);
}

TEST_CASE("minion certificates write to --out atomically") {
    TempDir tmp;
    const std::string cert = tmp.file("cert.json");
    REQUIRE(run("minion --out " + cert + " enum --r 3 --k 2 --n 3") == 0);
    const std::string body = slurp(cert);
    CHECK(body.find("\"count\": 3") != std::string::npos);
    CHECK(!fs::exists(cert + ".tmp"));
}
