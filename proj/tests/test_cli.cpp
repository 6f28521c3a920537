#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "rankgraph/io.hpp"

namespace fs = std::filesystem;
using rankgraph::io::read_file;
using rankgraph::io::write_file_atomic;

namespace {

const fs::path& workdir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "rankgraph_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run(const std::string& args) {
    const std::string cmd = "cd '" + workdir().string() + "' && '" RANKGRAPH_CLI "' " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string file(const std::string& name) {
    return read_file(workdir() / name);
}

std::size_t edge_lines(const std::string& text) {
    std::size_t count = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        if (end > start && text[start] != '#') ++count;
        start = end + 1;
    }
    return count;
}

}

TEST_CASE("generate is byte-reproducible, also from its manifest") {
    const std::string base = "generate --structure nested --n 128 --m 512 --epsilon 0.1 --seed 3";
    REQUIRE(run(base + " --out a.edges") == 0);
    REQUIRE(run(base + " --out b.edges --threads 4") == 0);
    CHECK(file("a.edges") == file("b.edges"));

    fs::copy_file(workdir() / "a.edges.manifest.json", workdir() / "m.json", fs::copy_options::overwrite_existing);
    REQUIRE(run("generate --config m.json --out c.edges") == 0);
    CHECK(file("a.edges") == file("c.edges"));
    REQUIRE(run("generate --config m.json") == 0);
    CHECK(file("a.edges.manifest.json") == file("m.json"));
}

TEST_CASE("generate at eps = 0 yields exactly m edges") {
    REQUIRE(run("generate --structure nested --n 128 --m 512 --epsilon 0 --out z.edges") == 0);
    CHECK(edge_lines(file("z.edges")) == 512);
}

TEST_CASE("validation errors exit with 2 and write nothing") {
    write_file_atomic(workdir() / "pos10.csv", "0\n1\n2\n3\n4\n5\n6\n7\n8\n9\n");
    CHECK(run("generate --structure spatial --positions pos10.csv --n 12 --m 5 --epsilon 0 --out bad.edges") == 2);
    CHECK_FALSE(fs::exists(workdir() / "bad.edges"));
    CHECK(run("generate --structure bogus --n 12 --m 5 --epsilon 0 --out bad.edges") == 2);
    CHECK(run("generate --structure nested --n 12 --m 500 --epsilon 0 --out bad.edges") == 2);
    CHECK(run("generate --structure nested --n 12 --m 5 --k 2 --epsilon 0 --out bad.edges") == 2);
    CHECK(run("generate --structure nested --n 12 --m 5 --epsilon 1.5 --out bad.edges") == 2);
    CHECK(run("generate --structure nested --n 12 --m 5 --epsilon 0.5 --positions missing.csv --out bad.edges") == 2);
    CHECK(run("generate --no-such-flag") == 2);
    CHECK_FALSE(fs::exists(workdir() / "bad.edges"));
    CHECK(run("zoo-list") == 0);
}

TEST_CASE("custom cost table") {
    write_file_atomic(workdir() / "cost.csv", "u,v,cost\n0,1,5\n0,2,1\n1,2,3\n");
    REQUIRE(run("rank-matrix --cost-csv cost.csv --n 3 --format csv --out cost_rank.csv") == 0);
    CHECK(file("cost_rank.csv") == ",3,1\n3,,2\n1,2,\n");
    write_file_atomic(workdir() / "partial.csv", "0,1,5\n0,2,1\n");
    CHECK(run("rank-matrix --cost-csv partial.csv --n 3 --out partial.pgm") == 2);
}

TEST_CASE("rank matrix outputs") {
    REQUIRE(run("rank-matrix --structure nested --n 4 --format csv --tie-seed 0 --out n4.csv") == 0);
    const std::string csv = file("n4.csv");
    CHECK((csv == ",1,2,3\n1,,4,5\n2,4,,6\n3,5,6,\n" || csv == ",1,2,4\n1,,3,5\n2,3,,6\n4,5,6,\n"));

    REQUIRE(run("rank-matrix --all --out gallery") == 0);
    std::size_t count = 0;
    for (const auto& entry : fs::directory_iterator(workdir() / "gallery")) {
        if (entry.path().extension() != ".pgm") continue;
        ++count;
        const std::string pgm = read_file(entry.path());
        CHECK(pgm.rfind("P5\n128 128\n255\n", 0) == 0);
        CHECK(pgm.size() == 15 + 128 * 128);
    }
    CHECK(count == 13);
}

TEST_CASE("probability curve output") {
    REQUIRE(run("prob-curve --n 20 --m 30 --epsilon 0,0.3,1 --out pc.csv") == 0);
    const std::string csv = file("pc.csv");
    CHECK(csv.rfind("epsilon,r,p,cumulative\n", 0) == 0);
    CHECK(csv.find("\n0,30,1,30\n") != std::string::npos);
    CHECK(csv.find("\n0,31,0,30\n") != std::string::npos);
    CHECK(csv.find("\n1,7,0.15789473684210525,") != std::string::npos);
}

TEST_CASE("smallworld csv is reproducible") {
    const std::string base = "smallworld --structure watts_strogatz --n 200 --k 6 --runs 1 --seed 4";
    REQUIRE(run(base + " --out sw1.csv") == 0);
    REQUIRE(run(base + " --out sw2.csv --threads 3") == 0);
    CHECK(file("sw1.csv") == file("sw2.csv"));
    CHECK(edge_lines(file("sw1.csv")) == 9);
}
