#include "doctest.h"
#include "json.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string ppw_bin() {
    const char* p = std::getenv("PPW_BIN");
    return p ? p : "./build/ppw";
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& cmdline) {
    std::string full = ppw_bin() + " " + cmdline + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult res{-1, {}};
    FILE* p = popen(full.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) res.out.append(buf.data(), n);
    int st = pclose(p);
    res.code = WEXITSTATUS(st);
    return res;
}

const char* kA3 = "'vertices: 1 2 3; arrows: a: 1->2; b: 2->3; c: 1->3'";

} // namespace

TEST_CASE("cli: sortable factorization and exit codes") {
    auto r = run(std::string("sortable -q ") + kA3 + " --word '1 2 3 1 2 1'");
    CHECK(r.code == 0);
    CHECK(r.out.find("c0=1 2 3 | c1=1 2 | c2=1") != std::string::npos);
    // non-reduced word: usage error
    auto bad = run(std::string("sortable -q ") + kA3 + " --word '1 1'");
    CHECK(bad.code == 1);
    // reduced but not sortable: semantic negative
    auto neg = run("sortable -q A2 --word '2 1'");
    CHECK(neg.code == 2);
}

TEST_CASE("cli: piw diagrams match the golden transcription") {
    auto r = run(std::string("piw -q ") + kA3 + " --word '1 2 3 1 2 1' --diagram");
    CHECK(r.code == 0);
    const char* src = std::getenv("PPW_SRC");
    REQUIRE(src != nullptr);
    std::ifstream golden(std::string(src) + "/tests/golden/a3_piw.txt");
    REQUIRE(golden.good());
    std::string want((std::istreambuf_iterator<char>(golden)),
                     std::istreambuf_iterator<char>());
    CHECK(r.out == want);
}

TEST_CASE("cli: json reports round-trip") {
    auto r = run(std::string("verify -q A2 --word '1 2 1' --suite gldim --json -"));
    CHECK(r.code == 0);
    auto start = r.out.find('{');
    REQUIRE(start != std::string::npos);
    nlohmann::json j = nlohmann::json::parse(r.out.substr(start));
    CHECK(j["ok"] == true);
    CHECK(j["reports"].size() == 1);
    // parse back the dump: lossless round trip
    nlohmann::json j2 = nlohmann::json::parse(j.dump());
    CHECK(j2 == j);
}

TEST_CASE("cli: verify skips non-sortable words with exit 0 only if no FAIL") {
    auto r = run("verify -q A2 --word '2 1' --suite tilting");
    CHECK(r.code == 0);
    CHECK(r.out.find("SKIP") != std::string::npos);
}

TEST_CASE("cli: corpus driver on A2") {
    auto r = run("corpus --type A2 --max-len 3 --suite gldim");
    CHECK(r.code == 0);
    CHECK(r.out.find("4 sortable words") != std::string::npos);
}

TEST_CASE("cli: prime field backend runs the same checks") {
    auto r = run("verify -q A2 --word '1 2 1' --suite endalg --field gfp:2097169");
    CHECK(r.code == 0);
}

TEST_CASE("cli: qw prints the graded arrows") {
    auto r = run(std::string("qw -q ") + kA3 + " --word '1 2 3 1 2 1'");
    CHECK(r.code == 0);
    CHECK(r.out.find("3 -> 6  deg -1") != std::string::npos);
}

TEST_CASE("cli: endo prints dimensions and a presentation") {
    auto r = run(std::string("endo -q ") + kA3 + " --word '1 2 3 1 2 1'");
    CHECK(r.code == 0);
    CHECK(r.out.find("dim 5") != std::string::npos);
    CHECK(r.out.find("relations") != std::string::npos);
}
