#include "doctest.h"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run qwalk(const std::string& args) {
    std::string cmd = std::string(QWALK_BIN) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("classify") {
    Run r = qwalk("classify NE,S,W");
    CHECK(r.code == 0);
    CHECK(r.out.find("class-5") != std::string::npos);
    CHECK(qwalk("classify SE,S,SW").out.find("empty") != std::string::npos);
    CHECK(qwalk("classify N,NW,SE").out.find("class-11") != std::string::npos);
    auto j = nlohmann::json::parse(qwalk("classify NE,S,W --format json").out);
    CHECK(j.dump().find("class-5") != std::string::npos);
}

TEST_CASE("count") {
    Run r = qwalk("count N,SE,W -n 6");
    CHECK(r.code == 0);
    CHECK(r.out.find("1,1,2,4,9,21,51") != std::string::npos);
    CHECK(qwalk("count NE,SE,NW -n 3").out.find("1,1,3,7") != std::string::npos);
    CHECK(qwalk("count NE,S,W -n 0").code == 0);
    CHECK(qwalk("count 7 -n 5").out.find("1,1,2,4,9,21") != std::string::npos);
}

TEST_CASE("group") {
    Run r = qwalk("group 5");
    CHECK(r.code == 0);
    CHECK(r.out.find("order 6") != std::string::npos);
    CHECK(r.out.find("1/(x*y)") != std::string::npos);
    CHECK(qwalk("group 10 --group-bound 30").out.find("exceeds bound 30") != std::string::npos);
}

TEST_CASE("guess") {
    Run r = qwalk("guess 7");
    CHECK(r.code == 0);
    CHECK(r.out.find("(n+4)*a(n+2) - (2*n+5)*a(n+1) - 3*(n+1)*a(n) = 0") != std::string::npos);
    CHECK(qwalk("guess 10 -n 60 --guess-order 2 --guess-degree 2").out.find("NotFound") != std::string::npos);
}

TEST_CASE("verify writes a report") {
    Run r = qwalk("verify 7 --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.dump().find("Motzkin") != std::string::npos);
    std::string path = "qwalk_cli_test_report.json";
    CHECK(qwalk("verify 6 --out " + path).code == 0);
    std::ifstream f(path);
    CHECK(f.good());
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(qwalk("classify N,FOO").code == 2);
    CHECK(qwalk("count N,E -n -3").code == 2);
    CHECK(qwalk("verify 12").code == 2);
    CHECK(qwalk("frobnicate").code == 2);
    CHECK(qwalk("count N,E --slice sideways").code == 2);
}
