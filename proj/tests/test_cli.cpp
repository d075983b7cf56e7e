#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = ramsey::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kTwoP3 = R"({"vertices":[0,1,2,3,4,5],"edges":[[0,1],[1,2],[3,4],[4,5]]})";
const std::string kP3 = "0-1,1-2";
const std::string kP4 = "0-1,1-2,2-3";
const std::string kTwoK2 = "0-1,2-3";
const std::string kCombEx58 = R"({"prefix":[2],"tail":{"kind":"periodic","cycle":[1]}})";

}  // namespace

TEST_CASE("arrow subcommand: exit codes and text output") {
    auto r = invoke({"arrow", kTwoP3, kP3, kTwoK2});
    CHECK(r.code == 0);
    CHECK(r.out.find("arrows: true") != std::string::npos);

    auto neg = invoke({"arrow", kP4, kP3, kP3, "--witness"});
    CHECK(neg.code == 1);
    CHECK(neg.out.find("arrows: false") != std::string::npos);
    CHECK(neg.out.find("\"red\"") != std::string::npos);
}

TEST_CASE("parse failures exit 2 with a one-line diagnostic") {
    auto r = invoke({"arrow", "{bad json", kP3, kP3});
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error:", 0) == 0);
    CHECK(r.err.find('\n') == r.err.size() - 1);

    auto unknown = invoke({"frobnicate"});
    CHECK(unknown.code == 2);
}

TEST_CASE("minimal and enumerate") {
    CHECK(invoke({"minimal", kTwoP3, kP3, kTwoK2}).code == 0);
    CHECK(invoke({"minimal", kP4, kP3, kTwoK2}).code == 1);

    auto r = invoke({"enumerate", kP3, "0-1", "--max-v", "3", "--max-e", "2", "--format",
                     "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"count\":1") != std::string::npos);
}

TEST_CASE("comb subcommands") {
    auto check = invoke({"comb", "check", kCombEx58});
    CHECK(check.code == 1);
    CHECK(check.out.find("self-embeddable: false") != std::string::npos);

    auto norm = invoke(
        {"comb", "normalize", R"({"prefix":[3],"tail":{"kind":"periodic","cycle":[2]}})"});
    CHECK(norm.code == 0);
    CHECK(norm.out.find("\"prefix\":[1,2]") != std::string::npos);

    auto identity = invoke(
        {"comb", "check", R"({"prefix":[],"tail":{"kind":"arithmetic","start":1,"step":1}})",
         "--format", "json"});
    CHECK(identity.code == 0);
    CHECK(identity.out.find("\"shift\":1") != std::string::npos);
}

TEST_CASE("hub subcommands") {
    const std::string member =
        R"({"n":2,"hub_edges":[],"classes":[{"sig":[1,1],"count":"inf"}]})";
    const std::string nonmember =
        R"({"n":2,"hub_edges":[[1,2]],"classes":[{"sig":[1,0],"count":"inf"},{"sig":[0,1],"count":5}]})";
    CHECK(invoke({"hub", "member", member}).code == 0);
    CHECK(invoke({"hub", "member", nonmember}).code == 1);

    auto se = invoke({"hub", "selfembed", member, "--depth", "3"});
    CHECK(se.code == 0);
    CHECK(se.out.find("\"map\"") != std::string::npos);

    auto bm = invoke({"hub", "bluematch", kTwoK2, R"({"red":[],"blue":[[0,1],[2,3]]})", "--n",
                      "2"});
    CHECK(bm.code == 1);

    auto ok = invoke({"hub", "bluematch", kP3, R"({"red":[[1,2]],"blue":[[0,1]]})", "--n", "2"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("iterations: 1") != std::string::npos);
}

TEST_CASE("compact, konig and truncate") {
    auto compact = invoke({"compact", R"({"family":"star"})", "0-1,0-2", "0-1,0-2", "--cap",
                           "5", "--format", "json"});
    CHECK(compact.code == 0);
    CHECK(compact.out.find("\"depth\":3") != std::string::npos);

    auto none = invoke({"compact", R"({"family":"ray"})", "0-1,0-2,1-2", "0-1", "--cap", "4"});
    CHECK(none.code == 1);
    CHECK(none.out.find("inconclusive") != std::string::npos);

    auto levels = invoke({"konig", "levels",
                          R"({"vertices":[0,1,2],"edges":[[0,1],[1,2]],"basepoint":0})",
                          R"({"vertices":[0,1,2,3,4],"edges":[[0,1],[1,2],[2,3],[3,4]],"basepoint":0})"});
    CHECK(levels.code == 0);
    CHECK(levels.out.find("\"sizes\":[1,1,1]") != std::string::npos);

    auto ray = invoke({"konig", "ray", R"({"family":"doubleray"})", "--len", "3", "--depth",
                       "3"});
    CHECK(ray.code == 0);

    auto trunc = invoke({"truncate", R"({"family":"kray","k":3})", "--depth", "1", "--format",
                         "dot"});
    CHECK(trunc.code == 0);
    CHECK(trunc.out.find("graph G {") != std::string::npos);

    auto transfer = invoke({"konig", "transfer", R"({"family":"ray"})", R"({"family":"ray"})",
                            "0-1", "--depth", "3"});
    CHECK(transfer.code == 0);
}

TEST_CASE("json output is byte-identical across invocations") {
    std::vector<std::string> cmd{"arrow", kP4, kP3, kP3, "--format", "json"};
    auto a = invoke(cmd), b = invoke(cmd);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);

    std::vector<std::string> cmd2{"konig", "transfer", R"({"family":"ray"})",
                                  R"({"family":"ray"})", "0-1", "--depth", "3"};
    CHECK(invoke(cmd2).out == invoke(cmd2).out);
}

TEST_CASE("vectors runner") {
    auto pass = invoke({"vectors", std::string(RAMSEY_TEST_DATA_DIR) + "/vectors_smoke.json"});
    CHECK(pass.code == 0);
    CHECK(pass.out.find("0 failed") != std::string::npos);

    auto empty = invoke({"vectors", "[]"});
    CHECK(empty.code == 0);
    CHECK(empty.out.find("0 total") != std::string::npos);

    auto bad = invoke({"vectors",
                       R"([{"command":["arrow","0-1","0-1","0-1"],"expect_exit":1}])"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("1 failed") != std::string::npos);

    auto malformed = invoke({"vectors", R"([{"no_command":true}])"});
    CHECK(malformed.code == 1);
    CHECK(malformed.out.find("malformed") != std::string::npos);
}
