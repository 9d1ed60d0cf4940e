#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbral/cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = umbral::cli_run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace

TEST_CASE("polynomial family commands emit exact coefficient strings") {
    const RunResult bell = run({"bell", "3"});
    REQUIRE(bell.code == 0);
    CHECK(bell.json()["poly"] == Json::array({"0", "1", "3", "1"}));

    const RunResult rbell = run({"rbell", "2", "1"});
    REQUIRE(rbell.code == 0);
    CHECK(rbell.json()["poly"] == Json::array({"1", "3", "1"}));

    const RunResult lah = run({"lah", "3"});
    REQUIRE(lah.code == 0);
    CHECK(lah.json()["poly"] == Json::array({"0", "6", "6", "1"}));

    const RunResult csv = run({"--csv", "bell", "3"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out == "0,1,3,1\n");
}

TEST_CASE("operator chains apply left to right") {
    const RunResult r = run({"--csv", "umbra-apply", "--poly", "[\"0\",\"1\"]", "--chain", "1,2"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "0,0,6,6,1\n");

    const RunResult swapped = run({"--csv", "umbra-apply", "--poly", "[\"0\",\"1\"]", "--chain", "2,1"});
    REQUIRE(swapped.code == 0);
    CHECK(swapped.out == "0,3,13,8,1\n");

    const RunResult full = run({"umbra-apply", "--poly", "[\"0\",\"1\"]", "--chain", "1"});
    REQUIRE(full.code == 0);
    const Json j = full.json();
    CHECK(j["source"] == Json::array({"0", "1"}));
    CHECK(j["chain"] == Json::array({1}));
    CHECK(j["value"] == Json::array({"0", "1", "1"}));
    CHECK(j["certificate"]["all_real"] == true);
}

TEST_CASE("certification command and its strict flag") {
    const RunResult ok = run({"rz-certify", "--poly", "[\"0\",\"1\",\"1\"]", "--expect-rz"});
    CHECK(ok.code == 0);
    CHECK(ok.json()["all_real"] == true);

    const RunResult bad = run({"rz-certify", "--poly", "[\"1\",\"0\",\"1\"]", "--expect-rz"});
    CHECK(bad.code == 2);
    CHECK(bad.json()["all_real"] == false);

    const RunResult lax = run({"rz-certify", "--poly", "[\"1\",\"0\",\"1\"]"});
    CHECK(lax.code == 0);

    const RunResult malformed = run({"rz-certify", "--poly", "not json"});
    CHECK(malformed.code == 1);
    CHECK(!malformed.err.empty());

    const RunResult zero = run({"rz-certify", "--poly", "[]"});
    CHECK(zero.code == 1);
}

TEST_CASE("number triangles print as string rows") {
    const RunResult r = run({"numbers", "--kind", "stirling2", "--rows", "4"});
    REQUIRE(r.code == 0);
    const Json rows = r.json()["rows"];
    REQUIRE(rows.size() == 5);
    CHECK(rows[3] == Json::array({"0", "1", "3", "1"}));
    CHECK(rows[4] == Json::array({"0", "1", "7", "6", "1"}));

    const RunResult assoc = run({"numbers", "--kind", "assoc", "--rows", "4", "--param", "2"});
    REQUIRE(assoc.code == 0);
    CHECK(assoc.json()["rows"][4] == Json::array({"0", "1", "3", "0", "0"}));

    CHECK(run({"numbers", "--kind", "assoc", "--rows", "4"}).code == 1);
    CHECK(run({"numbers", "--kind", "nope"}).code == 1);
}

TEST_CASE("partition-value commands") {
    const RunResult pb = run({"--csv", "partial-bell", "4", "2", "--seq", "ones"});
    REQUIRE(pb.code == 0);
    CHECK(pb.out == "7\n");

    const RunResult vp = run({"--csv", "vpoly", "3", "1", "--seq", "ones"});
    REQUIRE(vp.code == 0);
    CHECK(vp.out == "1,7,6,1\n");

    const RunResult inline_seq = run({"--csv", "partial-bell", "3", "1", "--seq", "[\"1\",\"2\",\"6\"]"});
    REQUIRE(inline_seq.code == 0);
    CHECK(inline_seq.out == "6\n");
}

TEST_CASE("family command walks both parameters") {
    const RunResult lah_rows = run({"--csv", "family", "--preset", "factorials-offset", "--s", "1", "--nmax", "3"});
    REQUIRE(lah_rows.code == 0);
    CHECK(lah_rows.out == "1\n0,1\n0,2,1\n0,6,6,1\n");

    const RunResult deriv = run({"--csv", "family", "--preset", "ones", "--r", "1", "--nmax", "3"});
    REQUIRE(deriv.code == 0);
    CHECK(deriv.out == "0\n1\n1,2\n1,6,3\n");

    CHECK(run({"family", "--preset", "ones", "--s", "1", "--r", "1"}).code == 1);

    const RunResult json_run = run({"family", "--preset", "log", "--r", "0", "--nmax", "2"});
    REQUIRE(json_run.code == 0);
    const Json j = json_run.json();
    CHECK(j["preset"] == "log");
    CHECK(j["r"] == 0);
    CHECK(j["polys"][2] == Json::array({"0", "-1", "1"}));
}

TEST_CASE("graph commands accept presets and unions") {
    const RunResult sig = run({"--csv", "sigma", "--graph", "path:3"});
    REQUIRE(sig.code == 0);
    CHECK(sig.out == "0,0,1,1\n");

    const RunResult grown =
        run({"--csv", "sigma", "--graph", "path:4", "--union", "complete:2"});
    REQUIRE(grown.code == 0);
    CHECK(grown.out == "0,0,2,22,31,11,1\n");

    const RunResult chrom = run({"--csv", "chromatic", "--graph", "cycle:4"});
    REQUIRE(chrom.code == 0);
    CHECK(chrom.out == "0,-3,6,-4,1\n");

    const RunResult inline_graph =
        run({"--csv", "chromatic", "--graph", "{\"vertices\":2,\"edges\":[[0,1]]}"});
    REQUIRE(inline_graph.code == 0);
    CHECK(inline_graph.out == "0,-1,1\n");

    CHECK(run({"chromatic", "--graph", "path:zero"}).code == 1);
}

TEST_CASE("the vertex-limit override comes from the environment") {
    setenv("UMBRAL_RZ_MAX_VERTICES", "5", 1);
    CHECK(run({"chromatic", "--graph", "path:6"}).code == 1);
    CHECK(run({"chromatic", "--graph", "path:5"}).code == 0);
    setenv("UMBRAL_RZ_MAX_VERTICES", "junk", 1);
    CHECK(run({"chromatic", "--graph", "path:3"}).code == 1);
    unsetenv("UMBRAL_RZ_MAX_VERTICES");
    CHECK(run({"chromatic", "--graph", "path:6"}).code == 0);
}

TEST_CASE("printed polynomials can be fed back in") {
    const RunResult bell = run({"bell", "4"});
    REQUIRE(bell.code == 0);
    const std::string poly_text = bell.json()["poly"].dump();
    const RunResult cert = run({"rz-certify", "--poly", poly_text, "--expect-rz"});
    CHECK(cert.code == 0);
    const RunResult applied = run({"umbra-apply", "--poly", poly_text});
    CHECK(applied.code == 0);
}

TEST_CASE("verification suites run, list, and reject unknown names") {
    const RunResult listed = run({"verify", "--list"});
    REQUIRE(listed.code == 0);
    CHECK(listed.out.find("theorem1") != std::string::npos);
    CHECK(listed.out.find("prop5") != std::string::npos);
    CHECK(listed.out.find("section4") != std::string::npos);

    const RunResult ok = run({"verify", "--suite", "theorem1", "--nmax", "3"});
    REQUIRE(ok.code == 0);
    const Json j = ok.json();
    CHECK(j["all_passed"] == true);
    CHECK(j["reports"][0]["suite_name"] == "theorem1");
    CHECK(j["reports"][0]["nmax"] == 3);

    CHECK(run({"verify", "--suite", "nope"}).code == 1);
    CHECK(run({"verify"}).code == 1);
}

TEST_CASE("suite runs are deterministic for a fixed seed") {
    auto stripped = [](const RunResult& r) {
        Json j = r.json();
        for (auto& rep : j["reports"]) rep.erase("elapsed_seconds");
        return j;
    };
    const RunResult a = run({"verify", "--suite", "theorem1", "--nmax", "4", "--seed", "9"});
    const RunResult b = run({"verify", "--suite", "theorem1", "--nmax", "4", "--seed", "9"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(stripped(a) == stripped(b));
}

TEST_CASE("usage errors exit with status one") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"bell"}).code == 1);
    CHECK(run({"bell", "three"}).code == 1);
    const RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("bell") != std::string::npos);
}
