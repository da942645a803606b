#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ghm/cli.hpp"

using namespace ghm;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "ghm_cli_test_" + std::to_string(counter++) + ".json";
        std::ofstream f(path);
        f << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const char* half_shift_json = R"({
  "rank": 4,
  "generators": [
    {
      "linear": [[1,0,0,0],[0,1,0,0],[0,0,-1,0],[0,0,0,-1]],
      "translation": ["1/2", "0", "0", "0"]
    }
  ]
})";

const char* point_reflection_json = R"({
  "rank": 2,
  "generators": [
    {"linear": [[-1,0],[0,-1]], "translation": ["0", "0"]}
  ]
})";

}  // namespace

TEST_CASE("validate accepts a consistent group", "[cli]") {
    TempFile f(half_shift_json);
    auto r = run({"validate", f.path});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("valid: rank 4") != std::string::npos);
}

TEST_CASE("malformed input exits with code 2", "[cli]") {
    SECTION("broken JSON") {
        TempFile f("{ not json");
        auto r = run({"validate", f.path});
        REQUIRE(r.code == 2);
        REQUIRE(r.err.find("malformed JSON") != std::string::npos);
    }
    SECTION("missing file") {
        auto r = run({"validate", "does_not_exist.json"});
        REQUIRE(r.code == 2);
    }
    SECTION("shape mismatch") {
        TempFile f(R"({"rank": 3, "generators": [{"linear": [[1,0],[0,1]], "translation": ["0","0"]}]})");
        auto r = run({"validate", f.path});
        REQUIRE(r.code == 2);
        REQUIRE(r.err.find("shape") != std::string::npos);
    }
    SECTION("infinite order linear part") {
        TempFile f(R"({"rank": 2, "generators": [{"linear": [[1,1],[0,1]], "translation": ["0","0"]}]})");
        auto r = run({"validate", f.path});
        REQUIRE(r.code == 2);
    }
    SECTION("unknown coefficients") {
        TempFile f(half_shift_json);
        auto r = run({"cohomology", f.path, "--degree", "2", "--coefficients", "bogus"});
        REQUIRE(r.code == 2);
    }
}

TEST_CASE("analyze reports the expected invariants", "[cli]") {
    TempFile f(half_shift_json);

    SECTION("json format") {
        auto r = run({"analyze", f.path, "--format", "json"});
        REQUIRE(r.code == 0);
        auto j = Json::parse(r.out);
        REQUIRE(j["valid"] == true);
        REQUIRE(j["torsion_free"] == true);
        REQUIRE(j["minimal_denominator"] == 2);
        REQUIRE(j["extension_order"] == 2);
        REQUIRE(j["h2_invariants"] == Json::array({2, 2}));
        REQUIRE(j["even"] == true);
        REQUIRE(j["hodge"]["type_count"] == 1);
        REQUIRE(j["hodge"]["types"][0]["dimension"] == 2);
    }

    SECTION("text format mentions the Grassmannian factors") {
        auto r = run({"analyze", f.path});
        REQUIRE(r.code == 0);
        REQUIRE(r.out.find("minimal denominator: 2") != std::string::npos);
        REQUIRE(r.out.find("Gr(1,2)") != std::string::npos);
    }

    SECTION("sample structure on demand") {
        auto r = run({"analyze", f.path, "--format", "json", "--sample-structure"});
        REQUIRE(r.code == 0);
        auto j = Json::parse(r.out);
        REQUIRE(j.contains("sample"));
        REQUIRE(j["sample"]["field_order"] == 4);
        int orientation = j["sample"]["orientation"];
        REQUIRE(orientation != 0);
    }
}

TEST_CASE("analyze round trips byte identically through its echo", "[cli]") {
    TempFile f(half_shift_json);
    auto first = run({"analyze", f.path, "--format", "json"});
    REQUIRE(first.code == 0);
    auto echo = Json::parse(first.out)["input"];
    TempFile g(echo.dump());
    auto second = run({"analyze", g.path, "--format", "json"});
    REQUIRE(second.code == 0);
    REQUIRE(first.out == second.out);
}

TEST_CASE("strict mode flags torsion with exit 1", "[cli]") {
    TempFile f(point_reflection_json);
    auto lax = run({"analyze", f.path});
    REQUIRE(lax.code == 0);
    auto strict = run({"analyze", f.path, "--strict"});
    REQUIRE(strict.code == 1);
    REQUIRE(strict.out.find("torsion-free: no") != std::string::npos);
    REQUIRE(strict.out.find("fixes (0, 0)") != std::string::npos);
}

TEST_CASE("cohomology subcommand matches the library", "[cli]") {
    TempFile f(point_reflection_json);
    auto r = run({"cohomology", f.path, "--degree", "2"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "H^2: 0\n");

    auto r1 = run({"cohomology", f.path, "--degree", "1"});
    REQUIRE(r1.code == 0);
    REQUIRE(r1.out == "H^1: Z/2 x Z/2\n");

    TempFile h(half_shift_json);
    auto r2 = run({"cohomology", h.path, "--degree", "2"});
    REQUIRE(r2.code == 0);
    REQUIRE(r2.out == "H^2: Z/2 x Z/2\n");

    SECTION("scaled coefficients") {
        auto r3 = run({"cohomology", h.path, "--degree", "2", "--coefficients", "scaled:2"});
        REQUIRE(r3.code == 0);
        REQUIRE(r3.out.rfind("H^2: ", 0) == 0);
    }

    SECTION("quotient coefficients") {
        TempFile q(R"({"relations": [[2,0],[0,2]]})");
        auto r4 = run({"cohomology", f.path, "--degree", "1", "--coefficients",
                       "quotient:" + q.path});
        REQUIRE(r4.code == 0);
        REQUIRE(r4.out.rfind("H^1: ", 0) == 0);
    }
}

TEST_CASE("split subcommand honours the overlattice", "[cli]") {
    TempFile f(half_shift_json);
    auto standard = run({"split", f.path});
    REQUIRE(standard.code == 0);
    REQUIRE(standard.out.find("splits: no") != std::string::npos);

    TempFile over(R"({"vectors": [["1/2", "0", "0", "0"]]})");
    auto enlarged = run({"split", f.path, "--overlattice", over.path});
    REQUIRE(enlarged.code == 0);
    REQUIRE(enlarged.out.find("overlattice index: 2") != std::string::npos);
    REQUIRE(enlarged.out.find("splits: yes") != std::string::npos);
    REQUIRE(enlarged.out.find("origin shift") != std::string::npos);

    SECTION("non-invariant overlattice is an input error") {
        TempFile bad(R"({"vectors": [["1/3", "0", "1/3", "0"]]})");
        auto r = run({"split", f.path, "--overlattice", bad.path});
        REQUIRE(r.code == 2);
    }
}

TEST_CASE("reduce strips pure translations", "[cli]") {
    TempFile f(R"({
      "rank": 2,
      "generators": [
        {"linear": [[1,0],[0,1]], "translation": ["1/2", "0"]},
        {"linear": [[-1,0],[0,-1]], "translation": ["0", "0"]}
      ]
    })");
    auto r = run({"reduce", f.path});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    REQUIRE(j["group"]["rank"] == 2);
    REQUIRE(j["translation_quotient"] == Json::array({2}));
    REQUIRE(j["basis"][0][0] == "1/2");
}

TEST_CASE("catalog subcommands", "[cli]") {
    auto list = run({"catalog", "list"});
    REQUIRE(list.code == 0);
    REQUIRE(list.out.find("half-shift-involution") != std::string::npos);
    // deterministic ordering: sorted by name
    REQUIRE(list.out.find("half-shift-involution") < list.out.find("point-reflection"));

    auto verify = run({"catalog", "verify"});
    REQUIRE(verify.code == 0);
    REQUIRE(verify.out.find("third-turn-shift: ok") != std::string::npos);

    auto one = run({"catalog", "verify", "torus-rank-2"});
    REQUIRE(one.code == 0);
    REQUIRE(one.out == "torus-rank-2: ok\n");

    auto missing = run({"catalog", "verify", "nonexistent"});
    REQUIRE(missing.code == 2);
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
    auto r = run({"analyze"});
    REQUIRE(r.code == 2);
    auto unknown = run({"frobnicate", "x.json"});
    REQUIRE(unknown.code == 2);
}
