#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "config.hpp"

using namespace spingeom;
using namespace spingeom::cli;

namespace {

int error_line(const std::string& text) {
    try {
        parse_config(text, "t.json");
    } catch (const ConfigError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("well-formed config") {
    const std::string text = R"({
  "hbar": 0.5,
  "systems": [
    {"P": 2, "s": "1/2", "j": 1.5, "m": -0.5, "euler": [0, 1, 2], "xi": [1, 2, 3]},
    {"P": 1, "s": 0, "j": 0, "m": 0}
  ],
  "sweep": {"j_values": [16, "33/2"], "p_scale": 2,
            "lines": [{"point": [0, 0, 0], "dir": [1, 0, 0]}, {"point": [0, 0, 1], "dir": [0, 2, 0]}]},
  "output": {"format": "json", "path": "out.json"}
})";
    const RunConfig c = parse_config(text);
    CHECK(c.hbar == 0.5);
    REQUIRE(c.systems.size() == 2);
    CHECK(c.systems[0].q == QNum::from_values(0.5, 1.5, -0.5));
    CHECK(c.systems[0].placement.xi == Vec3(1, 2, 3));
    CHECK(c.systems[1].placement.euler == Vec3::Zero());
    REQUIRE(c.sweep);
    CHECK(c.sweep->j_values[1] == HalfInt::from_doubled(33));
    CHECK((c.sweep->lines[1].dir - Vec3(0, 1, 0)).norm() == 0.0);
    CHECK(c.output.format == "json");
    CHECK(c.output.path == "out.json");
}

TEST_CASE("syntax errors report their line") {
    CHECK(error_line("{\n  \"hbar\": 1,\n  \"systems\": [\n    {\"P\": 1,, }\n  ]\n}") == 4);
    CHECK(error_line("{\n\"hbar\": 1\n") == 3);
}

TEST_CASE("semantic errors report their line") {
    const std::string bad_q = "{\n  \"systems\": [\n    {\"P\": 1, \"s\": 0.5, \"j\": 0.5, \"m\": 0.5},\n"
                              "    {\"P\": 1, \"s\": 1, \"j\": 0.5, \"m\": 0.5}\n  ]\n}";
    CHECK(error_line(bad_q) == 4);
    try {
        parse_config(bad_q, "t.json");
        FAIL("expected a config error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).rfind("t.json:4: /systems/1", 0) == 0);
    }
    CHECK(error_line("{\n  \"hbar\": -1\n}") == 2);
    CHECK(error_line("{\n  \"hbar\": 1,\n  \"colour\": 3\n}") == 3);
    CHECK(error_line("{\n  \"systems\": [\n    {\"P\": 1,\n     \"s\": 0.3, \"j\": 1, \"m\": 0}\n  ]\n}") == 4);
    CHECK(error_line("{\n  \"systems\": [\n    {\"s\": 0, \"j\": 1, \"m\": 0}\n  ]\n}") == 3);
    CHECK(error_line("{\n  \"output\": {\n    \"format\": \"xml\"\n  }\n}") == 3);
    const std::string parallel = "{\n \"sweep\": {\n  \"j_values\": [4],\n  \"lines\": [\n"
                                 "   {\"point\": [0,0,0], \"dir\": [1,0,0]},\n"
                                 "   {\"point\": [0,1,0],\n    \"dir\": [-3,0,0]}\n  ]\n }\n}";
    CHECK(error_line(parallel) == 7);
    CHECK(error_line("{\n \"sweep\": {\n  \"j_values\": [],\n  \"lines\": []\n }\n}") == 3);
}

TEST_CASE("pointer locator") {
    const std::string text = "{\"a\": [1,\n 2, {\"b/c\": \"x,]}\"}],\n \"d\": {}}";
    CHECK(locate_pointer(text, "") == 1);
    CHECK(locate_pointer(text, "/a/1") == 2);
    CHECK(locate_pointer(text, "/a/2/b~1c") == 2);
    CHECK(locate_pointer(text, "/d") == 3);
    CHECK(locate_pointer(text, "/missing") == 0);
}

TEST_CASE("missing file") {
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}
