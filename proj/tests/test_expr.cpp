#include "folia/expr.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace folia;
using folia::testing::Rng;

TEST_CASE("expression parsing") {
    std::vector<std::string> vars{"x", "y"};
    SECTION("basic forms") {
        MPoly p = parse_expression("x^2 - 2/3*y", vars);
        REQUIRE(p.str() == "x^2 - 2/3*y");
        REQUIRE(parse_expression("-(x+y)^2", vars).str() == "-x^2 - 2*x*y - y^2");
        REQUIRE(parse_expression("3/6", vars).str() == "1/2");
        REQUIRE(parse_expression("x^0", vars).str() == "1");
    }
    SECTION("errors carry positions") {
        try {
            parse_expression("x + ", vars);
            FAIL("expected syntax error");
        } catch (const Error& e) {
            REQUIRE(std::string(e.what()).find("offset 4") != std::string::npos);
            REQUIRE(e.kind == ErrorKind::input);
        }
        REQUIRE_THROWS_AS(parse_expression("x^-2", vars), Error);
        REQUIRE_THROWS_AS(parse_expression("x*", vars), Error);
        REQUIRE_THROWS_AS(parse_expression("(x", vars), Error);
        try {
            parse_expression("x + q", vars);
            FAIL("expected unknown variable");
        } catch (const Error& e) {
            REQUIRE(std::string(e.what()).find("unknown variable 'q'") != std::string::npos);
        }
    }
    SECTION("round trip print-parse on random polynomials") {
        Rng rng(42);
        for (int i = 0; i < 200; ++i) {
            MPoly p = rng.poly(vars, 5, 6);
            MPoly q = parse_expression(p.str(), vars);
            REQUIRE(p == q);
            REQUIRE(p.str() == q.str());
        }
    }
    SECTION("variable names") {
        REQUIRE(valid_variable_name("x1"));
        REQUIRE(valid_variable_name("zeta"));
        REQUIRE_FALSE(valid_variable_name("X"));
        REQUIRE_FALSE(valid_variable_name("1x"));
        REQUIRE_FALSE(valid_variable_name(""));
    }
}
