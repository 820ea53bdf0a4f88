#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"

using namespace topo;
using topotest::free_part;
using topotest::groups;
using topotest::torsion_part;

TEST_CASE("parsing the documented forms", "[expr]") {
    SpaceExpression lens = parse("lens 5 [1,1]");
    REQUIRE(lens.kind == SpaceExpression::Kind::Lens);
    REQUIRE(lens.a == 5);
    REQUIRE(lens.params == std::vector<long long>({1, 1}));

    SpaceExpression j = parse("join(sphere 1, sphere 1)");
    REQUIRE(j.kind == SpaceExpression::Kind::Join);
    REQUIRE(j.children.size() == 2);
    REQUIRE(j.children[0].kind == SpaceExpression::Kind::Sphere);

    SpaceExpression mt = parse("mapping-torus(circle 5, rot 2)");
    REQUIRE(mt.kind == SpaceExpression::Kind::MappingTorus);
    REQUIRE(mt.a == 5);
    REQUIRE(mt.b == 2);

    SpaceExpression milnor = parse("milnor Z:2 x Z:3 4");
    REQUIRE(milnor.kind == SpaceExpression::Kind::Milnor);
    REQUIRE(milnor.group_spec == "Z:2 x Z:3");
    REQUIRE(milnor.a == 4);

    REQUIRE(parse("sphere -1").a == -1);
    REQUIRE(parse("load \"some file.json\"").path == "some file.json");
    REQUIRE(parse("load spaces/circle.json").path == "spaces/circle.json");
}

TEST_CASE("canonical rendering round-trips", "[expr]") {
    for (const char* text :
         {"point", "discrete 4", "circle 7", "sphere 3",
          "join(lens 5 [1,2], rp 2)", "disjoint(point, discrete 2)",
          "milnor D:3 2", "mapping-torus(circle 4, rot 1)"}) {
        std::string canonical = parse(text).to_string();
        REQUIRE(parse(canonical).to_string() == canonical);
    }
}

TEST_CASE("syntax errors carry positions", "[expr]") {
    try {
        parse("lens 5");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        REQUIRE(e.line() == 1);
        REQUIRE(e.col() == 7);
        REQUIRE(e.expected() == "'['");
    }
    REQUIRE_THROWS_AS(parse("frobnicate 3"), SyntaxError);
    REQUIRE_THROWS_AS(parse("join(point point)"), SyntaxError);
    REQUIRE_THROWS_AS(parse("lens 5 [1,1] trailing"), SyntaxError);
    REQUIRE_THROWS_AS(parse("milnor Q:8 1"), SyntaxError);
    REQUIRE_THROWS_AS(parse(""), SyntaxError);
}

TEST_CASE("group names", "[expr]") {
    REQUIRE(parse_group("Z:4").order() == 4);
    REQUIRE(parse_group("D:3").order() == 6);
    REQUIRE_FALSE(parse_group("D:3").is_abelian());
    FiniteGroup klein = parse_group("Z:2 x Z:2");
    REQUIRE(klein.order() == 4);
    REQUIRE(klein == direct_product(cyclic(2), cyclic(2)));
    REQUIRE(parse_group("Z:2 x Z:2 x Z:3").order() == 12);
    REQUIRE_THROWS_AS(parse_group("Q:8"), SyntaxError);
    REQUIRE_THROWS_AS(parse_group("Z:"), SyntaxError);
}

TEST_CASE("evaluation matches the library constructions", "[expr]") {
    REQUIRE(evaluate(parse("point")) == point());
    REQUIRE(evaluate(parse("discrete 3")) == discrete(3));
    REQUIRE(evaluate(parse("circle 5")) == polygon_circle(5));
    REQUIRE(evaluate(parse("sphere 2")) == sphere(2));
    REQUIRE(evaluate(parse("join(sphere 0, sphere 0)")) == sphere(1));

    REQUIRE(all_homology(evaluate(parse("lens 5 [1,1]"))) ==
            groups({free_part(1), torsion_part({5}), {}, free_part(1)}));
    REQUIRE(all_homology(evaluate(parse("rp 2"))) ==
            groups({free_part(1), torsion_part({2}), {}}));
    REQUIRE(all_homology(evaluate(parse("mapping-torus(circle 4, rot 1)"))) ==
            groups({free_part(1), free_part(2), free_part(1)}));
    // negative rotation steps reduce mod m
    REQUIRE(all_homology(evaluate(parse("mapping-torus(circle 4, rot -3)"))) ==
            groups({free_part(1), free_part(2), free_part(1)}));

    REQUIRE_THROWS_AS(evaluate(parse("lens 6 [2,1]")), NonPrimeParameterError);
    REQUIRE_THROWS_AS(evaluate(parse("discrete 0")), InvalidArgumentError);
    REQUIRE_THROWS_AS(evaluate(parse("sphere -2")), InvalidArgumentError);
}

TEST_CASE("evaluation honors the simplex budget", "[expr]") {
    std::size_t saved = simplex_budget();
    simplex_budget() = 50;
    REQUIRE_THROWS_AS(evaluate(parse("join(sphere 2, sphere 2)")), BudgetExceededError);
    simplex_budget() = saved;
}

TEST_CASE("load evaluates a saved Delta-set", "[expr]") {
    std::string path = "expr_load_test.json";
    save_delta_set(sphere(1), path);
    DeltaSet loaded = evaluate(parse("load " + path));
    REQUIRE(loaded == sphere(1));
    std::remove(path.c_str());

    REQUIRE_THROWS_AS(evaluate(parse("load does_not_exist.json")), IoError);
}
