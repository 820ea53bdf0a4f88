#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace topo;
using topotest::free_part;

TEST_CASE("point and discrete sets", "[dset]") {
    REQUIRE(point().counts() == std::vector<std::size_t>{1});
    REQUIRE(point() == discrete(1));
    REQUIRE(discrete(2).counts() == std::vector<std::size_t>{2});
    REQUIRE(discrete(5).counts() == std::vector<std::size_t>{5});
    REQUIRE_THROWS_AS(discrete(0), InvalidArgumentError);

    REQUIRE(DeltaSet::empty().dimension() == -1);
    REQUIRE(DeltaSet::empty().is_empty());
    REQUIRE(validate(point()).ok);
}

TEST_CASE("polygon circles", "[dset]") {
    DeltaSet c3 = polygon_circle(3);
    REQUIRE(c3.counts() == std::vector<std::size_t>{3, 3});
    REQUIRE(validate(c3).ok);
    for (std::size_t j = 0; j < 3; ++j) {
        REQUIRE(c3.face(1, 1, j) == j);
        REQUIRE(c3.face(1, 0, j) == (j + 1) % 3);
    }

    DeltaSet c1 = polygon_circle(1);
    REQUIRE(c1.counts() == std::vector<std::size_t>{1, 1});
    REQUIRE(c1.face(1, 0, 0) == c1.face(1, 1, 0));

    REQUIRE_THROWS_AS(polygon_circle(0), InvalidArgumentError);
}

TEST_CASE("validate pinpoints a corrupted simplicial identity", "[dset]") {
    // the standard 2-simplex ...
    std::vector<std::size_t> counts{3, 3, 1};
    DeltaSet::FaceTables faces(3);
    faces[1] = {{1, 2, 2}, {0, 0, 1}};
    faces[2] = {{2}, {1}, {0}};
    REQUIRE(validate(DeltaSet::from_parts_unchecked(counts, faces)).ok);

    // ... with d_2 of the triangle redirected
    faces[2] = {{2}, {1}, {1}};
    ValidationReport report = validate(DeltaSet::from_parts_unchecked(counts, faces));
    REQUIRE_FALSE(report.ok);
    REQUIRE_FALSE(report.violations.empty());
    REQUIRE(report.violations.front().dim == 2);
    REQUIRE(report.violations.front().simplex == 0);
    REQUIRE(report.violations.front().identity.find("d_0") != std::string::npos);

    REQUIRE_THROWS_AS(DeltaSet::from_parts(counts, faces), ValidationError);
}

TEST_CASE("from_parts rejects malformed tables outright", "[dset]") {
    // face index out of range
    REQUIRE_THROWS_AS(DeltaSet::from_parts({1, 1}, {{}, {{0}, {7}}}), InvalidArgumentError);
    // missing table
    REQUIRE_THROWS_AS(DeltaSet::from_parts({1, 1}, {{}, {{0}}}), InvalidArgumentError);
}

TEST_CASE("spheres from iterated joins", "[dset]") {
    REQUIRE(sphere(-1).is_empty());
    REQUIRE(sphere(0) == discrete(2));
    REQUIRE(sphere(1).counts() == std::vector<std::size_t>{4, 4});
    REQUIRE(sphere(2).counts() == std::vector<std::size_t>{6, 12, 8});
    REQUIRE(euler_characteristic(sphere(2)) == 2);
    REQUIRE(validate(sphere(3)).ok);
    REQUIRE_THROWS_AS(sphere(-2), InvalidArgumentError);
}

TEST_CASE("join of points is an interval", "[dset][join]") {
    DeltaSet interval = join(point(), point());
    REQUIRE(interval.counts() == std::vector<std::size_t>{2, 1});
    // d_0 hits the B vertex, d_1 the A vertex
    REQUIRE(interval.face(1, 0, 0) == 1);
    REQUIRE(interval.face(1, 1, 0) == 0);
}

TEST_CASE("join counts", "[dset][join]") {
    REQUIRE(join(discrete(2), discrete(2)).counts() == std::vector<std::size_t>{4, 4});
    for (std::size_t m : {1, 2, 3, 4}) {
        DeltaSet j = join(polygon_circle(m), polygon_circle(m));
        REQUIRE(j.counts() ==
                std::vector<std::size_t>{2 * m, 2 * m + m * m, 2 * m * m, m * m});
        REQUIRE(validate(j).ok);
    }
}

TEST_CASE("join total-count identity", "[dset][join][property]") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 25; ++i) {
        DeltaSet a = checkdetail::random_space(rng);
        DeltaSet b = checkdetail::random_space(rng);
        DeltaSet j = join(a, b);
        REQUIRE(j.total() + 1 == (a.total() + 1) * (b.total() + 1));
        REQUIRE(validate(j).ok);
    }
}

TEST_CASE("join unit, commutativity and associativity", "[dset][join][property]") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10; ++i) {
        DeltaSet a = checkdetail::random_space(rng);
        DeltaSet b = checkdetail::random_space(rng);

        REQUIRE(join(DeltaSet::empty(), a) == a);
        REQUIRE(join(a, DeltaSet::empty()) == a);
        REQUIRE(f_vector(join(a, b)) == f_vector(join(b, a)));
    }
    // associativity: equal f-vectors and homology
    std::vector<DeltaSet> pool = {point(), discrete(3), polygon_circle(3), sphere(1)};
    for (const DeltaSet& a : pool)
        for (const DeltaSet& b : pool)
            for (const DeltaSet& c : pool) {
                DeltaSet left = join(join(a, b), c);
                DeltaSet right = join(a, join(b, c));
                REQUIRE(f_vector(left) == f_vector(right));
                REQUIRE(all_homology(left) == all_homology(right));
            }
}

TEST_CASE("Euler characteristic of a join", "[dset][join][property]") {
    std::vector<DeltaSet> pool = {DeltaSet::empty(), point(),         discrete(2),
                                  discrete(3),       polygon_circle(3), sphere(1),
                                  sphere(2)};
    for (const DeltaSet& a : pool)
        for (const DeltaSet& b : pool) {
            long long ca = euler_characteristic(a), cb = euler_characteristic(b);
            REQUIRE(euler_characteristic(join(a, b)) == ca + cb - ca * cb);
        }
}

TEST_CASE("disjoint union", "[dset]") {
    REQUIRE(disjoint_union(point(), point()) == discrete(2));
    DeltaSet two_circles = disjoint_union(polygon_circle(3), polygon_circle(3));
    REQUIRE(two_circles.counts() == std::vector<std::size_t>{6, 6});
    REQUIRE(validate(two_circles).ok);
    REQUIRE(all_homology(two_circles) ==
            topotest::groups({free_part(2), free_part(2)}));

    DeltaSet a = sphere(1);
    REQUIRE(disjoint_union(DeltaSet::empty(), a) == a);
    REQUIRE(disjoint_union(a, DeltaSet::empty()) == a);
}

TEST_CASE("connected components", "[dset]") {
    REQUIRE(connected_components(discrete(5)) == 5);
    REQUIRE(connected_components(join(discrete(3), discrete(3))) == 1);
    REQUIRE(connected_components(DeltaSet::empty()) == 0);
    REQUIRE(connected_components(disjoint_union(sphere(1), point())) == 2);
}

TEST_CASE("simplex budget guards joins", "[dset]") {
    std::size_t saved = simplex_budget();
    simplex_budget() = 100;
    REQUIRE_THROWS_AS(join(sphere(2), sphere(2)), BudgetExceededError);
    simplex_budget() = saved;
}

TEST_CASE("labels are carried but never load-bearing", "[dset]") {
    DeltaSet d = DeltaSet::from_parts({2}, {{}}, {{"left", "right"}});
    REQUIRE(d.label(0, 1) == "right");
    REQUIRE(d.label(0, 0) == "left");
    REQUIRE(d == discrete(2));  // equality ignores labels
}

TEST_CASE("delta maps validate against face maps", "[dset][map]") {
    DeltaSet c3 = polygon_circle(3);
    DeltaMap id = identity_map(c3);
    REQUIRE(validate_map(id).ok);
    REQUIRE(id.is_automorphism());

    // rotating vertices without rotating edges breaks commutation
    std::vector<std::vector<std::size_t>> comp{{1, 2, 0}, {0, 1, 2}};
    bool eager = eager_validation();
    eager_validation() = false;
    DeltaMap broken(c3, c3, comp);
    eager_validation() = eager;
    REQUIRE_FALSE(validate_map(broken).ok);
}
