#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace topo;
using topotest::free_part;
using topotest::groups;
using topotest::torsion_part;

TEST_CASE("boundary matrices", "[homology]") {
    // the two faces of the single edge cancel
    IntMatrix loop = boundary_matrix(polygon_circle(1), 1);
    REQUIRE(loop.rows() == 1);
    REQUIRE(loop.cols() == 1);
    REQUIRE(loop.is_zero());

    IntMatrix triangle = boundary_matrix(polygon_circle(3), 1);
    for (std::size_t j = 0; j < 3; ++j) {
        REQUIRE(triangle.get((j + 1) % 3, j) == 1);
        REQUIRE(triangle.get(j, j) == -1);
    }

    // degrees above the dimension give empty matrices
    REQUIRE(boundary_matrix(polygon_circle(3), 2).cols() == 0);
}

TEST_CASE("boundary composition vanishes", "[homology][property]") {
    std::mt19937_64 rng(31);
    std::vector<DeltaSet> pool = {sphere(2), sphere(3),
                                  join(polygon_circle(3), discrete(2))};
    for (int i = 0; i < 8; ++i) pool.push_back(checkdetail::random_space(rng));
    for (const DeltaSet& d : pool)
        REQUIRE_NOTHROW(chain_complex(d).ensure_valid("test"));
}

TEST_CASE("homology of spheres and points", "[homology]") {
    REQUIRE(all_homology(point()) == groups({free_part(1)}));
    REQUIRE(homology(point(), 3).is_trivial());

    for (int n = 1; n <= 4; ++n) {
        auto h = all_homology(sphere(n));
        for (int k = 0; k <= n; ++k) {
            bool end = k == 0 || k == n;
            REQUIRE(h[static_cast<std::size_t>(k)] ==
                    (end ? free_part(1) : HomologyGroup{}));
        }
    }
    REQUIRE(all_homology(sphere(3), -1, /*reduced=*/true) ==
            groups({{}, {}, {}, free_part(1)}));

    REQUIRE(all_homology(polygon_circle(1)) == groups({free_part(1), free_part(1)}));
    REQUIRE(all_homology(polygon_circle(3)) == groups({free_part(1), free_part(1)}));
    REQUIRE(all_homology(join(polygon_circle(4), polygon_circle(4))) ==
            groups({free_part(1), {}, {}, free_part(1)}));
}

TEST_CASE("homology of explicit chain complexes", "[homology]") {
    // 0 <- Z <-(m)- Z : multiplication by m
    for (std::size_t m : {2, 5}) {
        IntMatrix mu(1, 1);
        mu.set(0, 0, Integer(m));
        ChainComplex c({1, 1}, {IntMatrix(0, 1), mu});
        REQUIRE(homology_of_complex(c, 0) == torsion_part({static_cast<long long>(m)}));
        REQUIRE(homology_of_complex(c, 1).is_trivial());
    }

    // all-zero boundaries: homology is the free chain groups
    ChainComplex zero({2, 3, 1}, {IntMatrix(0, 2), IntMatrix(2, 3), IntMatrix(3, 1)});
    REQUIRE(all_homology_of_complex(zero) ==
            groups({free_part(2), free_part(3), free_part(1)}));

    REQUIRE(all_homology_of_complex(lens_minimal_chain(5, 2)) ==
            groups({free_part(1), torsion_part({5}), {}, free_part(1)}));

    // composition del.del != 0 is rejected
    IntMatrix one(1, 1);
    one.set(0, 0, Integer(1));
    REQUIRE_THROWS_AS(ChainComplex({1, 1, 1}, {IntMatrix(0, 1), one, one}),
                      ValidationError);
}

TEST_CASE("homology of the empty set and out-of-range degrees", "[homology]") {
    REQUIRE(homology(DeltaSet::empty(), 0).is_trivial());
    REQUIRE(all_homology(DeltaSet::empty()).empty());
    REQUIRE(homology(sphere(2), 9).is_trivial());
}

TEST_CASE("cohomology by universal coefficients", "[homology]") {
    REQUIRE(cohomology(point(), 0) == free_part(1));
    REQUIRE(cohomology(point(), 1).is_trivial());
    REQUIRE(cohomology(point(), 5).is_trivial());

    for (int n = 1; n <= 3; ++n) REQUIRE(cohomology(sphere(n), n) == free_part(1));

    DeltaSet lens = lens_space(LensParams(5, {1, 1})).first;
    REQUIRE(cohomology(lens, 2) == torsion_part({5}));
    REQUIRE(cohomology(lens, 1) == HomologyGroup{});
}

TEST_CASE("homological connectivity", "[homology]") {
    REQUIRE(homological_connectivity(DeltaSet::empty()) == -2);
    REQUIRE(homological_connectivity(discrete(2)) == -1);
    REQUIRE(homological_connectivity(disjoint_union(sphere(1), sphere(1))) == -1);
    REQUIRE(homological_connectivity(join(discrete(2), discrete(2))) == 0);
    for (int n = 0; n <= 3; ++n)
        REQUIRE(homological_connectivity(sphere(n)) == n - 1);
    // cones have trivial reduced homology through the top dimension
    REQUIRE(homological_connectivity(point()) == kInfiniteConnectivity);
    REQUIRE(homological_connectivity(join(point(), sphere(1))) == kInfiniteConnectivity);
}

TEST_CASE("Euler characteristic equals the alternating betti sum", "[homology][property]") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 12; ++i) {
        DeltaSet d = checkdetail::random_space(rng);
        if (d.is_empty()) continue;
        auto h = all_homology(d);
        long long betti_sum = 0;
        for (std::size_t k = 0; k < h.size(); ++k)
            betti_sum += (k % 2 == 0) ? static_cast<long long>(h[k].betti)
                                      : -static_cast<long long>(h[k].betti);
        REQUIRE(betti_sum == euler_characteristic(d));
    }
}

TEST_CASE("homology is invariant under simplex re-indexing", "[homology][property]") {
    std::mt19937_64 rng(59);
    std::vector<DeltaSet> pool = {sphere(2), lens_space(LensParams(3, {1, 1})).first,
                                  join(polygon_circle(3), discrete(3))};
    for (int i = 0; i < 5; ++i) pool.push_back(checkdetail::random_small_complex(rng));
    for (const DeltaSet& d : pool) {
        DeltaSet shuffled = topotest::permuted_copy(d, rng);
        REQUIRE(f_vector(shuffled) == f_vector(d));
        REQUIRE(all_homology(shuffled) == all_homology(d));
    }
}

TEST_CASE("reduced homology shifts only degree zero", "[homology]") {
    DeltaSet two_points = discrete(2);
    REQUIRE(all_homology(two_points) == groups({free_part(2)}));
    REQUIRE(all_homology(two_points, -1, /*reduced=*/true) == groups({free_part(1)}));
    REQUIRE(homology(two_points, 0, /*reduced=*/true) == free_part(1));
}
