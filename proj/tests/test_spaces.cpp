#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace topo;
using topotest::free_part;
using topotest::groups;
using topotest::torsion_part;

TEST_CASE("lens spaces against the minimal chain", "[spaces][lens]") {
    auto [rp3, projection] = lens_space(LensParams(2, {1, 1}));
    auto h = all_homology(rp3);
    REQUIRE(h == groups({free_part(1), torsion_part({2}), {}, free_part(1)}));
    REQUIRE(h == all_homology_of_complex(lens_minimal_chain(2, 2)));
    REQUIRE(validate_map(projection).ok);

    REQUIRE(all_homology(lens_space(LensParams(5, {1, 1})).first) ==
            groups({free_part(1), torsion_part({5}), {}, free_part(1)}));
}

TEST_CASE("lens parameters must be units mod m", "[spaces][lens]") {
    try {
        lens_space(LensParams(6, {2, 1}));
        FAIL("expected NonPrimeParameterError");
    } catch (const NonPrimeParameterError& e) {
        REQUIRE(e.index() == 1);
        REQUIRE(e.gcd() == 2);
    }
    try {
        lens_space(LensParams(6, {1, 4}));
        FAIL("expected NonPrimeParameterError");
    } catch (const NonPrimeParameterError& e) {
        REQUIRE(e.index() == 2);
        REQUIRE(e.gcd() == 2);
    }
    // negative parameters reduce mod m first
    REQUIRE(all_homology(lens_space(LensParams(5, {-1, 1})).first) ==
            all_homology(lens_space(LensParams(5, {4, 1})).first));
    REQUIRE_THROWS_AS(LensParams(1, {1}), InvalidArgumentError);
    REQUIRE_THROWS_AS(LensParams(5, {}), InvalidArgumentError);
}

TEST_CASE("the minimal chain complex of a lens space", "[spaces][lens]") {
    REQUIRE(all_homology_of_complex(lens_minimal_chain(2, 1)) ==
            groups({free_part(1), free_part(1)}));
    REQUIRE(all_homology_of_complex(lens_minimal_chain(5, 2)) ==
            groups({free_part(1), torsion_part({5}), {}, free_part(1)}));
    REQUIRE(all_homology_of_complex(lens_minimal_chain(3, 3)) ==
            groups({free_part(1), torsion_part({3}), {}, torsion_part({3}), {},
                    free_part(1)}));
    REQUIRE(lens_minimal_chain(4, 3).ranks() == std::vector<std::size_t>(6, 1));
    REQUIRE_THROWS_AS(lens_minimal_chain(1, 2), InvalidArgumentError);
    REQUIRE_THROWS_AS(lens_minimal_chain(3, 0), InvalidArgumentError);
}

TEST_CASE("Milnor construction basics", "[spaces][milnor]") {
    GroupAction e0 = milnor_total(cyclic(3), 0);
    REQUIRE(e0.space() == discrete(3));
    REQUIRE(quotient(e0).first == point());

    auto [rp1, projection] = milnor_base(cyclic(2), 1);
    REQUIRE(rp1.counts() == std::vector<std::size_t>{2, 2});
    REQUIRE(all_homology(rp1) == groups({free_part(1), free_part(1)}));

    REQUIRE(real_projective(0).first == point());
}

TEST_CASE("real projective tower against the classical chain", "[spaces][milnor]") {
    for (std::size_t n = 0; n <= 3; ++n) {
        auto rp = all_homology(real_projective(n).first);
        auto oracle = all_homology_of_complex(checkdetail::alternating_chain(2, n));
        REQUIRE(rp == oracle);
    }
    // RP^2 spelled out
    REQUIRE(all_homology(real_projective(2).first) ==
            groups({free_part(1), torsion_part({2}), {}}));
}

TEST_CASE("Milnor total spaces are wedges of spheres", "[spaces][milnor]") {
    for (std::size_t m : {2, 3}) {
        for (std::size_t n : {1, 2}) {
            DeltaSet total = milnor_total(cyclic(m), n).space();
            auto h = all_homology(total, -1, /*reduced=*/true);
            std::size_t expected = 1;
            for (std::size_t i = 0; i <= n; ++i) expected *= (m - 1);
            for (std::size_t k = 0; k < h.size(); ++k) {
                if (k == n)
                    REQUIRE(h[k] == free_part(expected));
                else
                    REQUIRE(h[k].is_trivial());
            }
        }
    }
}

TEST_CASE("mapping torus of a point is the circle", "[spaces][torus]") {
    DeltaSet circle = mapping_torus(point(), identity_map(point()));
    REQUIRE(circle.counts() == std::vector<std::size_t>{1, 1});
    REQUIRE(all_homology(circle) == groups({free_part(1), free_part(1)}));
}

TEST_CASE("identity mapping tori have product homology", "[spaces][torus][property]") {
    std::vector<DeltaSet> bases = {point(), polygon_circle(3), sphere(2)};
    for (const DeltaSet& d : bases) {
        DeltaSet torus = mapping_torus(d, identity_map(d));
        REQUIRE(validate(torus).ok);
        REQUIRE(euler_characteristic(torus) == 0);
        REQUIRE(all_homology(torus) == topotest::kunneth_with_circle(all_homology(d)));
    }
}

TEST_CASE("rotation mapping torus is the torus", "[spaces][torus]") {
    GroupAction rot = rotation_action(3, 1);
    DeltaSet r = mapping_torus(polygon_circle(3), rot.as_map(1));
    REQUIRE(euler_characteristic(r) == 0);
    auto h = all_homology(r);
    REQUIRE(h == groups({free_part(1), free_part(2), free_part(1)}));
    REQUIRE(h == all_homology(checkdetail::classical_torus()));
}

TEST_CASE("mapping torus rejects non-automorphisms", "[spaces][torus]") {
    // collapse of two points onto one: simplicial but not bijective
    DeltaSet two = discrete(2);
    DeltaMap collapse(two, two, {{0, 0}});
    REQUIRE_THROWS_AS(mapping_torus(two, collapse), NotAutomorphismError);

    // automorphism of the wrong space
    REQUIRE_THROWS_AS(mapping_torus(discrete(3), identity_map(discrete(2))),
                      NotAutomorphismError);
}

TEST_CASE("cell count report compares the three models", "[spaces][report]") {
    CellCountReport r21 = cell_count_report(2, 1);
    REQUIRE(r21.minimal_ranks == std::vector<std::size_t>{1, 1});
    REQUIRE(r21.milnor_counts == std::vector<std::size_t>{2, 2});
    REQUIRE(r21.counts_monotone);
    REQUIRE(r21.wedge_rank_ok);

    CellCountReport r32 = cell_count_report(3, 2);
    REQUIRE(r32.expected_wedge_rank == 16);  // (3-1)^4
    REQUIRE(r32.milnor_top_reduced_betti == 16);
    REQUIRE(r32.wedge_rank_ok);
    REQUIRE(r32.counts_monotone);

    // all three models of B Z_2 in range 0..3 agree homologically
    CellCountReport r22 = cell_count_report(2, 2);
    REQUIRE(r22.counts_monotone);
    auto minimal = all_homology_of_complex(lens_minimal_chain(2, 2));
    auto lens = all_homology(lens_space(LensParams(2, {1, 1})).first);
    auto milnor = all_homology(milnor_base(cyclic(2), 3).first);
    REQUIRE(minimal == lens);
    REQUIRE(lens == milnor);
}

TEST_CASE("H_1 of a Milnor base is the abelianization", "[spaces][milnor][property]") {
    std::vector<FiniteGroup> pool = {cyclic(4), dihedral(3),
                                     direct_product(cyclic(2), cyclic(2)),
                                     direct_product(cyclic(2), cyclic(4))};
    for (const FiniteGroup& g : pool) {
        HomologyGroup h1 = homology(milnor_base(g, 2).first, 1);
        REQUIRE(h1.betti == 0);
        REQUIRE(h1.torsion == abelianization(g));
    }
}

TEST_CASE("homological stability of the Milnor tower", "[spaces][stability]") {
    REQUIRE(stability_check(cyclic(3), 1, 2, 4));
    REQUIRE(stability_check(cyclic(4), 0, 1, 3));
    REQUIRE(stability_check(dihedral(3), 1, 2, 3));
    REQUIRE_THROWS_AS(stability_check(cyclic(3), 2, 2, 3), PreconditionError);
}

TEST_CASE("space reports are internally consistent", "[spaces][report]") {
    SpaceReport r = space_report("sphere 2", "sphere 2", sphere(2));
    REQUIRE(r.f_vector == std::vector<std::size_t>{6, 12, 8});
    REQUIRE(r.euler == 2);
    REQUIRE(r.connectivity == 1);
    REQUIRE(r.homology == groups({free_part(1), {}, free_part(1)}));
}
