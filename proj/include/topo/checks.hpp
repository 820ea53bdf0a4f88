/**
 * The named verification battery: every quantitative claim the engine
 * reproduces, one named check per claim.  Shared by `topo check` and by
 * the acceptance test binary.
 *
 * The Smith-normal-form oracle in here (determinant divisors via minor
 * gcds) exists purely for verification and is never used by any
 * computation path.
 */

#ifndef TOPO_CHECKS_HPP
#define TOPO_CHECKS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "topo/chain_complex.hpp"
#include "topo/delta_set.hpp"
#include "topo/expression.hpp"
#include "topo/finite_group.hpp"
#include "topo/group_action.hpp"
#include "topo/spaces.hpp"

namespace topo {

struct CheckOptions {
    std::optional<std::size_t> m;
    std::optional<std::size_t> n;
    std::uint64_t seed = 20240101;
};

struct CheckOutcome {
    bool pass = true;
    std::string detail;  // first failure, or a short summary of what ran
};

struct Check {
    std::string name;
    std::string summary;
    std::function<CheckOutcome(const CheckOptions&)> run;
};

namespace checkdetail {

class Recorder {
public:
    void fail(const std::string& what) {
        ++failures_;
        if (first_.empty()) first_ = what;
    }
    void require(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
    CheckOutcome outcome(const std::string& summary) const {
        if (failures_ == 0) return {true, summary};
        std::string detail = first_;
        if (failures_ > 1) detail += " (+" + std::to_string(failures_ - 1) + " more)";
        return {false, detail};
    }

private:
    std::size_t failures_ = 0;
    std::string first_;
};

inline std::string homology_to_string(const std::vector<HomologyGroup>& h) {
    std::string s = "(";
    for (std::size_t k = 0; k < h.size(); ++k) s += (k ? ", " : "") + h[k].to_string();
    return s + ")";
}

inline bool same_homology(const std::vector<HomologyGroup>& a,
                          const std::vector<HomologyGroup>& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        HomologyGroup ga = k < a.size() ? a[k] : HomologyGroup{};
        HomologyGroup gb = k < b.size() ? b[k] : HomologyGroup{};
        if (ga != gb) return false;
    }
    return true;
}

/// Z in one degree, trivial elsewhere (reduced homology of a sphere).
inline bool is_reduced_sphere(const std::vector<HomologyGroup>& h, int degree) {
    for (std::size_t k = 0; k < h.size(); ++k) {
        const bool at_degree = static_cast<int>(k) == degree;
        if (at_degree && (h[k].betti != 1 || !h[k].torsion.empty())) return false;
        if (!at_degree && !h[k].is_trivial()) return false;
    }
    return degree < static_cast<int>(h.size());
}

/// The alternating 0 / *m chain with one generator in degrees 0..top.
inline ChainComplex alternating_chain(std::size_t m, std::size_t top) {
    std::vector<std::size_t> ranks(top + 1, 1);
    std::vector<IntMatrix> boundaries(top + 1);
    boundaries[0] = IntMatrix(0, 1);
    for (std::size_t k = 1; k <= top; ++k) {
        IntMatrix b(1, 1);
        if (k % 2 == 0) b.set(0, 0, Integer(m));
        boundaries[k] = std::move(b);
    }
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

/// The classical two-triangle torus as a Delta-set: one vertex, edges
/// a, b, c, triangles U = (b, c, a) and L = (a, c, b).
inline DeltaSet classical_torus() {
    DeltaSet::FaceTables faces(3);
    faces[1] = {{0, 0, 0}, {0, 0, 0}};
    faces[2] = {{1, 0}, {2, 2}, {0, 1}};
    return DeltaSet::from_parts({1, 3, 2}, std::move(faces));
}

// ---------------------------------------------------------------- //
//  Smith normal form oracle: determinant divisors                  //
// ---------------------------------------------------------------- //

inline Integer det_recursive(const std::vector<std::vector<Integer>>& a,
                             std::vector<std::size_t> rows,
                             const std::vector<std::size_t>& cols, std::size_t col_at) {
    if (rows.empty()) return Integer(1);
    Integer det(0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Integer& v = a[rows[i]][cols[col_at]];
        if (v != 0) {
            std::vector<std::size_t> rest;
            rest.reserve(rows.size() - 1);
            for (std::size_t k = 0; k < rows.size(); ++k)
                if (k != i) rest.push_back(rows[k]);
            Integer minor = det_recursive(a, std::move(rest), cols, col_at + 1);
            if (i % 2 == 0)
                det += v * minor;
            else
                det -= v * minor;
        }
    }
    return det;
}

inline void combinations(std::size_t n, std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> pick(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                            std::size_t depth) {
        if (depth == k) {
            visit(pick);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

/**
 * Brute-force invariant factors: d_1 ... d_k equals the gcd of all
 * k x k minors, so d_k = g_k / g_{k-1}.  Only sensible for small
 * matrices (all minors are enumerated).
 */
inline SmithResult snf_minor_oracle(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols, Integer(0)));
    for (const auto& [pos, val] : m.entries()) a[pos.first][pos.second] = val;

    const std::size_t kmax = std::min(rows, cols);
    std::vector<Integer> gcds;  // gcds[k-1] = gcd of all k x k minors
    for (std::size_t k = 1; k <= kmax; ++k) {
        Integer g(0);
        combinations(rows, k, [&](const std::vector<std::size_t>& rsel) {
            combinations(cols, k, [&](const std::vector<std::size_t>& csel) {
                Integer d = det_recursive(a, rsel, csel, 0);
                g = boost::multiprecision::gcd(g, detail::abs_int(d));
            });
        });
        if (g == 0) break;
        gcds.push_back(g);
    }
    SmithResult out;
    Integer prev(1);
    for (const auto& g : gcds) {
        out.diagonal.push_back(g / prev);
        prev = g;
    }
    out.rank = out.diagonal.size();
    return out;
}

// ---------------------------------------------------------------- //
//  Random generators (seeded, used by the property batteries)      //
// ---------------------------------------------------------------- //

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, int max_abs) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-max_abs, max_abs);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, Integer(entry(rng)));
    return m;
}

/// Delta-set of a small random simplicial complex on <= 5 vertices.
inline DeltaSet random_small_complex(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> nv_dist(1, 5);
    std::bernoulli_distribution coin(0.5);
    const std::size_t nv = nv_dist(rng);

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j)
            if (coin(rng)) {
                edge_index[{i, j}] = edges.size();
                edges.emplace_back(i, j);
            }

    std::vector<std::array<std::size_t, 3>> triangles;
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j)
            for (std::size_t k = j + 1; k < nv; ++k)
                if (edge_index.count({i, j}) && edge_index.count({i, k}) &&
                    edge_index.count({j, k}) && coin(rng))
                    triangles.push_back({i, j, k});

    std::vector<std::size_t> counts{nv, edges.size()};
    DeltaSet::FaceTables faces(2);
    faces[1].assign(2, std::vector<std::size_t>(edges.size()));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        faces[1][0][e] = edges[e].second;  // d_0 drops the first vertex
        faces[1][1][e] = edges[e].first;
    }
    if (!triangles.empty()) {
        counts.push_back(triangles.size());
        faces.resize(3);
        faces[2].assign(3, std::vector<std::size_t>(triangles.size()));
        for (std::size_t t = 0; t < triangles.size(); ++t) {
            auto [i, j, k] = triangles[t];
            faces[2][0][t] = edge_index[{j, k}];
            faces[2][1][t] = edge_index[{i, k}];
            faces[2][2][t] = edge_index[{i, j}];
        }
    }
    return DeltaSet::from_parts(std::move(counts), std::move(faces));
}

/// Mixed bag of small spaces for the connectivity battery.
inline DeltaSet random_space(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 7);
    switch (pick(rng)) {
        case 0: return DeltaSet::empty();
        case 1: return point();
        case 2: return discrete(std::uniform_int_distribution<std::size_t>(2, 4)(rng));
        case 3: return polygon_circle(std::uniform_int_distribution<std::size_t>(1, 5)(rng));
        case 4: return sphere(std::uniform_int_distribution<int>(0, 2)(rng));
        case 5: return join(point(), random_small_complex(rng));
        default: return random_small_complex(rng);
    }
}

inline int saturating_conn_sum(int a, int b) {
    if (a == kInfiniteConnectivity || b == kInfiniteConnectivity)
        return kInfiniteConnectivity;
    return a + b + 2;
}

// ---------------------------------------------------------------- //
//  The individual checks                                           //
// ---------------------------------------------------------------- //

inline CheckOutcome check_sphere_join(const CheckOptions&) {
    Recorder rec;
    int pairs = 0;
    for (int m = 0; m + 1 <= 6; ++m) {
        for (int n = 0; m + n + 1 <= 6; ++n) {
            DeltaSet j = join(sphere(m), sphere(n));
            auto h = all_homology(j, -1, /*reduced=*/true);
            rec.require(is_reduced_sphere(h, m + n + 1),
                        "join(sphere " + std::to_string(m) + ", sphere " + std::to_string(n) +
                            ") has reduced homology " + homology_to_string(h) +
                            ", expected S^" + std::to_string(m + n + 1));
            ++pairs;
        }
    }
    return rec.outcome(std::to_string(pairs) + " sphere pairs");
}

inline CheckOutcome check_lens_vs_minimal(const CheckOptions& opt) {
    Recorder rec;
    std::vector<std::size_t> ms = opt.m ? std::vector<std::size_t>{*opt.m}
                                        : std::vector<std::size_t>{2, 3, 4, 5, 6};
    std::vector<std::size_t> ns = opt.n ? std::vector<std::size_t>{*opt.n}
                                        : std::vector<std::size_t>{1, 2, 3};
    int cases = 0;
    for (std::size_t m : ms) {
        for (std::size_t n : ns) {
            LensParams params(m, std::vector<long long>(n, 1));
            auto lens = all_homology(lens_space(params).first);
            auto minimal = all_homology_of_complex(lens_minimal_chain(m, n));
            rec.require(same_homology(lens, minimal),
                        "lens(m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                            ") gives " + homology_to_string(lens) + ", minimal chain gives " +
                            homology_to_string(minimal));
            ++cases;
        }
    }
    return rec.outcome(std::to_string(cases) + " (m, n) pairs");
}

inline CheckOutcome check_lens_parameters(const CheckOptions&) {
    Recorder rec;
    auto h11 = all_homology(lens_space(LensParams(5, {1, 1})).first);
    auto h12 = all_homology(lens_space(LensParams(5, {1, 2})).first);
    auto h23 = all_homology(lens_space(LensParams(5, {2, 3})).first);
    rec.require(same_homology(h11, h12), "L(5;1,2) differs from L(5;1,1): " +
                                             homology_to_string(h12) + " vs " +
                                             homology_to_string(h11));
    rec.require(same_homology(h11, h23), "L(5;2,3) differs from L(5;1,1): " +
                                             homology_to_string(h23) + " vs " +
                                             homology_to_string(h11));
    return rec.outcome("3 parameter choices at m=5");
}

inline CheckOutcome check_cyclic_homology(const CheckOptions& opt) {
    Recorder rec;
    std::vector<std::size_t> ms = opt.m ? std::vector<std::size_t>{*opt.m}
                                        : std::vector<std::size_t>{2, 3, 4, 5};
    for (std::size_t m : ms) {
        auto h = all_homology(milnor_base(cyclic(m), 5).first, 4);
        std::vector<HomologyGroup> expected(5);
        expected[0].betti = 1;
        expected[1].torsion = {Integer(m)};
        expected[3].torsion = {Integer(m)};
        rec.require(same_homology(h, expected),
                    "H_*(B_5 Z_" + std::to_string(m) + ") = " + homology_to_string(h) +
                        ", expected " + homology_to_string(expected));
    }
    return rec.outcome(std::to_string(ms.size()) + " moduli through degree 4");
}

inline CheckOutcome check_wedge_lemma(const CheckOptions& opt) {
    Recorder rec;
    std::vector<std::size_t> ms = opt.m ? std::vector<std::size_t>{*opt.m}
                                        : std::vector<std::size_t>{2, 3, 4};
    int cases = 0;
    for (std::size_t m : ms) {
        for (std::size_t n = 0; n <= 4; ++n) {
            DeltaSet total = milnor_total(cyclic(m), n).space();
            auto h = all_homology(total, -1, /*reduced=*/true);
            std::size_t expected_rank = 1;
            for (std::size_t i = 0; i <= n; ++i) expected_rank *= (m - 1);
            bool ok = true;
            for (std::size_t k = 0; k < h.size(); ++k) {
                if (static_cast<std::size_t>(k) == n)
                    ok = ok && h[k].betti == expected_rank && h[k].torsion.empty();
                else
                    ok = ok && h[k].is_trivial();
            }
            rec.require(ok, "Z_" + std::to_string(m) + " join^" + std::to_string(n + 1) +
                                " has reduced homology " + homology_to_string(h) +
                                ", expected rank " + std::to_string(expected_rank) +
                                " in degree " + std::to_string(n));
            ++cases;
        }
    }
    return rec.outcome(std::to_string(cases) + " wedge instances");
}

inline CheckOutcome check_rp_tower(const CheckOptions&) {
    Recorder rec;
    for (std::size_t n = 0; n <= 5; ++n) {
        auto rp = all_homology(real_projective(n).first);
        auto oracle = all_homology_of_complex(alternating_chain(2, n));
        rec.require(same_homology(rp, oracle),
                    "RP^" + std::to_string(n) + " = " + homology_to_string(rp) +
                        ", classical chain gives " + homology_to_string(oracle));
    }
    return rec.outcome("RP^0..RP^5 against the classical chain");
}

inline CheckOutcome check_r_is_torus(const CheckOptions& opt) {
    Recorder rec;
    std::vector<std::size_t> ms = opt.m ? std::vector<std::size_t>{*opt.m}
                                        : std::vector<std::size_t>{3, 4, 5, 6, 7};
    auto reference = all_homology(classical_torus());
    std::vector<HomologyGroup> expected(3);
    expected[0].betti = 1;
    expected[1].betti = 2;
    expected[2].betti = 1;
    rec.require(same_homology(reference, expected),
                "two-triangle torus gives " + homology_to_string(reference));
    for (std::size_t m : ms) {
        GroupAction rot = rotation_action(m, 1);
        DeltaSet r = mapping_torus(polygon_circle(m), rot.as_map(1 % m));
        auto h = all_homology(r);
        rec.require(same_homology(h, reference),
                    "mapping torus over the " + std::to_string(m) + "-gon gives " +
                        homology_to_string(h) + ", torus reference is " +
                        homology_to_string(reference));
    }
    return rec.outcome(std::to_string(ms.size()) + " polygon sizes");
}

inline CheckOutcome check_dihedral_h1(const CheckOptions& opt) {
    Recorder rec;
    std::vector<std::size_t> ms = opt.m ? std::vector<std::size_t>{*opt.m}
                                        : std::vector<std::size_t>{3, 4, 5, 6};
    for (std::size_t m : ms) {
        HomologyGroup h1 = homology(milnor_base(dihedral(m), 3).first, 1);
        std::vector<Integer> ab = abelianization(dihedral(m));
        std::vector<Integer> expected =
            (m % 2 == 1) ? std::vector<Integer>{Integer(2)}
                         : std::vector<Integer>{Integer(2), Integer(2)};
        rec.require(h1.betti == 0 && h1.torsion == ab && ab == expected,
                    "D_" + std::to_string(m) + ": H_1 = " + h1.to_string() +
                        ", abelianization has " + std::to_string(ab.size()) + " factors");
    }
    return rec.outcome(std::to_string(ms.size()) + " dihedral groups");
}

inline CheckOutcome check_covering_invariants(const CheckOptions&) {
    Recorder rec;
    std::vector<std::pair<std::string, GroupAction>> actions;
    actions.emplace_back("rotation(5,2)", rotation_action(5, 2));
    actions.emplace_back("rotation(7,3)", rotation_action(7, 3));
    for (std::size_t m : {2, 3, 4, 5})
        actions.emplace_back("translation(Z_" + std::to_string(m) + ")",
                             translation_action(cyclic(m)));
    actions.emplace_back("translation(D_3)", translation_action(dihedral(3)));
    actions.emplace_back("translation(Z_2 x Z_2)",
                         translation_action(direct_product(cyclic(2), cyclic(2))));
    for (std::size_t m : {2, 3, 5})
        actions.emplace_back(
            "lens action m=" + std::to_string(m),
            join_actions(rotation_action(m, 1), rotation_action(m, 1)));
    for (std::size_t m : {2, 3, 4})
        actions.emplace_back("milnor total Z_" + std::to_string(m),
                             milnor_total(cyclic(m), 2));
    actions.emplace_back("milnor total D_3", milnor_total(dihedral(3), 1));

    for (const auto& [name, action] : actions) {
        if (!is_free(action)) {
            rec.fail(name + " is unexpectedly not free");
            continue;
        }
        const std::size_t order = action.group().order();
        auto [base, projection] = quotient(action);
        rec.require(validate(base).ok, name + ": quotient fails validation");
        rec.require(validate_map(projection).ok, name + ": projection is not simplicial");
        for (int k = 0; k <= action.space().dimension(); ++k) {
            rec.require(action.space().count(k) == order * base.count(k),
                        name + ": count multiplicativity fails in dimension " +
                            std::to_string(k));
            std::vector<std::size_t> preimages(base.count(k), 0);
            for (std::size_t s = 0; s < action.space().count(k); ++s)
                ++preimages[projection.apply(k, s)];
            for (std::size_t o = 0; o < base.count(k); ++o)
                rec.require(preimages[o] == order,
                            name + ": fiber over (" + std::to_string(k) + ", " +
                                std::to_string(o) + ") has " +
                                std::to_string(preimages[o]) + " simplices, expected " +
                                std::to_string(order));
        }
        rec.require(euler_characteristic(action.space()) ==
                        static_cast<long long>(order) * euler_characteristic(base),
                    name + ": Euler characteristic is not multiplicative");
    }
    return rec.outcome(std::to_string(actions.size()) + " free actions");
}

inline CheckOutcome check_connectivity_growth(const CheckOptions& opt) {
    Recorder rec;
    std::mt19937_64 rng(opt.seed);
    const int rounds = 40;
    for (int i = 0; i < rounds; ++i) {
        DeltaSet a = random_space(rng);
        DeltaSet b = random_space(rng);
        int ca = homological_connectivity(a);
        int cb = homological_connectivity(b);
        int cj = homological_connectivity(join(a, b));
        int bound = saturating_conn_sum(ca, cb);
        rec.require(cj >= bound, "join of spaces with connectivity " + std::to_string(ca) +
                                     " and " + std::to_string(cb) + " has connectivity " +
                                     std::to_string(cj) + " < " + std::to_string(bound));
    }
    return rec.outcome(std::to_string(rounds) + " random joins");
}

inline CheckOutcome check_snf_oracle(const CheckOptions& opt) {
    Recorder rec;
    std::size_t cases = 0;
    auto compare = [&](const IntMatrix& m, const std::string& origin) {
        SmithResult expected = snf_minor_oracle(m);
        SmithResult dense = smith_normal_form(m);
        rec.require(dense.diagonal == expected.diagonal && dense.rank == expected.rank,
                    origin + ": smith_normal_form disagrees with the minor-gcd oracle");
        // same input through the sparse elimination
        std::size_t saved = smith_dense_threshold();
        smith_dense_threshold() = 0;
        SmithResult sparse = smith_normal_form(m);
        smith_dense_threshold() = saved;
        rec.require(sparse.diagonal == expected.diagonal && sparse.rank == expected.rank,
                    origin + ": sparse elimination disagrees with the minor-gcd oracle");
        ++cases;
    };

    // exhaustive over every shape with at most 6 entries, values in [-3, 3]
    for (std::size_t rows = 1; rows <= 4; ++rows) {
        for (std::size_t cols = 1; cols <= 4; ++cols) {
            const std::size_t cells = rows * cols;
            if (cells > 6) continue;
            std::vector<int> v(cells, -3);
            for (;;) {
                IntMatrix m(rows, cols);
                for (std::size_t i = 0; i < cells; ++i)
                    m.set(i / cols, i % cols, Integer(v[i]));
                compare(m, std::to_string(rows) + "x" + std::to_string(cols) + " exhaustive");
                std::size_t i = 0;
                while (i < cells && v[i] == 3) v[i++] = -3;
                if (i == cells) break;
                ++v[i];
            }
        }
    }

    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < 500; ++i) compare(random_matrix(rng, 4, 3), "random 4x4");
    for (int i = 0; i < 500; ++i) compare(random_matrix(rng, 6, 9), "random 6x6");

    return rec.outcome(std::to_string(cases) + " matrices against the minor-gcd oracle");
}

} // namespace checkdetail

/// The full battery, in a fixed order.
inline const std::vector<Check>& paper_checks() {
    static const std::vector<Check> checks = {
        {"sphere-join", "join of spheres is a sphere: S^m |><| S^n = S^{m+n+1}",
         checkdetail::check_sphere_join},
        {"lens-vs-minimal", "lens-space homology equals the minimal chain complex",
         checkdetail::check_lens_vs_minimal},
        {"lens-parameters", "lens homology is independent of coprime parameters",
         checkdetail::check_lens_parameters},
        {"cyclic-homology", "group homology of Z_m from the Milnor tower",
         checkdetail::check_cyclic_homology},
        {"wedge-lemma", "G^{join n} is a wedge of (|G|-1)^n spheres for cyclic G",
         checkdetail::check_wedge_lemma},
        {"rp-tower", "real projective spaces against the classical chain",
         checkdetail::check_rp_tower},
        {"r-is-torus", "rotation mapping torus has torus homology",
         checkdetail::check_r_is_torus},
        {"dihedral-h1", "H_1 of the dihedral classifying space is the abelianization",
         checkdetail::check_dihedral_h1},
        {"covering-invariants", "quotients of free actions are |G|-fold coverings",
         checkdetail::check_covering_invariants},
        {"connectivity-growth", "connectivity of a join grows by at least 2",
         checkdetail::check_connectivity_growth},
        {"snf-oracle", "invariant factors against the determinant-divisor oracle",
         checkdetail::check_snf_oracle},
    };
    return checks;
}

/// Checks whose name contains the filter (all of them for an empty filter).
inline std::vector<Check> paper_checks(const std::string& filter) {
    std::vector<Check> out;
    for (const Check& c : paper_checks())
        if (filter.empty() || c.name.find(filter) != std::string::npos) out.push_back(c);
    return out;
}

} // namespace topo

#endif // TOPO_CHECKS_HPP
