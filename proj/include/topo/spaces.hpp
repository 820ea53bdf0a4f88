/**
 * Named spaces assembled from the lower layers: lens spaces and their
 * minimal chain complex, Milnor approximations of classifying spaces,
 * real projective spaces, mapping tori, and comparison reports.
 */

#ifndef TOPO_SPACES_HPP
#define TOPO_SPACES_HPP

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "topo/chain_complex.hpp"
#include "topo/delta_set.hpp"
#include "topo/finite_group.hpp"
#include "topo/group_action.hpp"

namespace topo {

/**
 * Parameters of a lens space: modulus m >= 2 and rotation parameters
 * l_1..l_n, stored reduced mod m.
 */
struct LensParams {
    std::size_t m = 2;
    std::vector<std::size_t> ls;

    LensParams(std::size_t modulus, std::vector<long long> params) : m(modulus) {
        if (m < 2) throw InvalidArgumentError("lens space modulus must be >= 2");
        if (params.empty())
            throw InvalidArgumentError("lens space needs at least one rotation parameter");
        for (long long l : params) {
            long long r = l % static_cast<long long>(m);
            if (r < 0) r += static_cast<long long>(m);
            ls.push_back(static_cast<std::size_t>(r));
        }
    }
};

/**
 * The lens space L(l_1, ..., l_n) mod m: the quotient of the free Z_m
 * action on S^{2n-1} built as the n-fold join of rotation actions on
 * the m-gon circle, one rotation by l_i per factor.  The second
 * component is the covering projection from the join.
 *
 * Parameters with gcd(l_i, m) > 1 do not give a free action and are
 * rejected with NonPrimeParameter (1-based index).
 */
inline std::pair<DeltaSet, DeltaMap> lens_space(const LensParams& p) {
    for (std::size_t i = 0; i < p.ls.size(); ++i) {
        std::size_t g = std::gcd(p.ls[i], p.m);
        if (g != 1)
            throw NonPrimeParameterError(
                i + 1, static_cast<long long>(g),
                "lens parameter l_" + std::to_string(i + 1) + " = " +
                    std::to_string(p.ls[i]) + " has gcd " + std::to_string(g) +
                    " with modulus " + std::to_string(p.m));
    }
    GroupAction action = rotation_action(p.m, p.ls[0]);
    for (std::size_t i = 1; i < p.ls.size(); ++i)
        action = join_actions(action, rotation_action(p.m, p.ls[i]));
    return quotient(action);
}

/**
 * The minimal chain complex of a lens space: one generator in every
 * degree 0..2n-1, with boundaries alternating 0 (odd degrees) and
 * multiplication by m (even degrees).  Its homology is
 * Z, Z_m, 0, Z_m, ..., 0, Z.
 */
inline ChainComplex lens_minimal_chain(std::size_t m, std::size_t n) {
    if (m < 2) throw InvalidArgumentError("lens_minimal_chain needs m >= 2");
    if (n < 1) throw InvalidArgumentError("lens_minimal_chain needs n >= 1");
    const std::size_t top = 2 * n - 1;
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

/**
 * Milnor total space E_n G = G^{join (n+1)} with the diagonal
 * translation action; always free.
 */
inline GroupAction milnor_total(const FiniteGroup& g, std::size_t n) {
    GroupAction action = translation_action(g);
    for (std::size_t i = 0; i < n; ++i)
        action = join_actions(action, translation_action(g));
    return action;
}

/**
 * Milnor base B_n G = E_n G / G with its covering projection; a finite
 * approximation of the classifying space of G (homology agrees with the
 * group homology of G through degree n-1).
 */
inline std::pair<DeltaSet, DeltaMap> milnor_base(const FiniteGroup& g, std::size_t n) {
    return quotient(milnor_total(g, n));
}

/// Real projective space RP^n = B_n Z_2 (quotient of S^n by the antipode).
inline std::pair<DeltaSet, DeltaMap> real_projective(std::size_t n) {
    return milnor_base(cyclic(2), n);
}

namespace detail {

// Cell layout of dimension k of a mapping torus over D:
//   [0, c_k)              base cells (the glued copy of D)
//   then diagonal cells for each k-simplex sigma of D, j = 0..k-1
//   then prism cells for each (k-1)-simplex sigma of D, j = 0..k-1
//
// The prism over a p-simplex sigma is triangulated by the shuffles
//   P_j = [(0,0)..(j,0), (j,1)..(p,1)]        (dimension p+1, j = 0..p)
// whose faces cut out the diagonals
//   T_j = [(0,0)..(j,0), (j+1,1)..(p,1)]      (dimension p, j = 0..p-1);
// bottom faces land in sigma and top faces in f(sigma).
struct TorusLayout {
    const DeltaSet& d;

    std::size_t base(std::size_t s) const { return s; }
    std::size_t diagonal(int k, std::size_t s, int j) const {
        return d.count(k) + s * static_cast<std::size_t>(k) + static_cast<std::size_t>(j);
    }
    std::size_t prism(int k, std::size_t s, int j) const {
        return d.count(k) * (static_cast<std::size_t>(k) + 1) +
               s * static_cast<std::size_t>(k) + static_cast<std::size_t>(j);
    }
};

} // namespace detail

/**
 * The mapping torus of an automorphism f of D: the cylinder D x I,
 * triangulated prism by prism, with the top glued to the bottom
 * through f.  Always has Euler characteristic 0; for f = identity it
 * has the homology of D x S^1.
 */
inline DeltaSet mapping_torus(const DeltaSet& d, const DeltaMap& f) {
    if (f.source() != d || !f.is_automorphism())
        throw NotAutomorphismError("mapping torus needs an automorphism of the base");
    {
        ValidationReport r = validate_map(f);
        if (!r.ok)
            throw NotAutomorphismError("mapping torus monodromy does not commute with faces");
    }
    if (d.is_empty()) return d;

    const int dim = d.dimension() + 1;
    detail::TorusLayout lay{d};

    std::vector<std::size_t> counts(static_cast<std::size_t>(dim) + 1);
    for (int k = 0; k <= dim; ++k)
        counts[static_cast<std::size_t>(k)] = d.count(k) * (static_cast<std::size_t>(k) + 1) +
                                              d.count(k - 1) * static_cast<std::size_t>(k);
    std::size_t predicted =
        std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    if (predicted > simplex_budget())
        throw BudgetExceededError(predicted, simplex_budget(),
                                  "mapping torus exceeds the simplex budget");

    DeltaSet::FaceTables faces(static_cast<std::size_t>(dim) + 1);
    for (int k = 1; k <= dim; ++k) {
        auto& tables = faces[static_cast<std::size_t>(k)];
        tables.assign(static_cast<std::size_t>(k) + 1,
                      std::vector<std::size_t>(counts[static_cast<std::size_t>(k)]));
        for (int i = 0; i <= k; ++i) {
            auto& tab = tables[static_cast<std::size_t>(i)];
            // base cells keep the faces of D
            for (std::size_t s = 0; s < d.count(k); ++s)
                tab[lay.base(s)] = lay.base(d.face(k, i, s));
            // diagonal cells T_j over k-simplices (k = p here)
            for (std::size_t s = 0; s < d.count(k); ++s) {
                for (int j = 0; j < k; ++j) {
                    std::size_t idx = lay.diagonal(k, s, j);
                    if (i <= j) {
                        tab[idx] = (j == 0)
                                       ? lay.base(f.apply(k - 1, d.face(k, 0, s)))
                                       : lay.diagonal(k - 1, d.face(k, i, s), j - 1);
                    } else {
                        tab[idx] = (j == k - 1 && i == k)
                                       ? lay.base(d.face(k, k, s))
                                       : lay.diagonal(k - 1, d.face(k, i, s), j);
                    }
                }
            }
            // prism cells P_j over (k-1)-simplices (p = k-1)
            const int p = k - 1;
            for (std::size_t s = 0; s < d.count(p); ++s) {
                for (int j = 0; j <= p; ++j) {
                    std::size_t idx = lay.prism(k, s, j);
                    if (i < j) {
                        tab[idx] = lay.prism(k - 1, d.face(p, i, s), j - 1);
                    } else if (i == j) {
                        tab[idx] = (j == 0) ? lay.base(f.apply(p, s))
                                            : lay.diagonal(p, s, j - 1);
                    } else if (i == j + 1) {
                        tab[idx] = (j == p) ? lay.base(s) : lay.diagonal(p, s, j);
                    } else {
                        tab[idx] = lay.prism(k - 1, d.face(p, i - 1, s), j);
                    }
                }
            }
        }
    }

    DeltaSet result = DeltaSet::from_parts_unchecked(std::move(counts), std::move(faces));
    if (eager_validation()) result.ensure_valid("mapping_torus");
    return result;
}

/// Homology summary of one space, as reported by the CLI.
struct SpaceReport {
    std::string name;
    std::string expression;
    std::vector<std::size_t> f_vector;
    long long euler = 0;
    int connectivity = 0;
    std::vector<HomologyGroup> homology;
    bool reduced = false;
};

/**
 * Full report for a Delta-set; homology in degrees 0..up_to (default:
 * the dimension).  When the whole range is covered the alternating
 * betti sum is checked against the Euler characteristic.
 */
inline SpaceReport space_report(std::string name, std::string expression, const DeltaSet& d,
                                int up_to = -1, bool reduced = false) {
    SpaceReport r;
    r.name = std::move(name);
    r.expression = std::move(expression);
    r.f_vector = f_vector(d);
    r.euler = euler_characteristic(d);
    r.connectivity = homological_connectivity(d);
    r.homology = all_homology(d, up_to, reduced);
    r.reduced = reduced;
    if ((up_to < 0 || up_to >= d.dimension()) && !reduced) {
        long long betti_sum = 0;
        for (std::size_t k = 0; k < r.homology.size(); ++k)
            betti_sum += (k % 2 == 0) ? static_cast<long long>(r.homology[k].betti)
                                      : -static_cast<long long>(r.homology[k].betti);
        if (betti_sum != r.euler)
            throw ValidationError("space report: alternating betti sum " +
                                  std::to_string(betti_sum) +
                                  " does not match Euler characteristic " +
                                  std::to_string(r.euler));
    }
    return r;
}

/**
 * Cell-count comparison of the three models of B Z_m in a fixed
 * dimension range 0..2n-1: the minimal chain (one cell per dimension),
 * the lens space L(1,...,1), and the Milnor base B_{2n-1} Z_m, together
 * with the wedge-rank check on the Milnor total space.
 */
struct CellCountReport {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::size_t> minimal_ranks;
    std::vector<std::size_t> lens_counts;
    std::vector<std::size_t> milnor_counts;
    bool counts_monotone = false;       // minimal <= lens <= milnor per dimension
    std::size_t milnor_top_reduced_betti = 0;
    std::size_t expected_wedge_rank = 0;  // (m-1)^{2n}
    bool wedge_rank_ok = false;
};

inline CellCountReport cell_count_report(std::size_t m, std::size_t n) {
    if (m < 2 || n < 1) throw InvalidArgumentError("cell_count_report needs m >= 2, n >= 1");
    CellCountReport r;
    r.m = m;
    r.n = n;
    r.minimal_ranks = lens_minimal_chain(m, n).ranks();

    LensParams params(m, std::vector<long long>(n, 1));
    r.lens_counts = f_vector(lens_space(params).first);

    GroupAction total = milnor_total(cyclic(m), 2 * n - 1);
    r.milnor_counts = f_vector(quotient(total).first);

    r.counts_monotone = true;
    for (std::size_t k = 0; k < 2 * n; ++k) {
        if (!(r.minimal_ranks[k] <= r.lens_counts[k] && r.lens_counts[k] <= r.milnor_counts[k]))
            r.counts_monotone = false;
    }

    r.milnor_top_reduced_betti =
        homology(total.space(), 2 * static_cast<int>(n) - 1, /*reduced=*/true).betti;
    r.expected_wedge_rank = 1;
    for (std::size_t i = 0; i < 2 * n; ++i) r.expected_wedge_rank *= (m - 1);
    r.wedge_rank_ok = r.milnor_top_reduced_betti == r.expected_wedge_rank;
    return r;
}

/**
 * Homological stability of the Milnor tower: H_k(B_{n1} G) and
 * H_k(B_{n2} G) agree whenever k <= min(n1, n2) - 1.
 */
inline bool stability_check(const FiniteGroup& g, int k, std::size_t n1, std::size_t n2) {
    if (k < 0 || static_cast<std::size_t>(k) + 1 > std::min(n1, n2))
        throw PreconditionError("stability_check needs 0 <= k <= min(n1, n2) - 1");
    HomologyGroup h1 = homology(milnor_base(g, n1).first, k);
    HomologyGroup h2 = homology(milnor_base(g, n2).first, k);
    return h1 == h2;
}

} // namespace topo

#endif // TOPO_SPACES_HPP
