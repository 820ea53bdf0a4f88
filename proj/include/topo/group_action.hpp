/**
 * Simplicial actions of finite groups on Delta-sets: rotations of the
 * polygonal circle, translation actions, diagonal actions on joins,
 * freeness checking, and quotients (the covering-space construction).
 */

#ifndef TOPO_GROUP_ACTION_HPP
#define TOPO_GROUP_ACTION_HPP

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topo/delta_set.hpp"
#include "topo/finite_group.hpp"

namespace topo {

/**
 * An action of a finite group on a Delta-set: one permutation of the
 * k-simplices per group element and dimension, commuting with every
 * face map, with act(identity) = id and act(gh) = act(g) . act(h).
 */
class GroupAction {
public:
    /// perms[g][k][s] = image of k-simplex s under element g.
    using PermTable = std::vector<std::vector<std::vector<std::size_t>>>;

    GroupAction(FiniteGroup group, DeltaSet space, PermTable perms)
        : group_(std::move(group)), space_(std::move(space)), perms_(std::move(perms)) {
        if (eager_validation()) ensure_valid("GroupAction");
    }

    const FiniteGroup& group() const { return group_; }
    const DeltaSet& space() const { return space_; }

    std::size_t apply(std::size_t g, int k, std::size_t s) const {
        return perms_[g][static_cast<std::size_t>(k)][s];
    }

    /// The action of one element as a simplicial map (an automorphism).
    DeltaMap as_map(std::size_t g) const {
        return DeltaMap(space_, space_, perms_[g]);
    }

    void ensure_valid(const std::string& context) const {
        const std::size_t n = group_.order();
        if (perms_.size() != n)
            throw ValidationError(context + ": one permutation family per element needed");
        const auto dims = static_cast<std::size_t>(space_.dimension() + 1);
        for (std::size_t g = 0; g < n; ++g) {
            if (perms_[g].size() != dims)
                throw ValidationError(context + ": wrong number of dimensions for element " +
                                      std::to_string(g));
            for (int k = 0; k <= space_.dimension(); ++k) {
                const auto& p = perms_[g][static_cast<std::size_t>(k)];
                if (p.size() != space_.count(k))
                    throw ValidationError(context + ": permutation length mismatch");
                std::vector<bool> seen(p.size(), false);
                for (std::size_t s = 0; s < p.size(); ++s) {
                    if (p[s] >= p.size() || seen[p[s]])
                        throw ValidationError(context + ": element " + std::to_string(g) +
                                              " is not a permutation in dimension " +
                                              std::to_string(k));
                    seen[p[s]] = true;
                }
            }
        }
        // identity element acts as the identity
        for (int k = 0; k <= space_.dimension(); ++k)
            for (std::size_t s = 0; s < space_.count(k); ++s)
                if (apply(0, k, s) != s)
                    throw ValidationError(context + ": identity element does not act trivially");
        // homomorphism: act(gh) = act(g) . act(h)
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h) {
                const std::size_t gh = group_.mult(g, h);
                for (int k = 0; k <= space_.dimension(); ++k)
                    for (std::size_t s = 0; s < space_.count(k); ++s)
                        if (apply(gh, k, s) != apply(g, k, apply(h, k, s)))
                            throw ValidationError(context + ": not a homomorphism at (" +
                                                  std::to_string(g) + ", " +
                                                  std::to_string(h) + ")");
            }
        // compatibility with faces
        for (std::size_t g = 0; g < n; ++g)
            for (int k = 1; k <= space_.dimension(); ++k)
                for (int i = 0; i <= k; ++i)
                    for (std::size_t s = 0; s < space_.count(k); ++s)
                        if (apply(g, k - 1, space_.face(k, i, s)) !=
                            space_.face(k, i, apply(g, k, s)))
                            throw ValidationError(context +
                                                  ": action does not commute with d_" +
                                                  std::to_string(i) + " in dimension " +
                                                  std::to_string(k));
    }

private:
    FiniteGroup group_;
    DeltaSet space_;
    PermTable perms_;
};

/**
 * Z_m acting on polygon_circle(m); the generator advances every vertex
 * and edge by l positions.  Free exactly when gcd(l, m) = 1 (for m > 1);
 * with gcd(l, m) = k > 1 the element m/k acts trivially.
 */
inline GroupAction rotation_action(std::size_t m, std::size_t l) {
    FiniteGroup g = cyclic(m);
    DeltaSet circle = polygon_circle(m);
    GroupAction::PermTable perms(m);
    for (std::size_t a = 0; a < m; ++a) {
        std::vector<std::size_t> shift(m);
        for (std::size_t j = 0; j < m; ++j) shift[j] = (j + a * l) % m;
        perms[a] = {shift, shift};
    }
    return GroupAction(std::move(g), std::move(circle), std::move(perms));
}

/// G acting on discrete(|G|) by left translation; free for every G.
inline GroupAction translation_action(const FiniteGroup& g) {
    const std::size_t n = g.order();
    GroupAction::PermTable perms(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<std::size_t> p(n);
        for (std::size_t x = 0; x < n; ++x) p[x] = g.mult(a, x);
        perms[a] = {std::move(p)};
    }
    return GroupAction(g, discrete(n), std::move(perms));
}

/**
 * Diagonal action on the join of two spaces carrying actions of the
 * same group: g sends a pure simplex through the corresponding factor
 * action and a mixed simplex (sigma, tau) to (g sigma, g tau).
 */
inline GroupAction join_actions(const GroupAction& a, const GroupAction& b) {
    if (a.group() != b.group())
        throw InvalidArgumentError("join_actions needs both actions to share one group");

    const DeltaSet& sa = a.space();
    const DeltaSet& sb = b.space();
    if (sa.is_empty()) return b;
    if (sb.is_empty()) return a;
    DeltaSet joined = join(sa, sb);

    detail::JoinLayout lay{sa, sb};
    const std::size_t n = a.group().order();
    GroupAction::PermTable perms(n);
    for (std::size_t g = 0; g < n; ++g) {
        perms[g].resize(static_cast<std::size_t>(joined.dimension()) + 1);
        for (int k = 0; k <= joined.dimension(); ++k) {
            auto& p = perms[g][static_cast<std::size_t>(k)];
            p.resize(joined.count(k));
            for (std::size_t s = 0; s < sa.count(k); ++s)
                p[lay.pure_a(s)] = lay.pure_a(a.apply(g, k, s));
            for (std::size_t t = 0; t < sb.count(k); ++t)
                p[lay.pure_b(k, t)] = lay.pure_b(k, b.apply(g, k, t));
            for (int pd = 0; pd < k; ++pd) {
                const int qd = k - 1 - pd;
                for (std::size_t s = 0; s < sa.count(pd); ++s)
                    for (std::size_t t = 0; t < sb.count(qd); ++t)
                        p[lay.mixed(k, pd, s, t)] =
                            lay.mixed(k, pd, a.apply(g, pd, s), b.apply(g, qd, t));
            }
        }
    }
    return GroupAction(a.group(), std::move(joined), std::move(perms));
}

/// Witness of a non-free action: a non-identity element fixing a simplex.
struct FixedSimplex {
    std::size_t element;
    int dim;
    std::size_t simplex;
};

/// First fixed simplex in (element, dimension, index) order, if any.
inline std::optional<FixedSimplex> find_fixed_simplex(const GroupAction& a) {
    for (std::size_t g = 1; g < a.group().order(); ++g)
        for (int k = 0; k <= a.space().dimension(); ++k)
            for (std::size_t s = 0; s < a.space().count(k); ++s)
                if (a.apply(g, k, s) == s) return FixedSimplex{g, k, s};
    return std::nullopt;
}

/// True iff no non-identity element fixes any simplex, in any dimension.
inline bool is_free(const GroupAction& a) { return !find_fixed_simplex(a).has_value(); }

/**
 * Quotient of a free action: simplices are orbits (ordered by their
 * smallest member), face maps descend, and the returned map is the
 * covering projection, with |G| preimages over every simplex.
 * Throws NotFreeError with a witness when the action is not free.
 */
inline std::pair<DeltaSet, DeltaMap> quotient(const GroupAction& a) {
    if (auto fixed = find_fixed_simplex(a))
        throw NotFreeError(fixed->element, fixed->dim, fixed->simplex,
                           "action is not free: element " + std::to_string(fixed->element) +
                               " fixes simplex " + std::to_string(fixed->simplex) +
                               " in dimension " + std::to_string(fixed->dim));

    const DeltaSet& total = a.space();
    const std::size_t n = a.group().order();
    const auto dims = static_cast<std::size_t>(total.dimension() + 1);

    std::vector<std::vector<std::size_t>> orbit_of(dims);
    std::vector<std::size_t> orbit_counts(dims, 0);
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    for (int k = 0; k <= total.dimension(); ++k) {
        auto& orb = orbit_of[static_cast<std::size_t>(k)];
        orb.assign(total.count(k), unassigned);
        std::size_t next = 0;
        for (std::size_t s = 0; s < total.count(k); ++s) {
            if (orb[s] != unassigned) continue;
            for (std::size_t g = 0; g < n; ++g) orb[a.apply(g, k, s)] = next;
            ++next;
        }
        orbit_counts[static_cast<std::size_t>(k)] = next;
    }

    // representative = smallest member = first simplex discovered
    std::vector<std::vector<std::size_t>> reps(dims);
    for (int k = 0; k <= total.dimension(); ++k) {
        auto& rep = reps[static_cast<std::size_t>(k)];
        rep.assign(orbit_counts[static_cast<std::size_t>(k)], unassigned);
        for (std::size_t s = total.count(k); s-- > 0;)
            rep[orbit_of[static_cast<std::size_t>(k)][s]] = s;
    }

    DeltaSet::FaceTables faces(dims);
    for (int k = 1; k <= total.dimension(); ++k) {
        auto& tables = faces[static_cast<std::size_t>(k)];
        tables.assign(static_cast<std::size_t>(k) + 1,
                      std::vector<std::size_t>(orbit_counts[static_cast<std::size_t>(k)]));
        for (int i = 0; i <= k; ++i)
            for (std::size_t o = 0; o < orbit_counts[static_cast<std::size_t>(k)]; ++o)
                tables[static_cast<std::size_t>(i)][o] =
                    orbit_of[static_cast<std::size_t>(k) - 1]
                            [total.face(k, i, reps[static_cast<std::size_t>(k)][o])];
    }

    DeltaSet base = DeltaSet::from_parts_unchecked(orbit_counts, std::move(faces));
    if (eager_validation()) base.ensure_valid("quotient");
    DeltaMap projection(total, base, std::move(orbit_of));
    return {std::move(base), std::move(projection)};
}

} // namespace topo

#endif // TOPO_GROUP_ACTION_HPP
