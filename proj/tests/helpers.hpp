/**
 * Shared test utilities: independent oracles and generators that must
 * stay decoupled from the implementation paths they check.
 */

#ifndef TOPO_TESTS_HELPERS_HPP
#define TOPO_TESTS_HELPERS_HPP

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "topo/topo.hpp"

namespace topotest {

[[maybe_unused]] static const bool eager_on = (topo::eager_validation() = true);

using topo::DeltaSet;
using topo::HomologyGroup;
using topo::Integer;

/**
 * Invariant factors of the direct sum of two groups given by their
 * invariant-factor chains, via the prime-power multiset: per prime,
 * sort exponents descending and let the i-th factor collect the i-th
 * largest power of every prime.
 */
inline std::vector<Integer> merge_invariant_factors(const std::vector<Integer>& a,
                                                    const std::vector<Integer>& b) {
    std::map<Integer, std::vector<unsigned>> exponents;  // prime -> descending exps
    auto absorb = [&](const std::vector<Integer>& factors) {
        for (Integer d : factors) {
            for (Integer p(2); p * p <= d;) {
                if (d % p == 0) {
                    unsigned e = 0;
                    while (d % p == 0) {
                        d /= p;
                        ++e;
                    }
                    exponents[p].push_back(e);
                } else {
                    ++p;
                }
            }
            if (d > 1) exponents[d].push_back(1);
        }
    };
    absorb(a);
    absorb(b);
    std::size_t chain_length = 0;
    for (auto& [p, exps] : exponents) {
        std::sort(exps.rbegin(), exps.rend());
        chain_length = std::max(chain_length, exps.size());
    }
    std::vector<Integer> chain(chain_length, Integer(1));
    for (const auto& [p, exps] : exponents)
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (unsigned e = 0; e < exps[i]; ++e) chain[i] *= p;
    // largest factor first above; the convention is ascending divisibility
    std::reverse(chain.begin(), chain.end());
    return chain;
}

/// H_*(D x S^1) from H_*(D) (Kuenneth; the circle factor is free, so no Tor).
inline std::vector<HomologyGroup> kunneth_with_circle(const std::vector<HomologyGroup>& h) {
    std::vector<HomologyGroup> out(h.size() + 1);
    for (std::size_t k = 0; k < out.size(); ++k) {
        HomologyGroup at = k < h.size() ? h[k] : HomologyGroup{};
        HomologyGroup below = (k >= 1 && k - 1 < h.size()) ? h[k - 1] : HomologyGroup{};
        out[k].betti = at.betti + below.betti;
        std::vector<Integer> merged;
        if (!at.torsion.empty() || !below.torsion.empty())
            merged = merge_invariant_factors(at.torsion, below.torsion);
        out[k].torsion = std::move(merged);
    }
    return out;
}

/**
 * Isomorphic copy of a Delta-set under per-dimension permutations:
 * simplex s moves to perm[k][s], faces conjugated accordingly.
 */
inline DeltaSet permuted_copy(const DeltaSet& d, std::mt19937_64& rng) {
    std::vector<std::vector<std::size_t>> perm(static_cast<std::size_t>(d.dimension() + 1));
    for (int k = 0; k <= d.dimension(); ++k) {
        auto& p = perm[static_cast<std::size_t>(k)];
        p.resize(d.count(k));
        std::iota(p.begin(), p.end(), std::size_t{0});
        std::shuffle(p.begin(), p.end(), rng);
    }
    DeltaSet::FaceTables faces(static_cast<std::size_t>(d.dimension() + 1));
    for (int k = 1; k <= d.dimension(); ++k) {
        auto& tables = faces[static_cast<std::size_t>(k)];
        tables.assign(static_cast<std::size_t>(k) + 1,
                      std::vector<std::size_t>(d.count(k)));
        for (int i = 0; i <= k; ++i)
            for (std::size_t s = 0; s < d.count(k); ++s)
                tables[static_cast<std::size_t>(i)][perm[static_cast<std::size_t>(k)][s]] =
                    perm[static_cast<std::size_t>(k) - 1][d.face(k, i, s)];
    }
    return DeltaSet::from_parts(d.counts(), std::move(faces));
}

/// Groups a..b as a plain vector (homology comparisons read better).
inline std::vector<HomologyGroup> groups(std::initializer_list<HomologyGroup> list) {
    return {list};
}

inline HomologyGroup free_part(std::size_t betti) {
    HomologyGroup h;
    h.betti = betti;
    return h;
}

inline HomologyGroup torsion_part(std::initializer_list<long long> torsion,
                                  std::size_t betti = 0) {
    HomologyGroup h;
    h.betti = betti;
    for (long long t : torsion) h.torsion.push_back(Integer(t));
    return h;
}

} // namespace topotest

#endif // TOPO_TESTS_HELPERS_HPP
