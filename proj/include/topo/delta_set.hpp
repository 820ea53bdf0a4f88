/**
 * Finite semi-simplicial sets (Delta-sets), maps between them, and the
 * basic constructions: discrete sets, polygonal circles, spheres,
 * disjoint unions and joins.
 *
 * A Delta-set has face maps only (no degeneracies).  This keeps the
 * category closed under quotients by free simplicial actions and under
 * joins, with no subdivision step.
 */

#ifndef TOPO_DELTA_SET_HPP
#define TOPO_DELTA_SET_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "topo/errors.hpp"

namespace topo {

/**
 * When true, every constructor output is validated on the spot
 * (simplicial identities and all).  Defaults to on in debug builds;
 * release binaries validate on demand (the CLI exposes a flag).
 */
inline bool& eager_validation() {
#ifdef NDEBUG
    static bool enabled = false;
#else
    static bool enabled = true;
#endif
    return enabled;
}

/**
 * Global cap on the total number of simplices a single construction may
 * produce (joins multiply sizes).  Constructions that would exceed it
 * throw BudgetExceededError before allocating.
 */
inline std::size_t& simplex_budget() {
    static std::size_t budget = 1'000'000;
    return budget;
}

struct Violation {
    int dim = 0;
    std::size_t simplex = 0;
    std::string identity;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/**
 * A finite semi-simplicial set.
 *
 * Simplices in dimension k are identified by dense indices
 * 0..count(k)-1.  For k >= 1 the i-th face map d_i (0 <= i <= k) sends a
 * k-simplex index to a (k-1)-simplex index, subject to the simplicial
 * identities d_i . d_j = d_{j-1} . d_i for i < j.
 *
 * The empty Delta-set is representable and has dimension -1.
 * Instances are immutable after construction and safe to share across
 * threads.
 */
class DeltaSet {
public:
    using FaceTables = std::vector<std::vector<std::vector<std::size_t>>>;
    using Labels = std::vector<std::vector<std::string>>;

    DeltaSet() = default;

    static DeltaSet empty() { return DeltaSet(); }

    /**
     * Build from explicit tables.  counts[k] is the number of
     * k-simplices; faces[k][i][s] = d_i(s) for k >= 1 (faces[0] is
     * ignored).  Shape and index-range errors always throw; the
     * simplicial identities are checked when eager validation is on.
     */
    static DeltaSet from_parts(std::vector<std::size_t> counts, FaceTables faces,
                               Labels labels = {}) {
        DeltaSet d = from_parts_unchecked(std::move(counts), std::move(faces),
                                          std::move(labels));
        d.check_shape();
        if (eager_validation())
            d.ensure_valid("DeltaSet::from_parts");
        return d;
    }

    /// Same as from_parts but skips every check; caller guarantees validity.
    static DeltaSet from_parts_unchecked(std::vector<std::size_t> counts,
                                         FaceTables faces, Labels labels = {}) {
        DeltaSet d;
        d.counts_ = std::move(counts);
        d.faces_ = std::move(faces);
        d.labels_ = std::move(labels);
        d.normalize();
        return d;
    }

    /// Top dimension with simplices; -1 for the empty Delta-set.
    int dimension() const { return static_cast<int>(counts_.size()) - 1; }

    std::size_t count(int k) const {
        if (k < 0 || k > dimension()) return 0;
        return counts_[static_cast<std::size_t>(k)];
    }

    /// Total number of simplices in all dimensions.
    std::size_t total() const {
        return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
    }

    const std::vector<std::size_t>& counts() const { return counts_; }

    /// d_i of k-simplex s (k >= 1, 0 <= i <= k).
    std::size_t face(int k, int i, std::size_t s) const {
        return faces_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][s];
    }

    const FaceTables& face_tables() const { return faces_; }

    bool is_empty() const { return counts_.empty(); }

    const Labels& labels() const { return labels_; }

    std::string label(int k, std::size_t s) const {
        auto uk = static_cast<std::size_t>(k);
        if (uk >= labels_.size() || s >= labels_[uk].size()) return {};
        return labels_[uk][s];
    }

    /// Structural equality on counts and face tables (labels excluded).
    bool operator==(const DeltaSet& other) const {
        return counts_ == other.counts_ && faces_ == other.faces_;
    }
    bool operator!=(const DeltaSet& other) const { return !(*this == other); }

    /// Throws ValidationError if any Delta-set invariant fails.
    void ensure_valid(const std::string& context) const;

private:
    // Trailing dimensions with zero simplices are trimmed so that
    // counts.back() > 0 whenever the set is non-empty.
    void normalize() {
        while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
        faces_.resize(counts_.size());
        if (labels_.size() > counts_.size()) labels_.resize(counts_.size());
    }

    // Structural (shape + index range) checks; independent of the
    // simplicial identities, always enforced by from_parts.
    void check_shape() const {
        for (int k = 1; k <= dimension(); ++k) {
            auto uk = static_cast<std::size_t>(k);
            if (faces_[uk].size() != uk + 1)
                throw InvalidArgumentError(
                    "dimension " + std::to_string(k) + " needs " +
                    std::to_string(k + 1) + " face tables, got " +
                    std::to_string(faces_[uk].size()));
            for (std::size_t i = 0; i <= uk; ++i) {
                if (faces_[uk][i].size() != counts_[uk])
                    throw InvalidArgumentError(
                        "face table d_" + std::to_string(i) + " at dimension " +
                        std::to_string(k) + " has wrong length");
                for (std::size_t s = 0; s < counts_[uk]; ++s)
                    if (faces_[uk][i][s] >= counts_[uk - 1])
                        throw InvalidArgumentError(
                            "face index out of range at dimension " +
                            std::to_string(k) + ", simplex " + std::to_string(s));
            }
        }
    }

    std::vector<std::size_t> counts_;
    FaceTables faces_;
    Labels labels_;

    friend ValidationReport validate(const DeltaSet&);
};

/**
 * Check every Delta-set invariant and report each violation with the
 * dimension, simplex and the identity that failed.  Never throws.
 */
inline ValidationReport validate(const DeltaSet& d) {
    ValidationReport report;
    auto add = [&](int k, std::size_t s, std::string what) {
        report.ok = false;
        report.violations.push_back({k, s, std::move(what)});
    };

    for (int k = 1; k <= d.dimension(); ++k) {
        auto uk = static_cast<std::size_t>(k);
        if (d.faces_[uk].size() != uk + 1) {
            add(k, 0, "missing face tables");
            return report;
        }
        for (std::size_t i = 0; i <= uk; ++i) {
            if (d.faces_[uk][i].size() != d.count(k)) {
                add(k, 0, "face table d_" + std::to_string(i) + " has wrong length");
                return report;
            }
            for (std::size_t s = 0; s < d.count(k); ++s)
                if (d.faces_[uk][i][s] >= d.count(k - 1))
                    add(k, s, "d_" + std::to_string(i) + " out of range");
        }
    }
    if (!report.ok) return report;

    // d_i . d_j = d_{j-1} . d_i for i < j <= k, k >= 2.
    for (int k = 2; k <= d.dimension(); ++k) {
        for (int j = 1; j <= k; ++j) {
            for (int i = 0; i < j; ++i) {
                for (std::size_t s = 0; s < d.count(k); ++s) {
                    std::size_t lhs = d.face(k - 1, i, d.face(k, j, s));
                    std::size_t rhs = d.face(k - 1, j - 1, d.face(k, i, s));
                    if (lhs != rhs)
                        add(k, s,
                            "d_" + std::to_string(i) + "∘d_" + std::to_string(j) +
                                " = d_" + std::to_string(j - 1) + "∘d_" +
                                std::to_string(i));
                }
            }
        }
    }
    return report;
}

inline void DeltaSet::ensure_valid(const std::string& context) const {
    ValidationReport r = validate(*this);
    if (!r.ok) {
        const Violation& v = r.violations.front();
        throw ValidationError(context + ": invalid Delta-set, first violation at (" +
                              std::to_string(v.dim) + ", " + std::to_string(v.simplex) +
                              "): " + v.identity +
                              " [" + std::to_string(r.violations.size()) +
                              " violation(s)]");
    }
}

/**
 * A simplicial map between Delta-sets: a dimension-preserving assignment
 * of simplices commuting with every face map.
 */
class DeltaMap {
public:
    DeltaMap() = default;

    DeltaMap(DeltaSet source, DeltaSet target, std::vector<std::vector<std::size_t>> comp)
        : source_(std::move(source)), target_(std::move(target)), comp_(std::move(comp)) {
        if (eager_validation()) ensure_valid("DeltaMap");
    }

    const DeltaSet& source() const { return source_; }
    const DeltaSet& target() const { return target_; }

    std::size_t apply(int k, std::size_t s) const {
        return comp_[static_cast<std::size_t>(k)][s];
    }

    const std::vector<std::vector<std::size_t>>& components() const { return comp_; }

    /// True if the map is a bijection in every dimension and source == target.
    bool is_automorphism() const {
        if (source_ != target_) return false;
        for (int k = 0; k <= source_.dimension(); ++k) {
            std::vector<bool> seen(target_.count(k), false);
            if (comp_[static_cast<std::size_t>(k)].size() != source_.count(k))
                return false;
            for (std::size_t s = 0; s < source_.count(k); ++s) {
                std::size_t t = apply(k, s);
                if (t >= target_.count(k) || seen[t]) return false;
                seen[t] = true;
            }
        }
        return true;
    }

    void ensure_valid(const std::string& context) const {
        ValidationReport r = validate_map(*this);
        if (!r.ok)
            throw ValidationError(context + ": map does not commute with faces at (" +
                                  std::to_string(r.violations.front().dim) + ", " +
                                  std::to_string(r.violations.front().simplex) + ")");
    }

    friend ValidationReport validate_map(const DeltaMap& f);

private:
    DeltaSet source_;
    DeltaSet target_;
    std::vector<std::vector<std::size_t>> comp_;
};

/// Check that the map is total, in range, and commutes with all faces.
inline ValidationReport validate_map(const DeltaMap& f) {
    ValidationReport report;
    auto add = [&](int k, std::size_t s, std::string what) {
        report.ok = false;
        report.violations.push_back({k, s, std::move(what)});
    };
    const DeltaSet& a = f.source_;
    const DeltaSet& b = f.target_;
    if (f.comp_.size() != static_cast<std::size_t>(a.dimension() + 1)) {
        add(0, 0, "component count does not match source dimension");
        return report;
    }
    for (int k = 0; k <= a.dimension(); ++k) {
        auto uk = static_cast<std::size_t>(k);
        if (f.comp_[uk].size() != a.count(k)) {
            add(k, 0, "component has wrong length");
            return report;
        }
        for (std::size_t s = 0; s < a.count(k); ++s)
            if (f.comp_[uk][s] >= b.count(k)) add(k, s, "image out of range");
    }
    if (!report.ok)
        return report;
    for (int k = 1; k <= a.dimension(); ++k) {
        for (int i = 0; i <= k; ++i) {
            for (std::size_t s = 0; s < a.count(k); ++s) {
                if (f.apply(k - 1, a.face(k, i, s)) != b.face(k, i, f.apply(k, s)))
                    add(k, s, "does not commute with d_" + std::to_string(i));
            }
        }
    }
    return report;
}

/// Identity map on a Delta-set.
inline DeltaMap identity_map(const DeltaSet& d) {
    std::vector<std::vector<std::size_t>> comp(static_cast<std::size_t>(d.dimension() + 1));
    for (int k = 0; k <= d.dimension(); ++k) {
        comp[static_cast<std::size_t>(k)].resize(d.count(k));
        std::iota(comp[static_cast<std::size_t>(k)].begin(),
                  comp[static_cast<std::size_t>(k)].end(), std::size_t{0});
    }
    return DeltaMap(d, d, std::move(comp));
}

/// k isolated vertices (k >= 1).  discrete(2) is the sphere S^0.
inline DeltaSet discrete(std::size_t k) {
    if (k == 0)
        throw InvalidArgumentError("discrete(k) needs k >= 1; the empty Delta-set "
                                   "is DeltaSet::empty()");
    return DeltaSet::from_parts_unchecked({k}, {{}});
}

/// The one-point Delta-set.
inline DeltaSet point() { return discrete(1); }

/**
 * The circle as a directed m-gon: vertices v_0..v_{m-1} and edges
 * e_0..e_{m-1} with d_1(e_j) = v_j and d_0(e_j) = v_{(j+1) mod m}.
 * The m-gon (rather than a one-vertex loop) is what makes the rotation
 * action by Z_m free on simplices.
 */
inline DeltaSet polygon_circle(std::size_t m) {
    if (m == 0) throw InvalidArgumentError("polygon_circle(m) needs m >= 1");
    std::vector<std::size_t> d0(m), d1(m);
    for (std::size_t j = 0; j < m; ++j) {
        d0[j] = (j + 1) % m;
        d1[j] = j;
    }
    return DeltaSet::from_parts_unchecked({m, m}, {{}, {std::move(d0), std::move(d1)}});
}

namespace detail {

// Index layout of dimension n of A |><| B:
//   [0, a_n)                    pure A-simplices
//   [a_n, a_n + b_n)            pure B-simplices
//   then blocks (p, q = n-1-p) for p = 0..n-1, each a_p * b_q wide,
//   element (sigma, tau) at offset sigma * b_q + tau.
struct JoinLayout {
    const DeltaSet& a;
    const DeltaSet& b;

    std::size_t mixed_offset(int n, int p) const {
        std::size_t off = a.count(n) + b.count(n);
        for (int r = 0; r < p; ++r) off += a.count(r) * b.count(n - 1 - r);
        return off;
    }
    std::size_t pure_a(std::size_t sigma) const { return sigma; }
    std::size_t pure_b(int n, std::size_t tau) const { return a.count(n) + tau; }
    std::size_t mixed(int n, int p, std::size_t sigma, std::size_t tau) const {
        return mixed_offset(n, p) + sigma * b.count(n - 1 - p) + tau;
    }
};

} // namespace detail

/**
 * Join of two Delta-sets.  Simplices of dimension n are those of A, those
 * of B, and pairs (sigma, tau) with dim sigma + dim tau = n - 1.  With
 * all A-vertices ordered before all B-vertices, the faces of a mixed
 * simplex (sigma, tau), p = dim sigma, q = dim tau, are
 *
 *   d_i(sigma, tau) = (d_i sigma, tau)         for i <= p,
 *                     degenerating to tau alone when p = 0, i = 0;
 *   d_i(sigma, tau) = (sigma, d_{i-p-1} tau)   for i > p,
 *                     degenerating to sigma alone when q = 0, i = p+1.
 *
 * Realizes the homotopy join (the pushout of the product projections);
 * in particular S^m |><| S^n = S^{m+n+1}.
 */
inline DeltaSet join(const DeltaSet& a, const DeltaSet& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;

    std::size_t predicted = (a.total() + 1) * (b.total() + 1) - 1;
    if (predicted > simplex_budget())
        throw BudgetExceededError(predicted, simplex_budget(),
                                  "join would create " + std::to_string(predicted) +
                                      " simplices, budget is " +
                                      std::to_string(simplex_budget()));

    const int dim = a.dimension() + b.dimension() + 1;
    detail::JoinLayout lay{a, b};

    std::vector<std::size_t> counts(static_cast<std::size_t>(dim) + 1);
    for (int n = 0; n <= dim; ++n) {
        std::size_t c = a.count(n) + b.count(n);
        for (int p = 0; p < n; ++p) c += a.count(p) * b.count(n - 1 - p);
        counts[static_cast<std::size_t>(n)] = c;
    }

    DeltaSet::FaceTables faces(static_cast<std::size_t>(dim) + 1);
    for (int n = 1; n <= dim; ++n) {
        auto& tables = faces[static_cast<std::size_t>(n)];
        tables.assign(static_cast<std::size_t>(n) + 1,
                      std::vector<std::size_t>(counts[static_cast<std::size_t>(n)]));
        for (int i = 0; i <= n; ++i) {
            auto& tab = tables[static_cast<std::size_t>(i)];
            // pure A
            for (std::size_t s = 0; s < a.count(n); ++s)
                tab[lay.pure_a(s)] = a.face(n, i, s);
            // pure B
            for (std::size_t t = 0; t < b.count(n); ++t)
                tab[lay.pure_b(n, t)] = b.face(n, i, t) + a.count(n - 1);
            // mixed blocks
            for (int p = 0; p < n; ++p) {
                const int q = n - 1 - p;
                for (std::size_t s = 0; s < a.count(p); ++s) {
                    for (std::size_t t = 0; t < b.count(q); ++t) {
                        std::size_t idx = lay.mixed(n, p, s, t);
                        if (i <= p) {
                            tab[idx] = (p == 0) ? lay.pure_b(n - 1, t)
                                                : lay.mixed(n - 1, p - 1,
                                                            a.face(p, i, s), t);
                        } else {
                            tab[idx] = (q == 0) ? lay.pure_a(s)
                                                : lay.mixed(n - 1, p, s,
                                                            b.face(q, i - p - 1, t));
                        }
                    }
                }
            }
        }
    }

    DeltaSet result = DeltaSet::from_parts_unchecked(std::move(counts), std::move(faces));
    if (eager_validation()) result.ensure_valid("join");
    return result;
}

/// Disjoint union; B-simplices are re-indexed after A's in every dimension.
inline DeltaSet disjoint_union(const DeltaSet& a, const DeltaSet& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    std::size_t predicted = a.total() + b.total();
    if (predicted > simplex_budget())
        throw BudgetExceededError(predicted, simplex_budget(),
                                  "disjoint union exceeds the simplex budget");

    const int dim = std::max(a.dimension(), b.dimension());
    std::vector<std::size_t> counts(static_cast<std::size_t>(dim) + 1);
    for (int n = 0; n <= dim; ++n)
        counts[static_cast<std::size_t>(n)] = a.count(n) + b.count(n);

    DeltaSet::FaceTables faces(static_cast<std::size_t>(dim) + 1);
    for (int n = 1; n <= dim; ++n) {
        auto& tables = faces[static_cast<std::size_t>(n)];
        tables.assign(static_cast<std::size_t>(n) + 1,
                      std::vector<std::size_t>(counts[static_cast<std::size_t>(n)]));
        for (int i = 0; i <= n; ++i) {
            for (std::size_t s = 0; s < a.count(n); ++s)
                tables[static_cast<std::size_t>(i)][s] = a.face(n, i, s);
            for (std::size_t t = 0; t < b.count(n); ++t)
                tables[static_cast<std::size_t>(i)][a.count(n) + t] =
                    b.face(n, i, t) + a.count(n - 1);
        }
    }
    DeltaSet result = DeltaSet::from_parts_unchecked(std::move(counts), std::move(faces));
    if (eager_validation()) result.ensure_valid("disjoint_union");
    return result;
}

/**
 * The n-sphere, n >= -1: sphere(-1) is empty, sphere(n) is the join of
 * n+1 copies of S^0 = discrete(2).  sphere(1) is the square circle with
 * 4 vertices and 4 edges.
 */
inline DeltaSet sphere(int n) {
    if (n < -1) throw InvalidArgumentError("sphere(n) needs n >= -1");
    DeltaSet s = DeltaSet::empty();
    for (int i = 0; i <= n; ++i) s = join(s, discrete(2));
    return s;
}

/// Per-dimension simplex counts.
inline std::vector<std::size_t> f_vector(const DeltaSet& d) { return d.counts(); }

/// Alternating sum of simplex counts.
inline long long euler_characteristic(const DeltaSet& d) {
    long long chi = 0;
    for (int k = 0; k <= d.dimension(); ++k)
        chi += (k % 2 == 0) ? static_cast<long long>(d.count(k))
                            : -static_cast<long long>(d.count(k));
    return chi;
}

/// Number of connected components (union-find on vertices along edges).
inline std::size_t connected_components(const DeltaSet& d) {
    std::size_t n = d.count(0);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t e = 0; e < d.count(1); ++e) {
        std::size_t ra = find(d.face(1, 0, e));
        std::size_t rb = find(d.face(1, 1, e));
        if (ra != rb) parent[ra] = rb;
    }
    std::size_t components = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (find(v) == v) ++components;
    return components;
}

} // namespace topo

#endif // TOPO_DELTA_SET_HPP
