/**
 * Integer chain complexes, cellular boundary matrices of Delta-sets, and
 * exact homology/cohomology via Smith normal form.
 */

#ifndef TOPO_CHAIN_COMPLEX_HPP
#define TOPO_CHAIN_COMPLEX_HPP

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "topo/delta_set.hpp"
#include "topo/int_matrix.hpp"
#include "topo/smith.hpp"

namespace topo {

/**
 * A finitely generated abelian group Z^betti + Z/d_1 + ... + Z/d_r with
 * d_1 | d_2 | ... and every d_i > 1.
 */
struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const { return betti == 0 && torsion.empty(); }

    bool operator==(const HomologyGroup& other) const {
        return betti == other.betti && torsion == other.torsion;
    }
    bool operator!=(const HomologyGroup& other) const { return !(*this == other); }

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::string s;
        if (betti == 1) s = "Z";
        else if (betti > 1) s = "Z^" + std::to_string(betti);
        for (const auto& t : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + t.str();
        }
        return s;
    }
};

/**
 * Graded free abelian ranks with boundary maps; boundaries[k] has shape
 * ranks[k-1] x ranks[k] and boundaries[k-1] * boundaries[k] = 0.
 * boundaries[0] is the empty map out of degree 0.
 */
class ChainComplex {
public:
    ChainComplex() = default;

    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries)
        : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
        check_shape();
        if (eager_validation()) ensure_valid("ChainComplex");
    }

    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }

    std::size_t rank(int k) const {
        if (k < 0 || k > top_degree()) return 0;
        return ranks_[static_cast<std::size_t>(k)];
    }

    const std::vector<std::size_t>& ranks() const { return ranks_; }

    /// Boundary out of degree k; empty matrix when k is out of range.
    IntMatrix boundary(int k) const {
        if (k < 1 || k > top_degree()) return IntMatrix(rank(k - 1), rank(k));
        return boundaries_[static_cast<std::size_t>(k)];
    }

    /// Verify del . del = 0; throws ValidationError otherwise.
    void ensure_valid(const std::string& context) const {
        for (int k = 2; k <= top_degree(); ++k) {
            IntMatrix product = boundaries_[static_cast<std::size_t>(k) - 1].multiply(
                boundaries_[static_cast<std::size_t>(k)]);
            if (!product.is_zero())
                throw ValidationError(context + ": boundary composition not zero at degree " +
                                      std::to_string(k));
        }
    }

private:
    void check_shape() const {
        if (boundaries_.size() != ranks_.size())
            throw InvalidArgumentError("chain complex needs one boundary per degree");
        for (int k = 1; k <= top_degree(); ++k) {
            const IntMatrix& b = boundaries_[static_cast<std::size_t>(k)];
            if (b.rows() != rank(k - 1) || b.cols() != rank(k))
                throw InvalidArgumentError("boundary at degree " + std::to_string(k) +
                                           " has shape " + std::to_string(b.rows()) + "x" +
                                           std::to_string(b.cols()) + ", expected " +
                                           std::to_string(rank(k - 1)) + "x" +
                                           std::to_string(rank(k)));
        }
    }

    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> boundaries_;
};

/**
 * Cellular boundary of a Delta-set in degree k: column sigma carries
 * sum_i (-1)^i at row d_i(sigma), entries accumulated when faces
 * coincide.  k above the dimension gives the empty matrix.
 */
inline IntMatrix boundary_matrix(const DeltaSet& d, int k) {
    IntMatrix m(d.count(k - 1), d.count(k));
    if (k < 1 || k > d.dimension()) return m;
    for (std::size_t s = 0; s < d.count(k); ++s)
        for (int i = 0; i <= k; ++i)
            m.add(d.face(k, i, s), s, (i % 2 == 0) ? Integer(1) : Integer(-1));
    return m;
}

/// The full cellular chain complex of a Delta-set.
inline ChainComplex chain_complex(const DeltaSet& d) {
    std::vector<std::size_t> ranks(d.counts());
    std::vector<IntMatrix> boundaries(ranks.size());
    if (!ranks.empty()) boundaries[0] = IntMatrix(0, ranks[0]);
    for (int k = 1; k <= d.dimension(); ++k)
        boundaries[static_cast<std::size_t>(k)] = boundary_matrix(d, k);
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

namespace detail {

inline HomologyGroup homology_from_snf(std::size_t rank_k, const SmithResult& out_snf,
                                       const SmithResult& in_snf) {
    HomologyGroup h;
    h.betti = rank_k - out_snf.rank - in_snf.rank;
    for (const auto& d : in_snf.diagonal)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

} // namespace detail

/**
 * Degreewise homology of a chain complex:
 * H_k = Z^{rank_k - rank del_k - rank del_{k+1}} plus the invariant
 * factors of del_{k+1} exceeding 1.
 */
inline HomologyGroup homology_of_complex(const ChainComplex& c, int k) {
    if (k < 0 || k > c.top_degree()) return {};
    SmithResult out = smith_normal_form(c.boundary(k));
    SmithResult in = smith_normal_form(c.boundary(k + 1));
    return detail::homology_from_snf(c.rank(k), out, in);
}

/// All homology groups of a complex in degrees 0..up_to (default: top).
inline std::vector<HomologyGroup> all_homology_of_complex(const ChainComplex& c,
                                                          int up_to = -1) {
    if (up_to < 0) up_to = c.top_degree();
    std::vector<HomologyGroup> out;
    if (up_to < 0) return out;
    // one SNF per boundary map, shared between adjacent degrees
    std::vector<SmithResult> snf(static_cast<std::size_t>(up_to) + 2);
    for (int k = 0; k <= up_to + 1; ++k)
        snf[static_cast<std::size_t>(k)] = smith_normal_form(c.boundary(k));
    out.reserve(static_cast<std::size_t>(up_to) + 1);
    for (int k = 0; k <= up_to; ++k)
        out.push_back(detail::homology_from_snf(c.rank(k), snf[static_cast<std::size_t>(k)],
                                                snf[static_cast<std::size_t>(k) + 1]));
    return out;
}

/**
 * Integral homology of a Delta-set.  With reduced set, degree 0 is
 * augmented: the betti number drops by one on any non-empty set.
 */
inline HomologyGroup homology(const DeltaSet& d, int k, bool reduced = false) {
    if (d.is_empty() || k < 0 || k > d.dimension()) return {};
    SmithResult out = smith_normal_form(boundary_matrix(d, k));
    SmithResult in = smith_normal_form(boundary_matrix(d, k + 1));
    HomologyGroup h = detail::homology_from_snf(d.count(k), out, in);
    if (reduced && k == 0) h.betti -= 1;
    return h;
}

/// All homology groups of a Delta-set in degrees 0..up_to (default: dimension).
inline std::vector<HomologyGroup> all_homology(const DeltaSet& d, int up_to = -1,
                                               bool reduced = false) {
    if (up_to < 0) up_to = d.dimension();
    std::vector<HomologyGroup> out;
    if (d.is_empty()) {
        out.resize(static_cast<std::size_t>(std::max(up_to + 1, 0)));
        return out;
    }
    std::vector<SmithResult> snf(static_cast<std::size_t>(up_to) + 2);
    for (int k = 0; k <= up_to + 1; ++k)
        snf[static_cast<std::size_t>(k)] = smith_normal_form(boundary_matrix(d, k));
    out.reserve(static_cast<std::size_t>(up_to) + 1);
    for (int k = 0; k <= up_to; ++k)
        out.push_back(detail::homology_from_snf(d.count(k), snf[static_cast<std::size_t>(k)],
                                                snf[static_cast<std::size_t>(k) + 1]));
    if (reduced && !out.empty()) out[0].betti -= 1;
    return out;
}

/**
 * Integral cohomology by universal coefficients:
 * H^k = Z^{b_k} + torsion(H_{k-1}).
 */
inline HomologyGroup cohomology(const DeltaSet& d, int k) {
    if (d.is_empty() || k < 0) return {};
    HomologyGroup hk = homology(d, k);
    HomologyGroup h;
    h.betti = hk.betti;
    if (k >= 1) h.torsion = homology(d, k - 1).torsion;
    return h;
}

/// Sentinel for "trivial reduced homology through the whole range".
inline constexpr int kInfiniteConnectivity = std::numeric_limits<int>::max();

/**
 * Homological connectivity: the largest c such that the set is
 * non-empty, connected for c >= 0, and has trivial reduced homology in
 * degrees 1..c.  Conventions: -2 for the empty set, -1 for a non-empty
 * set that is disconnected (merely inhabited), kInfiniteConnectivity
 * when reduced homology vanishes through the top dimension.
 */
inline int homological_connectivity(const DeltaSet& d) {
    if (d.is_empty()) return -2;
    if (connected_components(d) != 1) return -1;
    std::vector<HomologyGroup> h = all_homology(d, -1, /*reduced=*/true);
    int c = 0;
    for (int k = 1; k <= d.dimension(); ++k) {
        if (!h[static_cast<std::size_t>(k)].is_trivial()) return c;
        c = k;
    }
    return kInfiniteConnectivity;
}

} // namespace topo

#endif // TOPO_CHAIN_COMPLEX_HPP
