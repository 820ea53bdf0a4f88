/**
 * Finite groups given by multiplication table, with cyclic, dihedral and
 * product constructors, and abelianization into invariant factors.
 */

#ifndef TOPO_FINITE_GROUP_HPP
#define TOPO_FINITE_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "topo/errors.hpp"
#include "topo/int_matrix.hpp"
#include "topo/smith.hpp"

namespace topo {

/**
 * A finite group on elements 0..order-1 with 0 as the identity.
 * Immutable after construction.
 */
class FiniteGroup {
public:
    FiniteGroup() = default;

    explicit FiniteGroup(std::vector<std::vector<std::size_t>> mult, std::string name = {})
        : mult_(std::move(mult)), name_(std::move(name)) {
        if (eager_validation()) ensure_valid("FiniteGroup");
    }

    std::size_t order() const { return mult_.size(); }

    std::size_t mult(std::size_t a, std::size_t b) const { return mult_[a][b]; }

    std::size_t inverse(std::size_t a) const {
        for (std::size_t b = 0; b < order(); ++b)
            if (mult_[a][b] == 0) return b;
        throw ValidationError("element " + std::to_string(a) + " has no inverse");
    }

    const std::vector<std::vector<std::size_t>>& table() const { return mult_; }
    const std::string& name() const { return name_; }

    bool is_abelian() const {
        for (std::size_t a = 0; a < order(); ++a)
            for (std::size_t b = a + 1; b < order(); ++b)
                if (mult_[a][b] != mult_[b][a]) return false;
        return true;
    }

    /// Equality of multiplication tables (names ignored).
    bool operator==(const FiniteGroup& other) const { return mult_ == other.mult_; }
    bool operator!=(const FiniteGroup& other) const { return !(*this == other); }

    /// Exhaustive check: closure, two-sided identity 0, inverses, associativity.
    void ensure_valid(const std::string& context) const {
        const std::size_t n = order();
        if (n == 0) throw ValidationError(context + ": empty multiplication table");
        for (std::size_t a = 0; a < n; ++a) {
            if (mult_[a].size() != n)
                throw ValidationError(context + ": ragged multiplication table");
            for (std::size_t b = 0; b < n; ++b)
                if (mult_[a][b] >= n)
                    throw ValidationError(context + ": product out of range");
            if (mult_[0][a] != a || mult_[a][0] != a)
                throw ValidationError(context + ": 0 is not a two-sided identity");
        }
        for (std::size_t a = 0; a < n; ++a) {
            bool has_inverse = false;
            for (std::size_t b = 0; b < n; ++b)
                if (mult_[a][b] == 0 && mult_[b][a] == 0) has_inverse = true;
            if (!has_inverse)
                throw ValidationError(context + ": element " + std::to_string(a) +
                                      " has no two-sided inverse");
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]])
                        throw ValidationError(context + ": associativity fails at (" +
                                              std::to_string(a) + ", " + std::to_string(b) +
                                              ", " + std::to_string(c) + ")");
    }

private:
    std::vector<std::vector<std::size_t>> mult_;
    std::string name_;
};

/// Cyclic group Z_m, m >= 1.
inline FiniteGroup cyclic(std::size_t m) {
    if (m == 0) throw InvalidArgumentError("cyclic(m) needs m >= 1");
    std::vector<std::vector<std::size_t>> mult(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) mult[a][b] = (a + b) % m;
    return FiniteGroup(std::move(mult), "Z:" + std::to_string(m));
}

/**
 * Dihedral group D_m of order 2m, presented by r^m = 1, s^2 = 1,
 * rs = sr^{m-1}.  Element t + m*e stands for r^t s^e, so
 * (t1, e1)(t2, e2) = (t1 + (-1)^{e1} t2 mod m, e1 xor e2).
 */
inline FiniteGroup dihedral(std::size_t m) {
    if (m == 0) throw InvalidArgumentError("dihedral(m) needs m >= 1");
    const std::size_t n = 2 * m;
    std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t t1 = a % m, e1 = a / m;
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t t2 = b % m, e2 = b / m;
            const std::size_t t = (e1 == 0) ? (t1 + t2) % m : (t1 + m - t2 % m) % m;
            mult[a][b] = t + m * ((e1 + e2) % 2);
        }
    }
    return FiniteGroup(std::move(mult), "D:" + std::to_string(m));
}

/// Direct product, element a*|H| + b for (a, b) in G x H.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const std::size_t gn = g.order(), hn = h.order(), n = gn * hn;
    std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            mult[a][b] = g.mult(a / hn, b / hn) * hn + h.mult(a % hn, b % hn);
    std::string name = g.name().empty() || h.name().empty()
                           ? std::string{}
                           : g.name() + " x " + h.name();
    return FiniteGroup(std::move(mult), std::move(name));
}

namespace detail {

// Subgroup generated by all commutators aba'b', as a sorted element set.
inline std::vector<std::size_t> commutator_subgroup(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::set<std::size_t> members = {0};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            members.insert(
                g.mult(g.mult(a, b), g.mult(g.inverse(a), g.inverse(b))));
    // close under multiplication
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> snapshot(members.begin(), members.end());
        for (std::size_t a : snapshot)
            for (std::size_t b : snapshot)
                if (members.insert(g.mult(a, b)).second) grew = true;
    }
    return {members.begin(), members.end()};
}

} // namespace detail

/**
 * Invariant factors of G / [G, G], each > 1 and dividing the next.
 * Works by forming the quotient by the commutator subgroup and reading
 * off the Smith normal form of its full relation matrix (one relation
 * e_a + e_b - e_{ab} per pair of elements).
 */
inline std::vector<Integer> abelianization(const FiniteGroup& g) {
    const std::vector<std::size_t> comm = detail::commutator_subgroup(g);

    // quotient cosets, ordered by smallest member
    const std::size_t n = g.order();
    std::vector<std::size_t> coset_of(n, n);
    std::size_t num_cosets = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (coset_of[a] != n) continue;
        for (std::size_t c : comm) coset_of[g.mult(a, c)] = num_cosets;
        ++num_cosets;
    }
    std::vector<std::vector<std::size_t>> qmult(num_cosets,
                                                std::vector<std::size_t>(num_cosets));
    {
        std::vector<std::size_t> rep(num_cosets);
        for (std::size_t a = n; a-- > 0;) rep[coset_of[a]] = a;
        for (std::size_t i = 0; i < num_cosets; ++i)
            for (std::size_t j = 0; j < num_cosets; ++j)
                qmult[i][j] = coset_of[g.mult(rep[i], rep[j])];
    }

    // present Z^s -> Q, e_i -> q_i with relations e_i + e_j = e_{ij}
    IntMatrix relations(num_cosets, num_cosets * num_cosets);
    for (std::size_t i = 0; i < num_cosets; ++i) {
        for (std::size_t j = 0; j < num_cosets; ++j) {
            const std::size_t col = i * num_cosets + j;
            relations.add(i, col, 1);
            relations.add(j, col, 1);
            relations.add(qmult[i][j], col, -1);
        }
    }
    SmithResult snf = smith_normal_form(relations);
    std::vector<Integer> factors;
    for (const auto& d : snf.diagonal)
        if (d > 1) factors.push_back(d);
    return factors;
}

} // namespace topo

#endif // TOPO_FINITE_GROUP_HPP
