/**
 * Smith normal form of sparse integer matrices, exact over
 * arbitrary-precision integers.
 *
 * Pivoting follows the smallest non-zero absolute value.  The dense
 * path (small matrices) breaks ties by (row, col) order.  The sparse
 * path breaks ties among unit entries by an approximate Markowitz fill
 * count, then (row, col); without fill-aware ties the elimination fills
 * in badly on the larger boundary matrices.  Both paths are
 * deterministic and produce the same invariant factors.
 *
 * The sparse elimination first runs on checked 64-bit arithmetic and
 * escalates to arbitrary precision the moment any operation would
 * overflow, so results are exact in all cases.
 *
 * A retired pivot leaves a diagonal entry; the diagonal is folded into
 * the invariant-factor chain d_1 | d_2 | ... by pairwise gcd/lcm
 * exchanges (diag(a, b) is unimodularly equivalent to
 * diag(gcd(a,b), lcm(a,b))).  Transformation matrices are not computed;
 * no consumer needs them, and correctness is covered by the
 * determinant-divisor oracle in the tests.
 */

#ifndef TOPO_SMITH_HPP
#define TOPO_SMITH_HPP

#include <algorithm>
#include <climits>
#include <cstddef>
#include <queue>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "topo/int_matrix.hpp"

namespace topo {

struct SmithResult {
    /// Invariant factors, positive, each dividing the next.
    std::vector<Integer> diagonal;
    std::size_t rank = 0;
};

/// Matrices with rows*cols at or below this are eliminated densely.
inline std::size_t& smith_dense_threshold() {
    static std::size_t threshold = 64 * 64;
    return threshold;
}

namespace detail {

inline Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

// diag entries (any order, any signs) -> invariant factor chain.
inline std::vector<Integer> divisibility_chain(std::vector<Integer> diag) {
    for (auto& d : diag) d = abs_int(d);
    std::sort(diag.begin(), diag.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            for (std::size_t j = i + 1; j < diag.size(); ++j) {
                if (diag[j] % diag[i] == 0) continue;
                Integer g = boost::multiprecision::gcd(diag[i], diag[j]);
                Integer l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
                changed = true;
            }
        }
        if (changed) std::sort(diag.begin(), diag.end());
    }
    return diag;
}

inline SmithResult smith_dense(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols, Integer(0)));
    for (const auto& [pos, val] : m.entries()) a[pos.first][pos.second] = val;

    std::vector<bool> row_done(rows, false), col_done(cols, false);
    std::vector<Integer> diag;

    for (;;) {
        // smallest non-zero |entry| in the live submatrix, ties by (row, col)
        std::size_t pr = 0, pc = 0;
        Integer best(0);
        for (std::size_t r = 0; r < rows; ++r) {
            if (row_done[r]) continue;
            for (std::size_t c = 0; c < cols; ++c) {
                if (col_done[c] || a[r][c] == 0) continue;
                Integer av = abs_int(a[r][c]);
                if (best == 0 || av < best) {
                    best = av;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (best == 0) break;

        // clear the pivot column, then the pivot row; restart the pivot
        // search whenever a remainder survived (it is strictly smaller)
        bool clean = true;
        const Integer& p = a[pr][pc];
        for (std::size_t r = 0; r < rows; ++r) {
            if (row_done[r] || r == pr || a[r][pc] == 0) continue;
            Integer q = a[r][pc] / p;
            if (q != 0)
                for (std::size_t c = 0; c < cols; ++c)
                    if (!col_done[c] && a[pr][c] != 0) a[r][c] -= q * a[pr][c];
            if (a[r][pc] != 0) clean = false;
        }
        if (!clean) continue;
        for (std::size_t c = 0; c < cols; ++c) {
            if (col_done[c] || c == pc || a[pr][c] == 0) continue;
            Integer q = a[pr][c] / p;
            if (q != 0)
                for (std::size_t r = 0; r < rows; ++r)
                    if (!row_done[r] && a[r][pc] != 0) a[r][c] -= q * a[r][pc];
            if (a[pr][c] != 0) clean = false;
        }
        if (!clean) continue;

        diag.push_back(abs_int(p));
        row_done[pr] = true;
        col_done[pc] = true;
    }

    SmithResult result;
    result.diagonal = divisibility_chain(std::move(diag));
    result.rank = result.diagonal.size();
    return result;
}

/// Raised by the 64-bit arithmetic to request the big-integer rerun.
struct OverflowSignal {};

template <typename I>
struct IntOps;

template <>
struct IntOps<long long> {
    static long long abs(long long v) {
        if (v == LLONG_MIN) throw OverflowSignal{};
        return v < 0 ? -v : v;
    }
    static long long div(long long v, long long p) {
        if (p == -1 && v == LLONG_MIN) throw OverflowSignal{};
        return v / p;
    }
    /// v - q * w, overflow-checked.
    static long long sub_mul(long long v, long long q, long long w) {
        long long prod, out;
        if (__builtin_mul_overflow(q, w, &prod) || __builtin_sub_overflow(v, prod, &out))
            throw OverflowSignal{};
        return out;
    }
    static bool is_unit(long long v) { return v == 1 || v == -1; }
    static Integer widen(long long v) { return Integer(v); }
};

template <>
struct IntOps<Integer> {
    static Integer abs(const Integer& v) { return abs_int(v); }
    static Integer div(const Integer& v, const Integer& p) { return v / p; }
    static Integer sub_mul(const Integer& v, const Integer& q, const Integer& w) {
        return v - q * w;
    }
    static bool is_unit(const Integer& v) { return v == 1 || v == -1; }
    static Integer widen(Integer v) { return v; }
};

template <typename I>
SmithResult smith_sparse_impl(const IntMatrix& m) {
    using Ops = IntOps<I>;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::unordered_map<std::size_t, I>> row(rows);
    std::vector<std::unordered_set<std::size_t>> col(cols);
    for (const auto& [pos, val] : m.entries()) {
        row[pos.first].emplace(pos.second, static_cast<I>(val));
        col[pos.second].insert(pos.first);
    }
    std::vector<bool> row_done(rows, false), col_done(cols, false);

    // Unit-entry candidates keyed (fill cost at push, row, col); stale or
    // worsened entries are re-checked on pop.
    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> units;
    auto fill_cost = [&](std::size_t r, std::size_t c) {
        return (row[r].size() - 1) * (col[c].size() - 1);
    };
    auto offer_unit = [&](std::size_t r, std::size_t c, const I& v) {
        if (Ops::is_unit(v)) units.emplace(fill_cost(r, c), r, c);
    };
    for (std::size_t r = 0; r < rows; ++r)
        for (const auto& [c, v] : row[r]) offer_unit(r, c, v);

    auto set_entry = [&](std::size_t r, std::size_t c, I v) {
        if (v == 0) {
            row[r].erase(c);
            col[c].erase(r);
        } else {
            auto [it, inserted] = row[r].insert_or_assign(c, std::move(v));
            if (inserted) col[c].insert(r);
            offer_unit(r, c, it->second);
        }
    };

    std::vector<Integer> diag;
    std::vector<std::pair<std::size_t, I>> pivot_row_snapshot;

    // Clear the pivot's column (row ops) and row (column ops).  Returns
    // false when the pivot does not divide some entry; the remainders it
    // leaves behind are strictly smaller and steer the next pivot choice.
    auto eliminate = [&](std::size_t pr, std::size_t pc) {
        const I pv = row[pr].at(pc);
        bool clean = true;

        std::vector<std::size_t> targets;
        targets.reserve(col[pc].size());
        for (std::size_t r : col[pc])
            if (r != pr) targets.push_back(r);
        pivot_row_snapshot.assign(row[pr].begin(), row[pr].end());

        for (std::size_t r : targets) {
            I q = Ops::div(row[r].at(pc), pv);
            if (q != 0) {
                for (const auto& [c, w] : pivot_row_snapshot) {
                    auto it = row[r].find(c);
                    I nv = Ops::sub_mul(it == row[r].end() ? I(0) : it->second, q, w);
                    set_entry(r, c, std::move(nv));
                }
            }
            if (row[r].count(pc)) clean = false;
        }
        if (!clean) return false;

        // the pivot column is clear, so clearing the row only touches
        // the pivot row itself
        pivot_row_snapshot.assign(row[pr].begin(), row[pr].end());
        for (const auto& [c, v] : pivot_row_snapshot) {
            if (c == pc) continue;
            I q = Ops::div(v, pv);
            I rem = Ops::sub_mul(v, q, pv);
            set_entry(pr, c, std::move(rem));
            if (row[pr].count(c)) clean = false;
        }
        if (!clean) return false;

        diag.push_back(Ops::widen(Ops::abs(pv)));
        row_done[pr] = true;
        col_done[pc] = true;
        for (const auto& [c, v] : row[pr]) col[c].erase(pr);
        row[pr].clear();
        return true;
    };

    for (;;) {
        bool found_unit = false;
        while (!units.empty()) {
            auto [cost, r, c] = units.top();
            units.pop();
            if (row_done[r] || col_done[c]) continue;
            auto it = row[r].find(c);
            if (it == row[r].end() || !Ops::is_unit(it->second)) continue;
            std::size_t now = fill_cost(r, c);
            if (now > cost) {
                units.emplace(now, r, c);
                continue;
            }
            eliminate(r, c);  // unit pivots always divide: cannot fail
            found_unit = true;
            break;
        }
        if (found_unit) continue;

        // no unit entries left: global smallest |value|, ties by (row, col)
        std::size_t pr = 0, pc = 0;
        I best(0);
        for (std::size_t r = 0; r < rows; ++r) {
            if (row_done[r]) continue;
            std::vector<std::pair<std::size_t, I>> sorted_row(row[r].begin(), row[r].end());
            std::sort(sorted_row.begin(), sorted_row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [c, v] : sorted_row) {
                if (col_done[c]) continue;
                I av = Ops::abs(v);
                if (best == 0 || av < best) {
                    best = av;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (best == 0) break;
        eliminate(pr, pc);
    }

    SmithResult result;
    result.diagonal = divisibility_chain(std::move(diag));
    result.rank = result.diagonal.size();
    return result;
}

inline SmithResult smith_sparse(const IntMatrix& m) {
    bool fits64 = true;
    for (const auto& [pos, val] : m.entries())
        if (val > LLONG_MAX / 2 || val < LLONG_MIN / 2) {
            fits64 = false;
            break;
        }
    if (fits64) {
        try {
            return smith_sparse_impl<long long>(m);
        } catch (const OverflowSignal&) {
            // fall through to exact arithmetic
        }
    }
    return smith_sparse_impl<Integer>(m);
}

} // namespace detail

/**
 * Invariant factors and rank of an integer matrix.  Dense elimination
 * below the size threshold, sparse elimination above; the invariant
 * factors agree.
 */
inline SmithResult smith_normal_form(const IntMatrix& m) {
    if (m.rows() * m.cols() <= smith_dense_threshold() && m.rows() > 0 && m.cols() > 0)
        return detail::smith_dense(m);
    return detail::smith_sparse(m);
}

/// Rank only (same elimination; kept for readability at call sites).
inline std::size_t integer_rank(const IntMatrix& m) {
    return smith_normal_form(m).rank;
}

} // namespace topo

#endif // TOPO_SMITH_HPP
