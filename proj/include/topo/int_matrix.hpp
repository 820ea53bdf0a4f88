/**
 * Sparse integer matrices over arbitrary-precision integers.
 *
 * Carrier for boundary maps and group presentation matrices.  Entries
 * are exact (boost cpp_int): Smith normal form intermediates can grow
 * far beyond any fixed width, and a silent overflow would corrupt
 * torsion coefficients.
 */

#ifndef TOPO_INT_MATRIX_HPP
#define TOPO_INT_MATRIX_HPP

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "topo/errors.hpp"

namespace topo {

using Integer = boost::multiprecision::cpp_int;

/**
 * Sparse matrix keyed by (row, col); zero entries are never stored.
 * Iteration order is row-major, which keeps every derived output
 * deterministic.
 */
class IntMatrix {
public:
    using Index = std::size_t;
    using EntryMap = std::map<std::pair<Index, Index>, Integer>;

    IntMatrix() = default;
    IntMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {}

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    bool is_zero() const { return entries_.empty(); }
    std::size_t nonzeros() const { return entries_.size(); }

    Integer get(Index r, Index c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Integer(0) : it->second;
    }

    void set(Index r, Index c, Integer value) {
        check_range(r, c);
        if (value == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = std::move(value);
    }

    /// Accumulate into an entry (used when faces of a simplex coincide).
    void add(Index r, Index c, const Integer& delta) {
        check_range(r, c);
        if (delta == 0) return;
        auto [it, inserted] = entries_.try_emplace({r, c}, delta);
        if (!inserted) {
            it->second += delta;
            if (it->second == 0) entries_.erase(it);
        }
    }

    const EntryMap& entries() const { return entries_; }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ &&
               entries_ == other.entries_;
    }

    /// Sparse product this * other.
    IntMatrix multiply(const IntMatrix& other) const {
        if (cols_ != other.rows_)
            throw InvalidArgumentError("matrix product shape mismatch");
        IntMatrix out(rows_, other.cols_);
        // group other's entries by row
        std::map<Index, std::vector<std::pair<Index, const Integer*>>> by_row;
        for (const auto& [pos, val] : other.entries_)
            by_row[pos.first].emplace_back(pos.second, &val);
        for (const auto& [pos, val] : entries_) {
            auto it = by_row.find(pos.second);
            if (it == by_row.end()) continue;
            for (const auto& [c, v] : it->second) out.add(pos.first, c, val * *v);
        }
        return out;
    }

    /// Coordinate-triplet dump, one "row col value" line per entry.
    std::string dump_triplets() const {
        std::ostringstream os;
        for (const auto& [pos, val] : entries_)
            os << pos.first << ' ' << pos.second << ' ' << val << '\n';
        return os.str();
    }

private:
    void check_range(Index r, Index c) const {
        if (r >= rows_ || c >= cols_)
            throw InvalidArgumentError("matrix index (" + std::to_string(r) + ", " +
                                       std::to_string(c) + ") out of range for " +
                                       std::to_string(rows_) + "x" +
                                       std::to_string(cols_));
    }

    Index rows_ = 0;
    Index cols_ = 0;
    EntryMap entries_;
};

} // namespace topo

#endif // TOPO_INT_MATRIX_HPP
