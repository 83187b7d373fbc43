#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "segkit/errors.hpp"
#include "segkit/segmentation.hpp"

namespace segkit {

// Dense (prefix, level) table of costs, stored level-major so each level is
// one contiguous row of m+1 values.  value(i, level) is the cost of the best
// level-segmentation of the prefix (0, i] found by whichever solver filled
// the table.  Backpointers, when present, hold the predecessor boundary.
class CostTable {
public:
    CostTable(std::size_t num_points, std::size_t levels, bool with_backpointers)
        : m_(num_points),
          k_(levels),
          values_((num_points + 1) * levels, 0.0),
          back_(with_backpointers ? (num_points + 1) * levels : 0, 0) {
        if (levels < 1) throw ContractViolation("a cost table needs at least one level");
    }

    std::size_t num_points() const { return m_; }
    std::size_t levels() const { return k_; }
    bool has_backpointers() const { return !back_.empty(); }

    double value(std::size_t i, std::size_t level) const { return values_[slot(i, level)]; }

    std::size_t back(std::size_t i, std::size_t level) const {
        const std::size_t s = slot(i, level);
        if (!has_backpointers()) {
            throw UnsupportedOperation("table was built without backpointers");
        }
        return back_[s];
    }

    std::span<const double> level_row(std::size_t level) const {
        check_level(level);
        return {values_.data() + (level - 1) * (m_ + 1), m_ + 1};
    }

    void set(std::size_t i, std::size_t level, double value) {
        values_[slot(i, level)] = value;
    }

    void set(std::size_t i, std::size_t level, double value, std::size_t back) {
        const std::size_t s = slot(i, level);
        values_[s] = value;
        if (!back_.empty()) back_[s] = back;
    }

private:
    void check_level(std::size_t level) const {
        if (level < 1 || level > k_) {
            throw ContractViolation("level " + std::to_string(level) +
                                    " outside 1.." + std::to_string(k_));
        }
    }

    std::size_t slot(std::size_t i, std::size_t level) const {
        check_level(level);
        if (i > m_) {
            throw ContractViolation("prefix " + std::to_string(i) + " outside 0.." +
                                    std::to_string(m_));
        }
        return (level - 1) * (m_ + 1) + i;
    }

    std::size_t m_;
    std::size_t k_;
    std::vector<double> values_;
    std::vector<std::size_t> back_;
};

// The same shape also backs the cumulative solvers; the alias keeps call
// sites honest about which table they are holding.
using CumulativeTable = CostTable;

// Walks backpointers from (i, level) down to level 1.  Returns level+1
// boundaries ending at i.  Requires a table built with backpointers.
inline Segmentation reconstruct(const CostTable& table, std::size_t i, std::size_t level) {
    if (i > table.num_points() || level < 1 || level > table.levels()) {
        throw ContractViolation("reconstruction cell (" + std::to_string(i) + ", " +
                                std::to_string(level) + ") out of range");
    }
    if (!table.has_backpointers()) {
        throw UnsupportedOperation(
            "table was built without backpointers; boundaries cannot be reconstructed");
    }
    Segmentation seg;
    seg.boundaries.assign(level + 1, 0);
    seg.boundaries[level] = i;
    for (std::size_t lv = level; lv >= 2; --lv) {
        seg.boundaries[lv - 1] = table.back(seg.boundaries[lv], lv);
    }
    return seg;
}

}  // namespace segkit
