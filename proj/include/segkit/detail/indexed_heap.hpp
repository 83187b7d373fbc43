#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "segkit/errors.hpp"

namespace segkit::detail {

// Binary min-heap over the fixed index universe 1..universe with updatable
// keys.  Ordering is lexicographic on (key, index), so equal keys pop in
// index order.  All operations are O(log universe).
class IndexedHeap {
public:
    explicit IndexedHeap(std::size_t universe)
        : pos_(universe + 1, kAbsent) {}

    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }

    bool contains(std::size_t idx) const { return pos_[idx] != kAbsent; }

    // Smallest (key, index) pair.
    std::pair<double, std::size_t> top() const {
        if (heap_.empty()) throw InternalError("top() on an empty heap");
        return heap_.front();
    }

    // Inserts idx or updates its key.
    void set(std::size_t idx, double key) {
        if (pos_[idx] == kAbsent) {
            heap_.emplace_back(key, idx);
            pos_[idx] = heap_.size() - 1;
            sift_up(heap_.size() - 1);
        } else {
            const std::size_t at = pos_[idx];
            const double old_key = heap_[at].first;
            heap_[at].first = key;
            if (key < old_key) {
                sift_up(at);
            } else {
                sift_down(at);
            }
        }
    }

    // Removes idx if present.
    void erase(std::size_t idx) {
        const std::size_t at = pos_[idx];
        if (at == kAbsent) return;
        const std::size_t last = heap_.size() - 1;
        if (at != last) {
            move_into(at, heap_[last]);
            heap_.pop_back();
            pos_[idx] = kAbsent;
            sift_up(at);
            sift_down(at);
        } else {
            heap_.pop_back();
            pos_[idx] = kAbsent;
        }
    }

private:
    static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

    static bool less(const std::pair<double, std::size_t>& a,
                     const std::pair<double, std::size_t>& b) {
        return a.first < b.first || (a.first == b.first && a.second < b.second);
    }

    void move_into(std::size_t slot, std::pair<double, std::size_t> node) {
        heap_[slot] = node;
        pos_[node.second] = slot;
    }

    void sift_up(std::size_t at) {
        const auto node = heap_[at];
        while (at > 0) {
            const std::size_t parent = (at - 1) / 2;
            if (!less(node, heap_[parent])) break;
            move_into(at, heap_[parent]);
            at = parent;
        }
        move_into(at, node);
    }

    void sift_down(std::size_t at) {
        const auto node = heap_[at];
        for (;;) {
            std::size_t child = 2 * at + 1;
            if (child >= heap_.size()) break;
            if (child + 1 < heap_.size() && less(heap_[child + 1], heap_[child])) ++child;
            if (!less(heap_[child], node)) break;
            move_into(at, heap_[child]);
            at = child;
        }
        move_into(at, node);
    }

    std::vector<std::pair<double, std::size_t>> heap_;
    std::vector<std::size_t> pos_;
};

}  // namespace segkit::detail
