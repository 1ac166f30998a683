#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "bnsl/errors.hpp"

namespace bnsl {

/// Subset of node indices {0, ..., n-1}, n <= 64, stored as a bit mask.
/// The bit pattern is the canonical encoding used as a memoization key
/// throughout the library. Iteration order is ascending node index.
class NodeSet {
public:
    static constexpr int kMaxNodes = 64;

    constexpr NodeSet() = default;

    static constexpr NodeSet from_bits(std::uint64_t bits) { return NodeSet(bits); }

    static NodeSet single(int v) {
        check_index(v);
        return NodeSet(std::uint64_t{1} << v);
    }

    /// {0, ..., n-1}
    static NodeSet full(int n) {
        if (n < 0 || n > kMaxNodes) throw Error("node count out of range");
        if (n == kMaxNodes) return NodeSet(~std::uint64_t{0});
        return NodeSet((std::uint64_t{1} << n) - 1);
    }

    static NodeSet of(std::initializer_list<int> vs) {
        NodeSet s;
        for (int v : vs) s = s.with(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }

    bool contains(int v) const {
        check_index(v);
        return (bits_ >> v) & 1u;
    }

    NodeSet with(int v) const {
        check_index(v);
        return NodeSet(bits_ | (std::uint64_t{1} << v));
    }

    NodeSet without(int v) const {
        check_index(v);
        return NodeSet(bits_ & ~(std::uint64_t{1} << v));
    }

    constexpr NodeSet unite(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
    constexpr NodeSet intersect(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
    constexpr NodeSet difference(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }

    constexpr bool intersects(NodeSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool is_subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    /// Lowest member; undefined on the empty set.
    int first() const { return std::countr_zero(bits_); }

    /// Visits members in ascending index order.
    template <typename F>
    void for_each(F&& f) const {
        std::uint64_t rest = bits_;
        while (rest != 0) {
            int v = std::countr_zero(rest);
            f(v);
            rest &= rest - 1;
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend constexpr bool operator==(NodeSet a, NodeSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(NodeSet a, NodeSet b) { return a.bits_ != b.bits_; }
    friend constexpr bool operator<(NodeSet a, NodeSet b) { return a.bits_ < b.bits_; }

private:
    constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}

    static void check_index(int v) {
        if (v < 0 || v >= kMaxNodes) throw Error("node index out of range");
    }

    std::uint64_t bits_ = 0;
};

}  // namespace bnsl
