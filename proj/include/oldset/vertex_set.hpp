#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace oldset {

/// Subset of a fixed vertex universe 0..n-1.  Universes are capped at 64
/// vertices so that all set algebra is single-word bit operations.
class VertexSet {
public:
    static constexpr int max_universe = 64;

    VertexSet() = default;

    explicit VertexSet(int universe) : n_(checked(universe)) {}

    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) add(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        s.bits_ = universe == 64 ? ~0ull : (1ull << universe) - 1;
        return s;
    }

    static VertexSet single(int universe, int v) {
        VertexSet s(universe);
        s.add(v);
        return s;
    }

    static VertexSet from_bits(int universe, std::uint64_t bits) {
        VertexSet s(universe);
        assert(universe == 64 || (bits >> universe) == 0);
        s.bits_ = bits;
        return s;
    }

    int universe() const { return n_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }

    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (bits_ >> v) & 1u;
    }

    void add(int v) {
        assert(v >= 0 && v < n_);
        bits_ |= 1ull << v;
    }

    void remove(int v) {
        assert(v >= 0 && v < n_);
        bits_ &= ~(1ull << v);
    }

    /// Smallest member, or -1 when empty.
    int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    bool is_subset_of(const VertexSet& other) const {
        assert(n_ == other.n_);
        return (bits_ & ~other.bits_) == 0;
    }

    bool intersects(const VertexSet& other) const {
        assert(n_ == other.n_);
        return (bits_ & other.bits_) != 0;
    }

    VertexSet operator|(const VertexSet& o) const { return combined(o, bits_ | o.bits_); }
    VertexSet operator&(const VertexSet& o) const { return combined(o, bits_ & o.bits_); }
    VertexSet operator-(const VertexSet& o) const { return combined(o, bits_ & ~o.bits_); }
    /// Symmetric difference; commutative and self-inverse.
    VertexSet operator^(const VertexSet& o) const { return combined(o, bits_ ^ o.bits_); }

    VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }
    VertexSet& operator^=(const VertexSet& o) { return *this = *this ^ o; }

    VertexSet complement() const { return full(n_) - *this; }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet& o) const {
        if (auto c = n_ <=> o.n_; c != 0) return c;
        return bits_ <=> o.bits_;
    }

    // Iteration over members in increasing order.
    class iterator {
    public:
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::string to_string() const {
        std::string out = "{";
        bool sep = false;
        for (int v : *this) {
            if (sep) out += ", ";
            out += std::to_string(v);
            sep = true;
        }
        return out + "}";
    }

private:
    static int checked(int universe) {
        if (universe < 0 || universe > max_universe)
            throw std::length_error("VertexSet universe must be within 0..64");
        return universe;
    }

    VertexSet combined([[maybe_unused]] const VertexSet& o, std::uint64_t bits) const {
        assert(n_ == o.n_);
        VertexSet s(n_);
        s.bits_ = bits;
        return s;
    }

    int n_ = 0;
    std::uint64_t bits_ = 0;
};

}  // namespace oldset
