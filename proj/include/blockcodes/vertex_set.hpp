#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace blockcodes {

using Vertex = int;

/// Hard cap on graph order. Every vertex set is one machine word.
inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., 63} stored as a 64-bit mask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    static VertexSet range(int n) {
        if (n < 0 || n > kMaxVertices) throw std::out_of_range("VertexSet::range: n out of range");
        return VertexSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet singleton(Vertex v) {
        VertexSet s;
        s.insert(v);
        return s;
    }
    static VertexSet from_vector(const std::vector<Vertex>& vs) {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    /// Least element; undefined on the empty set.
    constexpr Vertex front() const { return std::countr_zero(bits_); }

    void insert(Vertex v) {
        check(v);
        bits_ |= std::uint64_t{1} << v;
    }
    void erase(Vertex v) {
        check(v);
        bits_ &= ~(std::uint64_t{1} << v);
    }

    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Lexicographic order on sorted element lists (not numeric order of the mask).
    friend bool lex_less(VertexSet a, VertexSet b) {
        while (!a.empty() && !b.empty()) {
            Vertex x = a.front();
            Vertex y = b.front();
            if (x != y) return x < y;
            a.erase(x);
            b.erase(y);
        }
        return a.empty() && !b.empty();
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for (Vertex v : *this) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (Vertex v : *this) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    static void check(Vertex v) {
        if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex index out of range: " + std::to_string(v));
    }

    std::uint64_t bits_ = 0;
};

}  // namespace blockcodes
