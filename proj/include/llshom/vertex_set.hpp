#ifndef LLSHOM_VERTEX_SET_HPP
#define LLSHOM_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace llshom {

using Vertex = int;

/// A subset of the vertices of a small target graph (at most 64 vertices),
/// stored as a bitmask. Lists L(v) and neighbourhoods N_H(a) use this type.
class VertexSet {
public:
    static constexpr int capacity = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs)
    {
        for (Vertex v : vs) insert(v);
    }

    static VertexSet full(int n)
    {
        check(n == 0 ? 0 : n - 1);
        return VertexSet(n == capacity ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    static VertexSet singleton(Vertex v)
    {
        VertexSet s;
        s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    bool contains(Vertex v) const
    {
        return v >= 0 && v < capacity && ((bits_ >> v) & 1U) != 0;
    }

    void insert(Vertex v)
    {
        check(v);
        bits_ |= std::uint64_t{1} << v;
    }

    void erase(Vertex v)
    {
        if (v >= 0 && v < capacity) bits_ &= ~(std::uint64_t{1} << v);
    }

    /// Lowest element; undefined on the empty set.
    Vertex front() const { return std::countr_zero(bits_); }

    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    std::vector<Vertex> elements() const
    {
        std::vector<Vertex> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Vertex>(std::countr_zero(b)));
    }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    static void check(Vertex v)
    {
        if (v < 0 || v >= capacity)
            throw std::out_of_range("target vertex index outside the supported range 0..63");
    }

    std::uint64_t bits_ = 0;
};

} // namespace llshom

#endif // LLSHOM_VERTEX_SET_HPP
