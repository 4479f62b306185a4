#ifndef TORIC_INDEX_SET_HPP
#define TORIC_INDEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

/**
 * A finite set of small non-negative indices (facet indices, vertex indices
 * of a simplicial complex), stored as a 64-bit mask.
 *
 * Every combinatorial object in this library has at most 64 facets or
 * vertices; constructors reject anything larger.
 */
class IndexSet
{
public:
    static constexpr int kCapacity = 64;

    constexpr IndexSet() = default;

    IndexSet(std::initializer_list<int> indices)
    {
        for (int i : indices)
            insert(i);
    }

    explicit IndexSet(const std::vector<int>& indices)
    {
        for (int i : indices)
            insert(i);
    }

    static constexpr IndexSet from_bits(std::uint64_t bits)
    {
        IndexSet s;
        s.bits_ = bits;
        return s;
    }

    /// The set {0, ..., count-1}.
    static IndexSet range(int count)
    {
        check(count == 0 ? 0 : count - 1);
        if (count == kCapacity)
            return from_bits(~std::uint64_t{0});
        return from_bits((std::uint64_t{1} << count) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }

    bool contains(int i) const
    {
        return i >= 0 && i < kCapacity && ((bits_ >> i) & 1u) != 0;
    }

    void insert(int i)
    {
        check(i);
        bits_ |= std::uint64_t{1} << i;
    }

    void erase(int i)
    {
        check(i);
        bits_ &= ~(std::uint64_t{1} << i);
    }

    IndexSet with(int i) const
    {
        IndexSet s = *this;
        s.insert(i);
        return s;
    }

    IndexSet without(int i) const
    {
        IndexSet s = *this;
        s.erase(i);
        return s;
    }

    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    bool is_subset_of(const IndexSet& other) const
    {
        return (bits_ & ~other.bits_) == 0;
    }

    bool intersects(const IndexSet& other) const
    {
        return (bits_ & other.bits_) != 0;
    }

    /// Smallest element; the set must be nonempty.
    int front() const { return std::countr_zero(bits_); }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    friend IndexSet operator|(IndexSet a, IndexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend IndexSet operator&(IndexSet a, IndexSet b) { return from_bits(a.bits_ & b.bits_); }
    /// Set difference.
    friend IndexSet operator-(IndexSet a, IndexSet b) { return from_bits(a.bits_ & ~b.bits_); }

    friend bool operator==(IndexSet a, IndexSet b) = default;

    /// Orders by size first, then lexicographically by sorted elements.
    friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b)
    {
        if (auto c = a.size() <=> b.size(); c != 0)
            return c;
        return a.to_vector() <=> b.to_vector();
    }

private:
    static void check(int i)
    {
        if (i < 0 || i >= kCapacity)
            throw DimensionError("index " + std::to_string(i) + " outside supported range [0, 64)");
    }

    std::uint64_t bits_ = 0;
};

}   // namespace toric

template <>
struct std::hash<toric::IndexSet>
{
    std::size_t operator()(const toric::IndexSet& s) const noexcept
    {
        return std::hash<std::uint64_t>{}(s.bits());
    }
};

#endif
