#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hochster {

/// Largest supported number of variables / vertices.
inline constexpr int kMaxVariables = 64;

/// A subset of the vertex set {0, ..., n-1}, stored as a 64-bit mask.
///
/// Vertex j (0-based) corresponds to variable x_{j+1} in the text formats.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    /// All vertices 0..n-1.
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr VertexSet singleton(int j) { return VertexSet(std::uint64_t{1} << j); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int j) const { return (bits_ >> j) & 1U; }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    /// Largest member, or -1 for the empty set.
    constexpr int max_element() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

    constexpr VertexSet with(int j) const { return VertexSet(bits_ | (std::uint64_t{1} << j)); }
    constexpr VertexSet without(int j) const { return VertexSet(bits_ & ~(std::uint64_t{1} << j)); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

    /// Members in ascending order.
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
            out.push_back(std::countr_zero(rest));
        }
        return out;
    }

    /// Position of j among the members in ascending order (0-based).
    /// Requires contains(j).
    constexpr int position_of(int j) const {
        return std::popcount(bits_ & ((std::uint64_t{1} << j) - 1));
    }

private:
    std::uint64_t bits_ = 0;
};

/// Numeric order on the masks; the "ascending bit pattern" order.
struct BitPatternLess {
    constexpr bool operator()(VertexSet a, VertexSet b) const { return a.bits() < b.bits(); }
};

/// Lexicographic order on the ascending index sequences of two sets of the
/// same cardinality: {0,3} < {1,2}.
struct LexLess {
    constexpr bool operator()(VertexSet a, VertexSet b) const {
        const std::uint64_t diff = a.bits() ^ b.bits();
        if (diff == 0) {
            return false;
        }
        return (a.bits() & (diff & (~diff + 1))) != 0;
    }
};

/// Renders {1,3} with 1-based vertex labels.
inline std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int j : s.members()) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += std::to_string(j + 1);
    }
    out += '}';
    return out;
}

inline std::ostream& operator<<(std::ostream& os, VertexSet s) { return os << to_string(s); }

inline void check_ambient(int n) {
    if (n <= 0 || n > kMaxVariables) {
        throw std::invalid_argument("number of variables must be in 1..64, got " + std::to_string(n));
    }
}

}  // namespace hochster

template <>
struct std::hash<hochster::VertexSet> {
    std::size_t operator()(hochster::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
