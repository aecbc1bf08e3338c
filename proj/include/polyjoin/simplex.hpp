#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace polyjoin {

/// Largest ground set any complex may live on. Faces are stored as 64-bit masks.
inline constexpr std::size_t kMaxGroundSize = 64;

/// A finite set of ground-set positions, stored as a bitmask.
///
/// Used for faces, non-faces and the index subsets (I, J, sigma, tau, ...) that
/// every formula in the library enumerates.
class Simplex {
public:
    constexpr Simplex() = default;
    constexpr explicit Simplex(std::uint64_t bits) : bits_(bits) {}

    static Simplex of(std::initializer_list<std::size_t> positions) {
        Simplex s;
        for (std::size_t p : positions) s = s.with(p);
        return s;
    }

    /// The set {0, ..., n-1}.
    static constexpr Simplex range(std::size_t n) {
        if (n > kMaxGroundSize) throw std::out_of_range("ground set larger than 64 vertices");
        return Simplex(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(std::size_t p) const { return p < 64 && ((bits_ >> p) & 1u); }
    constexpr bool subset_of(Simplex other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint(Simplex other) const { return (bits_ & other.bits_) == 0; }

    Simplex with(std::size_t p) const {
        if (p >= kMaxGroundSize) throw std::out_of_range("vertex position out of range");
        return Simplex(bits_ | (std::uint64_t{1} << p));
    }
    constexpr Simplex without(std::size_t p) const { return Simplex(bits_ & ~(std::uint64_t{1} << p)); }

    /// Lowest member. Undefined on the empty set.
    constexpr std::size_t lowest() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

    std::vector<std::size_t> positions() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    constexpr Simplex operator|(Simplex o) const { return Simplex(bits_ | o.bits_); }
    constexpr Simplex operator&(Simplex o) const { return Simplex(bits_ & o.bits_); }
    constexpr Simplex operator-(Simplex o) const { return Simplex(bits_ & ~o.bits_); }
    constexpr Simplex& operator|=(Simplex o) { bits_ |= o.bits_; return *this; }

    constexpr bool operator==(const Simplex&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Canonical face order: by cardinality, then lexicographic on sorted positions.
constexpr bool face_order_less(Simplex a, Simplex b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a == b) return false;
    // For equal cardinality the first differing position is the lowest bit of a ^ b.
    Simplex diff(a.bits() ^ b.bits());
    return a.contains(diff.lowest());
}

/// Pure lexicographic order on sorted position lists (a proper prefix sorts first).
inline bool lex_less(Simplex a, Simplex b) {
    auto pa = a.positions();
    auto pb = b.positions();
    return pa < pb;
}

struct FaceOrder {
    constexpr bool operator()(Simplex a, Simplex b) const { return face_order_less(a, b); }
};

/// Calls fn(sub) for every subset of `set`, starting from the empty set.
template <class Fn>
void for_each_subset(Simplex set, Fn&& fn) {
    const std::uint64_t full = set.bits();
    std::uint64_t sub = 0;
    while (true) {
        fn(Simplex(sub));
        if (sub == full) break;
        sub = (sub - full) & full;
    }
}

/// Maps a subset of `support` onto positions 0..|support|-1, preserving order.
inline Simplex compress(Simplex s, Simplex support) {
    std::uint64_t out = 0;
    std::size_t k = 0;
    for (std::uint64_t b = support.bits(); b != 0; b &= b - 1, ++k) {
        if (s.contains(static_cast<std::size_t>(std::countr_zero(b)))) out |= std::uint64_t{1} << k;
    }
    return Simplex(out);
}

/// Inverse of compress: spreads positions 0..|support|-1 back onto `support`.
inline Simplex expand(Simplex s, Simplex support) {
    std::uint64_t out = 0;
    std::size_t k = 0;
    for (std::uint64_t b = support.bits(); b != 0; b &= b - 1, ++k) {
        if (s.contains(k)) out |= b & (~b + 1);
    }
    return Simplex(out);
}

/// Shifts every member up by `offset` (used to place a block inside a composed ground set).
inline Simplex shifted(Simplex s, std::size_t offset) {
    if (s.empty()) return s;
    if (offset + 64 - static_cast<std::size_t>(std::countl_zero(s.bits())) > kMaxGroundSize)
        throw std::out_of_range("composed ground set larger than 64 vertices");
    return Simplex(s.bits() << offset);
}

}  // namespace polyjoin
