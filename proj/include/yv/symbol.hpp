/**
 * @file symbol.hpp
 * @brief Packed generator symbols and words (free monomials).
 *
 * A generator symbol is one of
 *   - T_{i,j}^{(r)}  living in tensor slot s of a (tensor power of a) Yangian,
 *   - e_{i,j}^{[s]}  living in slot s of a tensor power of U(gl_n).
 *
 * Symbols pack into a single 64-bit word with field order (slot, i, j, r)
 * from the most significant bits down, so that raw integer comparison
 * realizes the generator order of every context: slot-major, then
 * lexicographic by (i, j, r) (levels are absent, i.e. zero, for
 * enveloping symbols).
 */
#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace yv {

class GenSym {
public:
    static constexpr int kMaxIndex = (1 << 10) - 1;  // i, j
    static constexpr int kMaxSlot = (1 << 12) - 1;
    static constexpr int kMaxLevel = (1 << 20) - 1;

    GenSym() : bits_(0) {}

    /// T_{i,j}^{(r)} in tensor slot `slot` (1 for the plain Yangian).
    static GenSym yangian(int slot, int i, int j, int r) {
        check_range(slot, i, j, r);
        if (r < 1) throw std::invalid_argument("GenSym: Yangian level must be >= 1");
        return GenSym(pack(slot, i, j, r));
    }

    /// e_{i,j}^{[s]} in U(gl_n)^{tensor l}.
    static GenSym enveloping(int s, int i, int j) {
        check_range(s, i, j, 0);
        return GenSym(pack(s, i, j, 0));
    }

    int slot() const { return static_cast<int>(bits_ >> 40); }
    int i() const { return static_cast<int>((bits_ >> 30) & 0x3ff); }
    int j() const { return static_cast<int>((bits_ >> 20) & 0x3ff); }
    int level() const { return static_cast<int>(bits_ & 0xfffff); }

    uint64_t bits() const { return bits_; }

    friend auto operator<=>(const GenSym&, const GenSym&) = default;

private:
    explicit GenSym(uint64_t b) : bits_(b) {}

    static uint64_t pack(int slot, int i, int j, int r) {
        return (static_cast<uint64_t>(slot) << 40) | (static_cast<uint64_t>(i) << 30) |
               (static_cast<uint64_t>(j) << 20) | static_cast<uint64_t>(r);
    }

    static void check_range(int slot, int i, int j, int r) {
        if (slot < 1 || slot > kMaxSlot) throw std::invalid_argument("GenSym: slot out of range");
        if (i < 1 || i > kMaxIndex || j < 1 || j > kMaxIndex)
            throw std::invalid_argument("GenSym: matrix index out of range");
        if (r < 0 || r > kMaxLevel) throw std::invalid_argument("GenSym: level out of range");
    }

    uint64_t bits_;
};

/// A word in the generator alphabet; the empty word is the identity.
using Word = boost::container::small_vector<GenSym, 6>;

/// Shortlex order on words: by length, then symbol-wise.  This is the
/// monomial order used for element iteration and printing.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] != b[k]) return a[k] < b[k];
        }
        return false;
    }
};

inline bool word_is_ordered(const Word& w) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k + 1] < w[k]) return false;
    }
    return true;
}

}  // namespace yv
