/**
 * @file context.hpp
 * @brief Presented algebras: the Yangian Y(gl_n), its tensor powers, and
 *        tensor powers of U(gl_n).
 *
 * A context owns the generator alphabet, the generator total order and the
 * straightening oracle (commutator of a generator pair).  Contexts are
 * immutable after construction; the oracle memo is a concurrent-read,
 * atomically updated table, so a context may be shared across threads.
 */
#pragma once

#include "yv/rational.hpp"
#include "yv/symbol.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace yv {

enum class AlgebraKind { yangian, enveloping };

enum class Ordering { less, equal, greater };

class AlgebraContext;
using ContextPtr = std::shared_ptr<const AlgebraContext>;

/// Raised when an intermediate computation exceeds the context term cap.
class TermCapError : public std::runtime_error {
public:
    explicit TermCapError(std::size_t cap)
        : std::runtime_error("term cap exceeded (" + std::to_string(cap) + " terms)") {}
};

/// A pair of generators with oracle data; value type of the memo table.
struct StraightenRule {
    // [g, h] as a list of (word, coefficient) with words of length <= 2.
    std::vector<std::pair<Word, Rational>> terms;
};

class AlgebraContext : public std::enable_shared_from_this<AlgebraContext> {
public:
    static ContextPtr yangian(int n, std::size_t term_cap = kDefaultTermCap) {
        return tensor_yangian(n, 1, term_cap);
    }

    static ContextPtr tensor_yangian(int n, int slots, std::size_t term_cap = kDefaultTermCap) {
        check_params(n, slots);
        return ContextPtr(new AlgebraContext(AlgebraKind::yangian, n, slots, term_cap));
    }

    static ContextPtr tensor_enveloping(int n, int slots, std::size_t term_cap = kDefaultTermCap) {
        check_params(n, slots);
        return ContextPtr(new AlgebraContext(AlgebraKind::enveloping, n, slots, term_cap));
    }

    AlgebraKind kind() const { return kind_; }
    int n() const { return n_; }
    int slots() const { return slots_; }
    std::size_t term_cap() const { return term_cap_; }

    bool same_algebra(const AlgebraContext& o) const {
        return kind_ == o.kind_ && n_ == o.n_ && slots_ == o.slots_;
    }

    std::string name() const {
        std::ostringstream os;
        if (kind_ == AlgebraKind::yangian) {
            if (slots_ == 1) {
                os << "Y(" << n_ << ")";
            } else {
                os << "Y(" << n_ << ")^" << slots_;
            }
        } else {
            os << "U(gl_" << n_ << ")^" << slots_;
        }
        return os.str();
    }

    /// Membership check; throws on a symbol outside this alphabet.
    void validate(GenSym g) const {
        if (g.slot() < 1 || g.slot() > slots_ || g.i() < 1 || g.i() > n_ || g.j() < 1 ||
            g.j() > n_)
            throw std::invalid_argument("generator index out of bounds for context " + name());
        if (kind_ == AlgebraKind::yangian) {
            if (g.level() < 1) throw std::invalid_argument("Yangian generator requires level >= 1");
        } else {
            if (g.level() != 0)
                throw std::invalid_argument("enveloping generator carries no level");
        }
    }

    /// Generator total order (slot-major, then (i,j,r) lex).
    Ordering compare(GenSym g, GenSym h) const {
        validate(g);
        validate(h);
        if (g < h) return Ordering::less;
        if (h < g) return Ordering::greater;
        return Ordering::equal;
    }

    /// The commutator [g, h] with T^{(0)} scalars folded in.  Memoized;
    /// results are pure data so the cache only ever grows.
    const StraightenRule& straighten(GenSym g, GenSym h) const {
        const uint64_t kg = g.bits(), kh = h.bits();
        const Key key{kg, kh};
        {
            std::shared_lock lock(memo_mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        StraightenRule rule = compute_bracket(g, h);
        std::unique_lock lock(memo_mutex_);
        return memo_.emplace(key, std::move(rule)).first->second;
    }

    /// Canonical degree of one symbol: level r for Yangian generators,
    /// 1 for enveloping generators.
    int canonical_degree(GenSym g) const {
        return kind_ == AlgebraKind::yangian ? g.level() : 1;
    }

    /// Loop degree of one symbol: r - 1 for Yangian generators, 0 for
    /// enveloping generators.
    int loop_degree(GenSym g) const {
        return kind_ == AlgebraKind::yangian ? g.level() - 1 : 0;
    }

    std::string print_symbol(GenSym g) const {
        std::ostringstream os;
        if (kind_ == AlgebraKind::yangian) {
            if (slots_ > 1) os << '@' << g.slot() << ':';
            os << "T[" << g.i() << ',' << g.j() << ';' << g.level() << ']';
        } else {
            os << "E[" << g.slot() << ';' << g.i() << ',' << g.j() << ']';
        }
        return os.str();
    }

    static constexpr std::size_t kDefaultTermCap = 8'000'000;

private:
    AlgebraContext(AlgebraKind kind, int n, int slots, std::size_t cap)
        : kind_(kind), n_(n), slots_(slots), term_cap_(cap) {}

    static void check_params(int n, int slots) {
        if (n < 1 || n > GenSym::kMaxIndex) throw std::invalid_argument("context: bad n");
        if (slots < 1 || slots > GenSym::kMaxSlot)
            throw std::invalid_argument("context: bad slot count");
    }

    StraightenRule compute_bracket(GenSym g, GenSym h) const {
        validate(g);
        validate(h);
        StraightenRule rule;
        if (g.slot() != h.slot()) return rule;  // distinct tensor slots commute
        if (kind_ == AlgebraKind::enveloping) {
            // [e_{i,j}, e_{h,k}] = delta_{h,j} e_{i,k} - delta_{i,k} e_{h,j}
            const int s = g.slot();
            if (h.i() == g.j())
                rule.terms.emplace_back(Word{GenSym::enveloping(s, g.i(), h.j())}, Rational(1));
            if (g.i() == h.j())
                rule.terms.emplace_back(Word{GenSym::enveloping(s, h.i(), g.j())}, Rational(-1));
            return rule;
        }
        // Yangian: [T_{i,j}^{(r)}, T_{h,k}^{(s)}] =
        //   sum_{t=0}^{min(r,s)-1} ( T_{i,k}^{(r+s-1-t)} T_{h,j}^{(t)}
        //                          - T_{i,k}^{(t)} T_{h,j}^{(r+s-1-t)} ),
        // with T^{(0)} = delta folded into the coefficient.
        const int slot = g.slot();
        const int i = g.i(), j = g.j(), r = g.level();
        const int hh = h.i(), kk = h.j(), ss = h.level();
        const int tmax = std::min(r, ss) - 1;
        for (int t = 0; t <= tmax; ++t) {
            const int top = r + ss - 1 - t;
            // + T_{i,k}^{(top)} T_{h,j}^{(t)}
            if (t == 0) {
                if (hh == j)
                    rule.terms.emplace_back(Word{GenSym::yangian(slot, i, kk, top)}, Rational(1));
            } else {
                rule.terms.emplace_back(
                    Word{GenSym::yangian(slot, i, kk, top), GenSym::yangian(slot, hh, j, t)},
                    Rational(1));
            }
            // - T_{i,k}^{(t)} T_{h,j}^{(top)}
            if (t == 0) {
                if (i == kk)
                    rule.terms.emplace_back(Word{GenSym::yangian(slot, hh, j, top)}, Rational(-1));
            } else {
                rule.terms.emplace_back(
                    Word{GenSym::yangian(slot, i, kk, t), GenSym::yangian(slot, hh, j, top)},
                    Rational(-1));
            }
        }
        return rule;
    }

    struct Key {
        uint64_t a, b;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            uint64_t x = k.a * 0x9e3779b97f4a7c15ull ^ (k.b + 0x7f4a7c15u);
            x ^= x >> 31;
            return static_cast<std::size_t>(x * 0xbf58476d1ce4e5b9ull);
        }
    };

    AlgebraKind kind_;
    int n_;
    int slots_;
    std::size_t term_cap_;
    mutable std::shared_mutex memo_mutex_;
    mutable std::unordered_map<Key, StraightenRule, KeyHash> memo_;
};

}  // namespace yv
