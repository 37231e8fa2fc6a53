#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace axiobench {

using BigInt = boost::multiprecision::cpp_int;

// Deterministic random source. Only raw mt19937_64 draws are used; the
// helpers below are hand-rolled because std::uniform_int_distribution is
// not bit-reproducible across standard libraries, while the engine is.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    bool bit() { return (next_u64() >> 63) != 0; }

    // Uniform in [0, bound). Rejects the low sliver that would bias the
    // modulus.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            throw std::invalid_argument("Rng::below: bound must be positive");
        if ((bound & (bound - 1)) == 0)
            return next_u64() & (bound - 1);
        const std::uint64_t cutoff = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= cutoff)
                return r % bound;
        }
    }

    // Uniform in [lo, hi], inclusive.
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
        if (lo > hi)
            throw std::invalid_argument("Rng::between: empty range");
        return lo + below(hi - lo + 1);
    }

    // Uniform in [0, bound) for arbitrary-precision bounds: draw exactly
    // bit_length(bound) random bits and reject overshoots (< 2 expected
    // rounds).
    BigInt big_below(const BigInt& bound) {
        if (bound <= 0)
            throw std::invalid_argument("Rng::big_below: bound must be positive");
        if (bound == 1)
            return BigInt(0);
        const std::size_t bits = boost::multiprecision::msb(bound) + 1;
        const std::size_t words = (bits + 63) / 64;
        const std::size_t excess = words * 64 - bits;
        for (;;) {
            BigInt v = 0;
            for (std::size_t w = 0; w < words; ++w) {
                v <<= 64;
                v |= next_u64();
            }
            v >>= excess;
            if (v < bound)
                return v;
        }
    }

private:
    std::mt19937_64 engine_;
};

// splitmix64 finalizer; used to derive independent per-trial seeds from a
// master seed without correlations between nearby inputs.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index = 0) {
    std::uint64_t h = mix_seed(master);
    h = mix_seed(h ^ (0x100000001b3ull * stream));
    h = mix_seed(h ^ (0xc2b2ae3d27d4eb4full * index));
    return h;
}

// One time step of parallel binary channels.
class Input {
public:
    Input() = default;
    explicit Input(std::size_t width) : bits_(width, 0) {}

    static Input from_string(std::string_view s) {
        Input x(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                x.bits_[i] = 1;
            else if (s[i] != '0')
                throw std::invalid_argument("Input::from_string: expected only '0'/'1'");
        }
        return x;
    }

    std::size_t width() const { return bits_.size(); }

    bool get(std::size_t i) const { return bits_.at(i) != 0; }

    void set(std::size_t i, bool v) { bits_.at(i) = v ? 1 : 0; }

    bool any() const {
        for (auto b : bits_)
            if (b)
                return true;
        return false;
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto b : bits_)
            n += b;
        return n;
    }

    std::string to_string() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i])
                s[i] = '1';
        return s;
    }

    const std::vector<std::uint8_t>& raw() const { return bits_; }

    friend bool operator==(const Input&, const Input&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Channels firing in both a and b simultaneously.
inline std::size_t overlap(const Input& a, const Input& b) {
    if (a.width() != b.width())
        throw std::invalid_argument("overlap: width mismatch");
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.width(); ++i)
        n += (a.get(i) && b.get(i)) ? 1 : 0;
    return n;
}

struct Sequence {
    std::vector<Input> items;
    bool cyclic = false;

    std::size_t size() const { return items.size(); }
    bool empty() const { return items.empty(); }
    std::size_t width() const { return items.empty() ? 0 : items.front().width(); }

    const Input& operator[](std::size_t i) const { return items[i]; }
    Input& operator[](std::size_t i) { return items[i]; }

    friend bool operator==(const Sequence&, const Sequence&) = default;
};

// Item-wise equality, ignoring the cyclic flag.
inline bool same_items(const Sequence& a, const Sequence& b) {
    return a.items == b.items;
}

// Linear concatenation.
inline Sequence concat(const Sequence& a, const Sequence& b) {
    if (!a.empty() && !b.empty() && a.width() != b.width())
        throw std::invalid_argument("concat: width mismatch");
    Sequence out;
    out.items.reserve(a.size() + b.size());
    out.items.insert(out.items.end(), a.items.begin(), a.items.end());
    out.items.insert(out.items.end(), b.items.begin(), b.items.end());
    return out;
}

// No channel may fire in two consecutive steps; a cyclic sequence also pairs
// its last item with its first (a single-item cycle pairs the item with
// itself, so it must be silent).
inline bool is_admissible(const Sequence& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (overlap(s.items[i], s.items[i + 1]) != 0)
            return false;
    if (s.cyclic && !s.empty() &&
        overlap(s.items.back(), s.items.front()) != 0)
        return false;
    return true;
}

// Count of agreeing bit positions between two equal-shape sequences.
inline std::size_t match_score(const Sequence& a, const Sequence& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("match_score: length mismatch");
    std::size_t total = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const Input& x = a.items[j];
        const Input& y = b.items[j];
        if (x.width() != y.width())
            throw std::invalid_argument("match_score: width mismatch");
        for (std::size_t i = 0; i < x.width(); ++i)
            total += (x.get(i) == y.get(i)) ? 1 : 0;
    }
    return total;
}

// Uniformly random input different from x.
inline Input corrupt(const Input& x, Rng& rng) {
    if (x.width() == 0)
        throw std::invalid_argument("corrupt: zero-width input has no alternative");
    for (;;) {
        Input y(x.width());
        for (std::size_t i = 0; i < y.width(); ++i)
            y.set(i, rng.bit());
        if (!(y == x))
            return y;
    }
}

inline BigInt fibonacci(std::uint64_t k) {
    BigInt a = 0, b = 1;  // F0, F1
    for (std::uint64_t i = 0; i < k; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

inline BigInt lucas(std::uint64_t k) {
    BigInt a = 2, b = 1;  // L0, L1
    for (std::uint64_t i = 0; i < k; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

// Exact size of the admissible set: channels are independent refractory 0/1
// chains, so the total is the per-channel count raised to the width.
// Per channel: linear chains of length n are counted by fibonacci(n + 2),
// cyclic ones by lucas(n).
inline BigInt count_admissible(std::size_t width, std::size_t length, bool cyclic) {
    if (length == 0)
        return 1;
    const BigInt per_channel =
        cyclic ? lucas(length) : fibonacci(static_cast<std::uint64_t>(length) + 2);
    return boost::multiprecision::pow(per_channel, static_cast<unsigned>(width));
}

// Independent enumeration oracle. Intentionally shares no code with
// count_admissible or is_admissible: sequences are packed into the bits of a
// counter and adjacency is checked with word masks.
inline BigInt brute_count_admissible(std::size_t width, std::size_t length, bool cyclic) {
    if (width * length > 24)
        throw std::invalid_argument("brute_count_admissible: refuses width*length > 24");
    if (length == 0)
        return 1;
    const std::uint64_t total_bits = static_cast<std::uint64_t>(width) * length;
    const std::uint64_t item_mask = (width == 0) ? 0 : ((1ull << width) - 1);
    BigInt count = 0;
    for (std::uint64_t mask = 0; mask < (1ull << total_bits); ++mask) {
        bool ok = true;
        for (std::size_t j = 0; ok && j + 1 < length; ++j) {
            const std::uint64_t a = (mask >> (j * width)) & item_mask;
            const std::uint64_t b = (mask >> ((j + 1) * width)) & item_mask;
            if (a & b)
                ok = false;
        }
        if (ok && cyclic) {
            const std::uint64_t first = mask & item_mask;
            const std::uint64_t last = (mask >> ((length - 1) * width)) & item_mask;
            if (first & last)
                ok = false;
        }
        if (ok)
            ++count;
    }
    return count;
}

namespace detail {

// Completion counts for one refractory 0/1 chain: from0[i] / from1[i] count
// the ways to fill positions i.. when the previous bit was 0 / 1. With
// end_blocked the final bit may not be 1 (used for cycles whose first bit
// fires).
struct PathTables {
    std::vector<BigInt> from0, from1;
};

inline PathTables refractory_tables(std::size_t n, bool end_blocked) {
    PathTables t;
    t.from0.assign(n + 1, BigInt(0));
    t.from1.assign(n + 1, BigInt(0));
    t.from0[n] = 1;
    t.from1[n] = end_blocked ? 0 : 1;
    for (std::size_t i = n; i-- > 0;) {
        t.from0[i] = t.from0[i + 1] + t.from1[i + 1];
        t.from1[i] = t.from0[i + 1];
    }
    return t;
}

// Writes the r-th chain (in lexicographic order, 0-first) for the given
// start state into out. Requires r < (prev ? from1[0] : from0[0]).
inline void unrank_chain(BigInt r, bool prev, const PathTables& t,
                         std::vector<std::uint8_t>& out) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (prev) {  // refractory: forced silent step, rank untouched
            out[i] = 0;
            prev = false;
            continue;
        }
        const BigInt& weight0 = t.from0[i + 1];
        if (r < weight0) {
            out[i] = 0;
        } else {
            r -= weight0;
            out[i] = 1;
            prev = true;
        }
    }
}

}  // namespace detail

// Exactly uniform draw over all admissible sequences of the given shape.
// Each channel is unranked independently with one big uniform draw against
// the path-count tables, so every admissible sequence has identical
// probability 1 / count_admissible(width, length, cyclic).
inline Sequence random_admissible(Rng& rng, std::size_t width, std::size_t length,
                                  bool cyclic) {
    Sequence s;
    s.cyclic = cyclic;
    s.items.assign(length, Input(width));
    if (length == 0 || width == 0)
        return s;

    if (!cyclic) {
        const auto t = detail::refractory_tables(length, false);
        std::vector<std::uint8_t> chain(length);
        for (std::size_t c = 0; c < width; ++c) {
            detail::unrank_chain(rng.big_below(t.from0[0]), false, t, chain);
            for (std::size_t j = 0; j < length; ++j)
                if (chain[j])
                    s.items[j].set(c, true);
        }
        return s;
    }

    // Cyclic: pick the first bit by weight, then unrank the remaining
    // length-1 positions. A firing first bit forbids firing in both the
    // second position (handled by from1) and the last one (end_blocked).
    const std::size_t rest = length - 1;
    const auto open = detail::refractory_tables(rest, false);
    const auto closed = detail::refractory_tables(rest, true);
    const BigInt weight_first0 = open.from0[0];
    const BigInt total = weight_first0 + closed.from1[0];
    std::vector<std::uint8_t> chain(rest);
    for (std::size_t c = 0; c < width; ++c) {
        BigInt r = rng.big_below(total);
        bool first;
        if (r < weight_first0) {
            first = false;
            detail::unrank_chain(std::move(r), false, open, chain);
        } else {
            first = true;
            r -= weight_first0;
            detail::unrank_chain(std::move(r), true, closed, chain);
        }
        if (first)
            s.items[0].set(c, true);
        for (std::size_t j = 0; j < rest; ++j)
            if (chain[j])
                s.items[j + 1].set(c, true);
    }
    return s;
}

}  // namespace axiobench
