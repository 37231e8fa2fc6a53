#pragma once

#include "signals.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace axiobench {

// Incremental 128-bit hash the reference models use to fingerprint their
// configurations. Two FNV-1a lanes over the same byte stream, decorrelated
// by distinct offsets and a per-byte tweak, plus a final avalanche mix over
// the stream length. Not cryptographic; collision odds are far below
// anything a test run can observe.
class Digest {
public:
    Digest& absorb_byte(std::uint8_t b) {
        h1_ = (h1_ ^ b) * kPrime;
        h2_ = (h2_ ^ static_cast<std::uint8_t>(b ^ 0x5c)) * kPrime;
        ++n_;
        return *this;
    }

    Digest& absorb(std::uint64_t v) {
        for (int i = 0; i < 8; ++i)
            absorb_byte(static_cast<std::uint8_t>(v >> (8 * i)));
        return *this;
    }

    Digest& absorb(std::string_view s) {
        absorb(static_cast<std::uint64_t>(s.size()));
        for (char c : s)
            absorb_byte(static_cast<std::uint8_t>(c));
        return *this;
    }

    Digest& absorb(const Input& x) {
        absorb(static_cast<std::uint64_t>(x.width()));
        for (std::size_t i = 0; i < x.width(); ++i)
            absorb_byte(x.get(i) ? 1 : 0);
        return *this;
    }

    Digest& absorb(const Sequence& s) {
        absorb(static_cast<std::uint64_t>(s.size()));
        for (const Input& x : s.items)
            absorb(x);
        return *this;
    }

    // Non-destructive snapshot: 32 hex characters.
    std::string hex() const {
        const std::uint64_t a = mix_seed(h1_ ^ mix_seed(n_));
        const std::uint64_t b = mix_seed(h2_ + 0x9e3779b97f4a7c15ull * n_);
        static const char* digits = "0123456789abcdef";
        std::string out(32, '0');
        for (int i = 0; i < 16; ++i) {
            out[15 - i] = digits[(a >> (4 * i)) & 0xf];
            out[31 - i] = digits[(b >> (4 * i)) & 0xf];
        }
        return out;
    }

    friend bool operator==(const Digest&, const Digest&) = default;

private:
    static constexpr std::uint64_t kPrime = 0x100000001b3ull;
    std::uint64_t h1_ = 0xcbf29ce484222325ull;
    std::uint64_t h2_ = 0x84222325cbf29ce4ull;
    std::uint64_t n_ = 0;
};

}  // namespace axiobench
