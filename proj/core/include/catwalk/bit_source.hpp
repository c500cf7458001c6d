#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "catwalk/integers.hpp"

namespace catwalk {

// Supplier of fair random bits with consumption accounting. The counter is
// what makes the random-bit cost of sampling observable: one uniform draw
// below K ideally needs log2(K) bits, and the rejection scheme used here
// stays within a factor of two of that on average.
//
// A source is single-consumer; concurrent samplers each own their own.
class BitSource {
public:
    virtual ~BitSource() = default;

    /// Next fair bit, 0 or 1. Increments bits_consumed() by exactly one.
    int next_bit() {
        ++consumed_;
        return draw();
    }

    std::uint64_t bits_consumed() const { return consumed_; }

protected:
    virtual int draw() = 0;

private:
    std::uint64_t consumed_ = 0;
};

// Deterministic pseudorandom bits from a 64-bit seed. The stream is defined
// as: seed a std::mt19937_64 with the seed value, draw 64-bit words, emit
// each word's bits most-significant first. mt19937_64 is fully specified by
// the C++ standard, so a given seed yields the same stream on every
// platform and in every run.
class SeededBitSource final : public BitSource {
public:
    explicit SeededBitSource(std::uint64_t seed) : engine_(seed) {}

private:
    int draw() override {
        if (remaining_ == 0) {
            word_ = engine_();
            remaining_ = 64;
        }
        --remaining_;
        return static_cast<int>((word_ >> remaining_) & 1u);
    }

    std::mt19937_64 engine_;
    std::uint64_t word_ = 0;
    int remaining_ = 0;
};

// Replays a fixed bit string; used to pin down exact sampling behavior in
// tests. Throws std::out_of_range once the string is exhausted.
class ReplayBitSource final : public BitSource {
public:
    /// bits: string over {'0', '1'}.
    explicit ReplayBitSource(std::string_view bits);

    /// Parses a hex string (e.g. "a3f"), four bits per digit, MSB first.
    static ReplayBitSource from_hex(std::string_view hex);

    std::size_t remaining() const { return bits_.size() - position_; }

private:
    int draw() override;

    std::string bits_;
    std::size_t position_ = 0;
};

// Exactly uniform value in [0, K): draw ceil(log2 K) bits MSB-first, accept
// if the value is below K, otherwise discard all of them and redraw. K = 1
// consumes no bits. Expected attempts < 2 for every K.
Natural uniform_below(const Natural& k, BitSource& source);

}  // namespace catwalk
