#pragma once

#include <cstdint>
#include <stdexcept>

namespace qcomb {

// SplitMix64: the standard 64-bit mixing generator. Used both as the word
// source for fair-bit streams and as the seed-derivation mixer, so every
// (seed, stream) pair maps to a documented, reproducible bit sequence.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Derivation of independent substreams: substream i of seed s starts from
// mix(s XOR mix(i + golden)), where mix is one SplitMix64 step. Batch results
// therefore do not depend on execution order or thread count.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 a(index + 0x9E3779B97F4A7C15ULL);
    SplitMix64 b(seed ^ a.next());
    return b.next();
}

// A stream of fair bits consumed most-significant-first from successive
// SplitMix64 words. take(k) consumes exactly k bits.
class BitStream {
  public:
    explicit BitStream(std::uint64_t seed) : gen_(seed), buf_(0), left_(0) {}

    // Next k bits (0 <= k <= 64) packed into the low bits of the result.
    std::uint64_t take(int k) {
        if (k < 0 || k > 64) throw std::invalid_argument("BitStream::take: k out of range");
        std::uint64_t r = 0;
        while (k > 0) {
            if (left_ == 0) {
                buf_ = gen_.next();
                left_ = 64;
            }
            int grab = k < left_ ? k : left_;
            r = (grab == 64) ? buf_ >> (64 - grab)
                             : (r << grab) | (buf_ >> (64 - grab));
            buf_ <<= grab == 64 ? 0 : grab;
            if (grab == 64) buf_ = 0;
            left_ -= grab;
            k -= grab;
        }
        return r;
    }

    bool take_bit() { return take(1) != 0; }

    // True iff the next k bits are all zero; consumes exactly k bits even
    // when k > 64 (chunked), preserving stream alignment.
    bool all_zero(int k) {
        bool zero = true;
        while (k > 0) {
            int grab = k < 64 ? k : 64;
            if (take(grab) != 0) zero = false;
            k -= grab;
        }
        return zero;
    }

    // Number of zero bits before the first one bit: P(g = i) = 2^-(i+1).
    int geometric() {
        for (int g = 0; g < (1 << 20); ++g) {
            if (take_bit()) return g;
        }
        throw std::runtime_error("BitStream::geometric: implausible run of zeros");
    }

  private:
    SplitMix64 gen_;
    std::uint64_t buf_;
    int left_;
};

}  // namespace qcomb
