// Copyright (c) 2026 the orca authors.
// orca is licensed under the Apache License, Version 2.0.
// SPDX: Apache-2.0

#ifndef ORCA_RNG_HPP
#define ORCA_RNG_HPP

#include <cstdint>

#include "orca/vec.hpp"

namespace orca {

// PCG32: small, fast, and bit-reproducible across platforms, which the
// deterministic-run contract depends on.
class Rng {
  public:
    Rng() { seed(0x853c49e6748fea9bULL, 0xda3e39cb94b95bdbULL); }
    explicit Rng(uint64_t sequence_index) { seed(sequence_index, 0xda3e39cb94b95bdbULL); }
    Rng(uint64_t sequence_index, uint64_t offset) { seed(sequence_index, offset); }

    void seed(uint64_t sequence_index, uint64_t offset) {
        state_ = 0;
        inc_ = (sequence_index << 1u) | 1u;
        next_u32();
        state_ += offset;
        next_u32();
    }

    uint32_t next_u32() {
        uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
        uint32_t rot = static_cast<uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((~rot + 1u) & 31));
    }

    // Bounded draw without modulo bias.
    uint32_t next_u32(uint32_t bound) {
        uint32_t threshold = (~bound + 1u) % bound;
        while (true) {
            uint32_t r = next_u32();
            if (r >= threshold) return r % bound;
        }
    }

    double next_double() { return next_u32() * 0x1p-32; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }
    Vec3 uniform_vec3(double lo, double hi) {
        return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    }
    Vec3 unit_vector() {
        // Rejection sample the ball, normalize.
        while (true) {
            Vec3 v = uniform_vec3(-1.0, 1.0);
            double l2 = length_squared(v);
            if (l2 > 1e-6 && l2 <= 1.0) return v / std::sqrt(l2);
        }
    }

    uint64_t state() const { return state_; }
    uint64_t inc() const { return inc_; }
    void restore(uint64_t state, uint64_t inc) { state_ = state; inc_ = inc; }

  private:
    uint64_t state_ = 0;
    uint64_t inc_ = 0;
};

}  // namespace orca

#endif
