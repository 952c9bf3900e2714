#pragma once

#include <cstdint>

namespace mimocap {

// Deterministic random stream addressed by (seed, stream_id). The Monte Carlo
// engine gives every trial its own stream, so results do not depend on thread
// count or scheduling. A single stream must be consumed from one thread.
//
// Generator: xoshiro256++ with splitmix64 state derivation.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();
    double uniform01();      // [0, 1)
    double uniform01_pos();  // (0, 1)
    double normal();         // N(0, 1)

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    std::uint64_t s_[4];
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace mimocap
