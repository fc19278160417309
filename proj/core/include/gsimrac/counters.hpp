#pragma once

#include <cstdint>

namespace gsimrac {

// Counts elementary algorithmic steps (placements, shifts, traversal moves)
// so tests can confirm the layouts do linear work. Thread-local so parallel
// test shards don't interfere.
class step_counter {
public:
    static void reset() { steps_ = 0; }
    static void bump(std::uint64_t k = 1) { steps_ += k; }
    static std::uint64_t value() { return steps_; }

private:
    static inline thread_local std::uint64_t steps_ = 0;
};

} // namespace gsimrac
