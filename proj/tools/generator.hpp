#pragma once

#include <cstdint>

#include "rsp/model.hpp"

namespace rsp::cli {

struct gen_params {
    int items = 1;
    int cycle_target = 1;       // every generated cycle divides this
    std::int64_t max_size = 1;  // sizes drawn uniformly from [1, max_size]
    std::uint64_t seed = 0;
};

// Deterministic seeded instance: cycle lengths drawn uniformly from the
// divisors of cycle_target, then sizes from [1, max_size], via splitmix64.
// The joint cycle of the result always divides cycle_target.
instance generate_instance(const gen_params& params, const instance_limits& limits = {});

}  // namespace rsp::cli
