#include "generator.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "rsp/errors.hpp"
#include "rsp/prng.hpp"

namespace rsp::cli {

instance generate_instance(const gen_params& params, const instance_limits& limits) {
    if (params.items < 1 || params.items > limits.max_items) {
        throw std::invalid_argument("generate_instance: items out of range");
    }
    if (params.cycle_target < 1) {
        throw std::invalid_argument("generate_instance: cycle target must be >= 1");
    }
    if (params.cycle_target > limits.max_joint_cycle) {
        throw cycle_cap_error("cycle target " + std::to_string(params.cycle_target) +
                                  " exceeds cap " + std::to_string(limits.max_joint_cycle),
                              params.cycle_target, limits.max_joint_cycle);
    }
    if (params.max_size < 1 || params.max_size > limits.max_reorder_size) {
        throw std::invalid_argument("generate_instance: max size out of range");
    }

    std::vector<int> divisors;
    for (int d = 1; d <= params.cycle_target; ++d) {
        if (params.cycle_target % d == 0) divisors.push_back(d);
    }

    // Draw order is part of the reproducibility contract: cycle first, then
    // size, item by item.
    splitmix64 rng(params.seed);
    std::vector<item> items;
    items.reserve(static_cast<std::size_t>(params.items));
    for (int i = 0; i < params.items; ++i) {
        item it;
        it.cycle_length = divisors[static_cast<std::size_t>(rng.bounded(divisors.size()))];
        it.reorder_size =
            1 + static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(params.max_size)));
        items.push_back(it);
    }
    return instance::make(std::move(items), limits);
}

}  // namespace rsp::cli
