#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rsp/model.hpp"
#include "rsp/prng.hpp"

namespace rsp::test {

inline instance make_instance(const std::vector<std::pair<int, std::int64_t>>& spec) {
    std::vector<item> items;
    items.reserve(spec.size());
    for (const auto& [cycle, size] : spec) items.push_back(item{cycle, size});
    return instance::make(std::move(items));
}

// The two worked instances that most hand-computed expectations refer to.
inline instance instance_a() { return make_instance({{2, 2}, {2, 2}}); }
inline instance instance_b() { return make_instance({{1, 2}, {2, 2}}); }

inline assignment times(std::vector<int> t) {
    return assignment{std::move(t)};
}

// Step-by-step inventory simulation, deliberately independent of the
// closed-form the library evaluates: every item starts full at its first
// delivery and is walked forward one time unit at a time.  `t` may exceed
// the joint cycle to exercise periodicity.
inline rational simulated_level(const instance& inst, const assignment& x, int t) {
    rational total;
    for (std::size_t i = 0; i < inst.items().size(); ++i) {
        const item& it = inst.items()[i];
        const rational per_step(it.reorder_size, it.cycle_length);
        const int first = x.first_order_times[i];
        int target = t;
        while (target < first) target += inst.joint_cycle();
        rational level(it.reorder_size);
        for (int step = first + 1; step <= target; ++step) {
            level -= per_step;
            if ((step - first) % it.cycle_length == 0) level += rational(it.reorder_size);
        }
        total += level;
    }
    return total;
}

// Cycles from [1, max_cycle] keep the joint cycle a divisor of lcm(1..6)=60,
// inside the default guard.
inline instance random_instance(splitmix64& rng, int max_items = 6, int max_cycle = 6,
                                std::int64_t max_size = 20) {
    const int n = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_items)));
    std::vector<item> items;
    items.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        items.push_back(
            item{1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_cycle))),
                 1 + static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(max_size)))});
    }
    return instance::make(std::move(items));
}

inline assignment random_assignment(splitmix64& rng, const instance& inst) {
    assignment x;
    x.first_order_times.reserve(inst.items().size());
    for (const item& it : inst.items()) {
        x.first_order_times.push_back(
            1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(it.cycle_length))));
    }
    return x;
}

}  // namespace rsp::test
