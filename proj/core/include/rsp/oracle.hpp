#pragma once

#include <cstdint>
#include <optional>

#include "rsp/model.hpp"

namespace rsp {

struct oracle_result {
    assignment best_times;
    rational best_peak;
    std::uint64_t assignments_evaluated = 0;
};

inline constexpr std::uint64_t default_enumeration_budget = 1'000'000;

// Number of assignments in the box, i.e. the product of the cycle lengths,
// or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> assignment_count(const instance& inst,
                                              std::uint64_t cap = default_enumeration_budget);

// Calls `fn` with every assignment in the box, in lexicographic order, each
// exactly once.  `fn` returns false to stop early; the return value says
// whether the sweep ran to completion.
template <typename Fn>
bool for_each_assignment(const instance& inst, Fn&& fn) {
    assignment x;
    x.first_order_times.assign(inst.items().size(), 1);
    for (;;) {
        if (!fn(static_cast<const assignment&>(x))) return false;
        // Odometer step: bump the last coordinate still below its cycle.
        int i = static_cast<int>(x.first_order_times.size()) - 1;
        while (i >= 0 && x.first_order_times[i] == inst.items()[i].cycle_length) {
            x.first_order_times[i] = 1;
            --i;
        }
        if (i < 0) return true;
        ++x.first_order_times[i];
    }
}

// Deliberately naive ground truth: evaluates the simulated inventory peak
// of every assignment and keeps the minimum, ties going to the
// lexicographically smallest times.  Refuses up front with budget_error
// when the box holds more than `enumeration_budget` assignments.
oracle_result brute_force_optimum(const instance& inst,
                                  std::uint64_t enumeration_budget = default_enumeration_budget);

}  // namespace rsp
