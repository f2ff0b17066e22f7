#include "rsp/oracle.hpp"

#include <limits>
#include <string>

#include "rsp/errors.hpp"

namespace rsp {

namespace {

// Product of the cycle lengths, saturating at the uint64 ceiling.
std::uint64_t box_size_saturated(const instance& inst, bool& saturated) {
    std::uint64_t count = 1;
    saturated = false;
    for (const item& it : inst.items()) {
        if (__builtin_mul_overflow(count, static_cast<std::uint64_t>(it.cycle_length),
                                   &count)) {
            saturated = true;
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return count;
}

}  // namespace

std::optional<std::uint64_t> assignment_count(const instance& inst, std::uint64_t cap) {
    bool saturated = false;
    const std::uint64_t count = box_size_saturated(inst, saturated);
    if (saturated || count > cap) return std::nullopt;
    return count;
}

oracle_result brute_force_optimum(const instance& inst, std::uint64_t enumeration_budget) {
    bool saturated = false;
    const std::uint64_t count = box_size_saturated(inst, saturated);
    if (saturated || count > enumeration_budget) {
        throw budget_error("brute force refused: " +
                               std::string(saturated ? "more than " : "") +
                               std::to_string(count) + " assignments against a budget of " +
                               std::to_string(enumeration_budget),
                           count);
    }

    oracle_result best;
    for_each_assignment(inst, [&](const assignment& x) {
        const inventory_profile profile = compute_profile(inst, x);
        // Strict comparison keeps the first, lexicographically smallest
        // optimum; the box is never empty, so the first pass always seeds.
        if (best.assignments_evaluated == 0 || profile.peak < best.best_peak) {
            best.best_times = x;
            best.best_peak = profile.peak;
        }
        ++best.assignments_evaluated;
        return true;
    });
    return best;
}

}  // namespace rsp
