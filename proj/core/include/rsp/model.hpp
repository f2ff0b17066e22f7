#pragma once

#include <cstdint>
#include <vector>

#include "rsp/rational.hpp"

namespace rsp {

// One stocked item: a reorder of `reorder_size` storage units lands every
// `cycle_length` time units, and demand depletes it linearly in between.
struct item {
    int cycle_length = 1;
    std::int64_t reorder_size = 1;

    friend bool operator==(const item&, const item&) = default;
};

// Caps on acceptable instances.  Every engine is exponential in the joint
// cycle, so the lcm guard is load-bearing; the size caps keep all exact
// arithmetic inside checked 128-bit range.
struct instance_limits {
    int max_joint_cycle = 60;
    int max_items = 10'000;
    std::int64_t max_reorder_size = 1'000'000;
};

// Least common multiple of the cycle lengths, guarded by `cap`.
// Throws cycle_cap_error when the lcm exceeds the cap.
int joint_cycle(const std::vector<int>& cycles, int cap = instance_limits{}.max_joint_cycle);

// An instance plus its derived quantities: joint cycle k, total demand per
// unit of time D = sum s_i/k_i, and the integer W = k*D.
class instance {
public:
    static instance make(std::vector<item> items, const instance_limits& limits = {});

    const std::vector<item>& items() const noexcept { return items_; }
    int size() const noexcept { return static_cast<int>(items_.size()); }
    int joint_cycle() const noexcept { return joint_cycle_; }
    const rational& total_demand() const noexcept { return total_demand_; }
    std::int64_t demand_numerator() const noexcept { return demand_numerator_; }

    friend bool operator==(const instance& a, const instance& b) {
        return a.items_ == b.items_;
    }

private:
    instance() = default;

    std::vector<item> items_;
    int joint_cycle_ = 1;
    rational total_demand_;
    std::int64_t demand_numerator_ = 0;  // W = k * D
};

// First reorder time per item, t_i in [1, k_i].  Item i then reorders at
// every time j in [1, k] with j == t_i (mod k_i); this compact encoding is
// what the n-by-k order matrix collapses to once each row must repeat with
// period k_i.
struct assignment {
    std::vector<int> first_order_times;

    friend bool operator==(const assignment&, const assignment&) = default;
};

// Inventory levels V_1..V_k immediately after the deliveries at each time,
// the peak value, and the smallest time attaining it.
struct inventory_profile {
    std::vector<rational> levels;
    rational peak;
    int peak_time = 0;
};

struct cascading_result {
    bool ok = false;
    // max over prefixes of (sum_{j<=l} Q_j - l*D); negative when every
    // prefix is strictly under its cap.
    rational max_violation;
};

// True iff every first-order time is in [1, k_i].  Throws on length mismatch.
bool is_valid(const instance& inst, const assignment& x);

// Total reorder size landing at each time j = 1..k.
std::vector<std::int64_t> order_quantities(const instance& inst, const assignment& x);

// Inventory level at integer `time` in [1, k]: each item holds
// s_i - (s_i/k_i) * ((time - t_i) mod k_i).
rational inventory_level(const instance& inst, const assignment& x, int time);

inventory_profile compute_profile(const instance& inst, const assignment& x);

// z = sum_j (k-j+1) * Q_j.  Larger z means earlier (front-loaded) orders;
// k*V_k + z is conserved across assignments.
std::int64_t objective_z(const instance& inst, const assignment& x);

// The conserved constant C = sum_i (1 + 1/k_i)*k*s_i/2 + (1+k)*k*D/2 with
// k*V_k(x) + z(x) = C for every valid assignment.
rational conservation_constant(const instance& inst);

// Cyclically shifts the schedule so the former peak time lands at time k:
// t'_i = ((t_i - peak_time - 1) mod k_i) + 1.  The result is valid and
// satisfies V_k(x') = V(x') = V(x).
assignment shift_normalize(const instance& inst, const assignment& x);

// Prefix feasibility sum_{j<=l} Q_j <= l*D + slack for all l, plus the
// worst violation.  slack = 0 checks the exact cascading constraints,
// slack = eps*D the relaxed ones.
cascading_result cascading_check(const instance& inst, const assignment& x,
                                 const rational& slack);

}  // namespace rsp
