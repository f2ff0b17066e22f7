#include "rsp/model.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "rsp/checked.hpp"

namespace rsp {

namespace {

// Time units since item i's latest reorder, at integer time `t` (1-based).
int elapsed_since_order(int t, int first_order, int cycle) {
    int m = (t - first_order) % cycle;
    return m < 0 ? m + cycle : m;
}

void require_valid(const instance& inst, const assignment& x) {
    if (!is_valid(inst, x)) {
        throw std::invalid_argument("assignment: first-order time out of range");
    }
}

}  // namespace

int joint_cycle(const std::vector<int>& cycles, int cap) {
    if (cycles.empty()) throw std::invalid_argument("joint_cycle: empty cycle list");
    long long lcm = 1;
    for (int c : cycles) {
        if (c < 1) throw std::invalid_argument("joint_cycle: cycle length must be >= 1");
        lcm = std::lcm(lcm, static_cast<long long>(c));
        if (lcm > cap) {
            throw cycle_cap_error("joint cycle " + std::to_string(lcm) +
                                      " exceeds cap " + std::to_string(cap),
                                  static_cast<int>(lcm > INT32_MAX ? INT32_MAX : lcm), cap);
        }
    }
    return static_cast<int>(lcm);
}

instance instance::make(std::vector<item> items, const instance_limits& limits) {
    if (items.empty()) throw std::invalid_argument("instance: no items");
    if (static_cast<int>(items.size()) > limits.max_items) {
        throw std::invalid_argument("instance: more than " +
                                    std::to_string(limits.max_items) + " items");
    }
    std::vector<int> cycles;
    cycles.reserve(items.size());
    for (const item& it : items) {
        if (it.cycle_length < 1) {
            throw std::invalid_argument("instance: cycle length must be >= 1");
        }
        if (it.reorder_size < 1) {
            throw std::invalid_argument("instance: reorder size must be >= 1");
        }
        if (it.reorder_size > limits.max_reorder_size) {
            throw std::invalid_argument("instance: reorder size exceeds cap " +
                                        std::to_string(limits.max_reorder_size));
        }
        cycles.push_back(it.cycle_length);
    }
    instance inst;
    inst.joint_cycle_ = rsp::joint_cycle(cycles, limits.max_joint_cycle);
    std::int64_t w = 0;  // W = k*D = sum s_i * (k/k_i), integral by construction
    for (const item& it : items) {
        w = checked_add(w, checked_mul(it.reorder_size,
                                       static_cast<std::int64_t>(inst.joint_cycle_ / it.cycle_length)));
    }
    inst.demand_numerator_ = w;
    inst.total_demand_ = rational(w, inst.joint_cycle_);
    inst.items_ = std::move(items);
    return inst;
}

bool is_valid(const instance& inst, const assignment& x) {
    if (x.first_order_times.size() != inst.items().size()) {
        throw std::invalid_argument("assignment: length does not match item count");
    }
    for (std::size_t i = 0; i < inst.items().size(); ++i) {
        int t = x.first_order_times[i];
        if (t < 1 || t > inst.items()[i].cycle_length) return false;
    }
    return true;
}

std::vector<std::int64_t> order_quantities(const instance& inst, const assignment& x) {
    require_valid(inst, x);
    std::vector<std::int64_t> q(static_cast<std::size_t>(inst.joint_cycle()), 0);
    for (std::size_t i = 0; i < inst.items().size(); ++i) {
        const item& it = inst.items()[i];
        for (int j = x.first_order_times[i]; j <= inst.joint_cycle(); j += it.cycle_length) {
            q[static_cast<std::size_t>(j - 1)] =
                checked_add(q[static_cast<std::size_t>(j - 1)], it.reorder_size);
        }
    }
    return q;
}

rational inventory_level(const instance& inst, const assignment& x, int time) {
    require_valid(inst, x);
    if (time < 1 || time > inst.joint_cycle()) {
        throw std::invalid_argument("inventory_level: time out of [1, k]");
    }
    rational level;
    for (std::size_t i = 0; i < inst.items().size(); ++i) {
        const item& it = inst.items()[i];
        int elapsed = elapsed_since_order(time, x.first_order_times[i], it.cycle_length);
        // s_i - (s_i/k_i)*elapsed, as one exact term
        level += rational(checked_mul(it.reorder_size,
                                      static_cast<std::int64_t>(it.cycle_length - elapsed)),
                          it.cycle_length);
    }
    return level;
}

inventory_profile compute_profile(const instance& inst, const assignment& x) {
    require_valid(inst, x);
    inventory_profile profile;
    profile.levels.reserve(static_cast<std::size_t>(inst.joint_cycle()));
    for (int t = 1; t <= inst.joint_cycle(); ++t) {
        profile.levels.push_back(inventory_level(inst, x, t));
        if (profile.peak_time == 0 || profile.levels.back() > profile.peak) {
            profile.peak = profile.levels.back();
            profile.peak_time = t;
        }
    }
    return profile;
}

std::int64_t objective_z(const instance& inst, const assignment& x) {
    std::vector<std::int64_t> q = order_quantities(inst, x);
    std::int64_t z = 0;
    for (int j = 1; j <= inst.joint_cycle(); ++j) {
        z = checked_add(z, checked_mul(static_cast<std::int64_t>(inst.joint_cycle() - j + 1),
                                       q[static_cast<std::size_t>(j - 1)]));
    }
    return z;
}

rational conservation_constant(const instance& inst) {
    const std::int64_t k = inst.joint_cycle();
    rational c;
    for (const item& it : inst.items()) {
        // (1 + 1/k_i) * k * s_i / 2
        c += rational(checked_mul(checked_mul(k, static_cast<std::int64_t>(it.cycle_length + 1)),
                                  it.reorder_size),
                      checked_mul<std::int64_t>(2, it.cycle_length));
    }
    c += rational(checked_mul(k + 1, k), 2) * inst.total_demand();
    return c;
}

assignment shift_normalize(const instance& inst, const assignment& x) {
    const int peak_time = compute_profile(inst, x).peak_time;
    assignment shifted;
    shifted.first_order_times.reserve(x.first_order_times.size());
    for (std::size_t i = 0; i < inst.items().size(); ++i) {
        const int cycle = inst.items()[i].cycle_length;
        int t = (x.first_order_times[i] - peak_time - 1) % cycle;
        if (t < 0) t += cycle;
        shifted.first_order_times.push_back(t + 1);
    }
    return shifted;
}

cascading_result cascading_check(const instance& inst, const assignment& x,
                                 const rational& slack) {
    if (slack.is_negative()) {
        throw std::invalid_argument("cascading_check: negative slack");
    }
    std::vector<std::int64_t> q = order_quantities(inst, x);
    cascading_result result;
    std::int64_t prefix = 0;
    for (int l = 1; l <= inst.joint_cycle(); ++l) {
        prefix = checked_add(prefix, q[static_cast<std::size_t>(l - 1)]);
        rational violation = rational(prefix) - rational(l) * inst.total_demand();
        if (l == 1 || violation > result.max_violation) result.max_violation = violation;
    }
    result.ok = result.max_violation <= slack;
    return result;
}

}  // namespace rsp
