#include "rsp/fptas.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "rsp/checked.hpp"
#include "rsp/errors.hpp"

namespace rsp {

namespace {

std::int64_t to_int64(int128 value, const char* what) {
    if (value < std::numeric_limits<std::int64_t>::min() ||
        value > std::numeric_limits<std::int64_t>::max()) {
        throw overflow_error(std::string(what) + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(value);
}

}  // namespace

scale_params scale_instance(const instance& inst, const rational& eps_prime) {
    if (eps_prime <= rational(0)) {
        throw std::invalid_argument("scale_instance: eps_prime must be positive");
    }
    const std::int64_t kn =
        static_cast<std::int64_t>(inst.joint_cycle()) * inst.size();

    scale_params p;
    p.eps_prime = eps_prime;
    p.eps = eps_prime / rational(2);
    p.factor = p.eps * inst.total_demand() / rational(kn);
    p.scaled_demand = rational(kn) / p.eps;

    p.scaled_sizes.reserve(inst.items().size());
    for (const item& it : inst.items()) {
        const rational exact = rational(it.reorder_size) / p.factor;
        p.scaled_sizes.push_back(to_int64(exact.floor(), "scaled size"));
    }
    p.scaled_caps.reserve(static_cast<std::size_t>(inst.joint_cycle()));
    for (int l = 1; l <= inst.joint_cycle(); ++l) {
        const rational cap = rational(l) * p.scaled_demand;
        p.scaled_caps.push_back(to_int64(cap.floor(), "scaled cap"));
    }
    return p;
}

approx_result solve_fptas(const instance& inst, const rational& eps_prime,
                          std::uint64_t state_budget) {
    scale_params scale = scale_instance(inst, eps_prime);

    discrete_problem scaled;
    scaled.sizes = scale.scaled_sizes;
    scaled.cycles.reserve(inst.items().size());
    for (const item& it : inst.items()) scaled.cycles.push_back(it.cycle_length);
    scaled.joint_cycle = inst.joint_cycle();
    scaled.caps = scale.scaled_caps;

    dp_solution sol = solve_discrete(scaled, state_budget);
    if (!sol.objective) {
        // The caps floor(l*D') admit any schedule whose prefix loads stay
        // under l*D, and a staggered schedule always exists.
        throw std::logic_error("solve_fptas: scaled problem reported infeasible");
    }

    approx_result out;
    out.times = std::move(sol.times);
    out.value = compute_profile(inst, out.times).peak;
    const certificate cert = certify(inst, out.times, scale.eps);
    out.lower_bound = cert.lower_bound;
    out.ratio_bound = cert.ratio_bound;
    out.scale = std::move(scale);
    out.stats = sol.stats;
    return out;
}

bool relaxed_feasible(const instance& inst, const assignment& x, const rational& eps) {
    if (eps.is_negative()) {
        throw std::invalid_argument("relaxed_feasible: eps must be nonnegative");
    }
    return cascading_check(inst, x, eps * inst.total_demand()).ok;
}

certificate certify(const instance& inst, const assignment& x, const rational& eps) {
    if (eps.is_negative()) {
        throw std::invalid_argument("certify: eps must be nonnegative");
    }
    const inventory_profile profile = compute_profile(inst, x);
    const rational& end_level = profile.levels.back();  // V_k

    certificate cert;
    cert.upper = profile.peak;
    cert.lower_bound = inst.total_demand();
    const rational shifted = end_level - eps * inst.total_demand();
    if (shifted > cert.lower_bound) cert.lower_bound = shifted;
    cert.ratio_bound = cert.upper / cert.lower_bound;
    return cert;
}

std::int64_t scaled_objective(const scale_params& scale, const instance& inst,
                              const assignment& x) {
    if (!is_valid(inst, x)) {
        throw std::invalid_argument("scaled_objective: invalid assignment");
    }
    const int k = inst.joint_cycle();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < inst.items().size(); ++i) {
        const int cycle = inst.items()[i].cycle_length;
        const std::int64_t size = scale.scaled_sizes[i];
        for (int j = x.first_order_times[i]; j <= k; j += cycle) {
            total = checked_add(total, checked_mul<std::int64_t>(k - j + 1, size));
        }
    }
    return total;
}

bool zz_bounds_check(const instance& inst, const scale_params& scale,
                     const assignment& x) {
    const rational scaled_z =
        scale.factor * rational(scaled_objective(scale, inst, x));
    const rational z = rational(objective_z(inst, x));
    const rational slack = scale.eps *
                           rational(static_cast<std::int64_t>(inst.joint_cycle())) *
                           inst.total_demand();
    return scaled_z <= z && z <= scaled_z + slack;
}

}  // namespace rsp
