#include "rsp/dp.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "rsp/checked.hpp"

namespace rsp {

namespace {

struct qvec_hash {
    std::size_t operator()(const std::vector<std::int64_t>& q) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
        for (std::int64_t v : q) {
            std::uint64_t u = static_cast<std::uint64_t>(v);
            for (int byte = 0; byte < 8; ++byte) {
                h ^= (u >> (8 * byte)) & 0xffULL;
                h *= 0x100000001b3ULL;
            }
        }
        return static_cast<std::size_t>(h);
    }
};

struct memo_entry {
    std::int64_t value = 0;
    std::int16_t best_tau = -1;  // -1: no feasible timing from this state
};

void validate(const discrete_problem& p) {
    if (p.sizes.empty() || p.sizes.size() != p.cycles.size()) {
        throw std::invalid_argument("discrete_problem: sizes/cycles mismatch or empty");
    }
    if (p.joint_cycle < 1 ||
        p.caps.size() != static_cast<std::size_t>(p.joint_cycle)) {
        throw std::invalid_argument("discrete_problem: caps length must equal joint cycle");
    }
    for (int c : p.cycles) {
        if (c < 1 || p.joint_cycle % c != 0) {
            throw std::invalid_argument("discrete_problem: cycle does not divide joint cycle");
        }
    }
    for (std::int64_t s : p.sizes) {
        if (s < 0) throw std::invalid_argument("discrete_problem: negative size");
    }
    for (std::int64_t c : p.caps) {
        if (c < 0) throw std::invalid_argument("discrete_problem: negative cap");
    }
}

// Memoized recursion over the states that are actually reachable from the
// root cap vector.  State (h, q) holds the best value attainable by items
// h..n-1 when q is the remaining room under each prefix cap; the optimum of
// the whole problem is the value at (0, caps).  Item h's timing choice is
// therefore the outermost max, so taking the smallest optimal timing at
// every replay step yields the lexicographically smallest optimal times.
class dp_engine {
public:
    dp_engine(const discrete_problem& p, std::uint64_t state_budget)
        : p_(p), budget_(state_budget), memo_(p.sizes.size()) {
        const std::int64_t k = p_.joint_cycle;
        coef_base_.reserve(p_.sizes.size());
        coef_step_.reserve(p_.sizes.size());
        for (std::size_t i = 0; i < p_.sizes.size(); ++i) {
            const std::int64_t reorders = k / p_.cycles[i];  // orders per window
            // Weighted total of item i first ordering at tau:
            //   (k*(k/k_i + 1)/2 - (tau-1)*(k/k_i)) * s_i
            // The leading product is even whenever all cycles divide k.
            coef_base_.push_back(checked_mul(checked_mul(k, reorders + 1) / 2, p_.sizes[i]));
            coef_step_.push_back(checked_mul(reorders, p_.sizes[i]));
        }
    }

    std::optional<std::int64_t> value(std::size_t h, const std::vector<std::int64_t>& q) {
        if (h == p_.sizes.size()) return 0;
        auto hit = memo_[h].find(q);
        if (hit != memo_[h].end()) {
            if (hit->second.best_tau < 0) return std::nullopt;
            return hit->second.value;
        }
        if (visited_ >= budget_) {
            throw budget_error(
                "state budget exceeded after " + std::to_string(visited_) +
                    " states; raise the budget or switch to the scaling engine",
                visited_);
        }
        ++visited_;

        memo_entry entry;
        std::vector<std::int64_t> child(q.size());
        for (int tau = 1; tau <= p_.cycles[h]; ++tau) {
            if (!offset_caps(h, tau, q, child)) continue;
            std::optional<std::int64_t> rest = value(h + 1, child);
            if (!rest) continue;
            std::int64_t total = checked_add(coefficient(h, tau), *rest);
            if (entry.best_tau < 0 || total > entry.value) {
                entry.value = total;
                entry.best_tau = static_cast<std::int16_t>(tau);
            }
        }
        auto& stored = memo_[h].emplace(q, entry).first->second;
        if (stored.best_tau < 0) return std::nullopt;
        return stored.value;
    }

    // Replays the recorded timings from the root; valid only after a
    // feasible value(0, caps) call.
    assignment reconstruct(const std::vector<std::int64_t>& caps) {
        assignment times;
        times.first_order_times.reserve(p_.sizes.size());
        std::vector<std::int64_t> q = caps;
        std::vector<std::int64_t> child(q.size());
        for (std::size_t h = 0; h < p_.sizes.size(); ++h) {
            const memo_entry& entry = memo_[h].at(q);
            times.first_order_times.push_back(entry.best_tau);
            offset_caps(h, entry.best_tau, q, child);
            q.swap(child);
        }
        return times;
    }

    dp_stats stats() const {
        dp_stats s;
        s.states_visited = visited_;
        std::uint64_t total = 0;
        for (const auto& level : memo_) total += level.size();
        s.value_table_size = total;
        return s;
    }

private:
    std::int64_t coefficient(std::size_t h, int tau) const {
        return checked_sub(coef_base_[h],
                           checked_mul(static_cast<std::int64_t>(tau - 1), coef_step_[h]));
    }

    // child[l-1] = q[l-1] - (orders of item h in [1..l] when first at tau) * s_h;
    // false when any coordinate would go negative.
    bool offset_caps(std::size_t h, int tau, const std::vector<std::int64_t>& q,
                     std::vector<std::int64_t>& child) const {
        const int cycle = p_.cycles[h];
        const std::int64_t size = p_.sizes[h];
        for (int l = 1; l <= p_.joint_cycle; ++l) {
            std::int64_t orders = (l - tau + cycle) / cycle;
            std::int64_t used;
            if (__builtin_mul_overflow(orders, size, &used)) return false;  // > any cap
            std::int64_t next = q[static_cast<std::size_t>(l - 1)] - used;
            if (next < 0) return false;
            child[static_cast<std::size_t>(l - 1)] = next;
        }
        return true;
    }

    const discrete_problem& p_;
    std::uint64_t budget_;
    std::uint64_t visited_ = 0;
    std::vector<std::int64_t> coef_base_;
    std::vector<std::int64_t> coef_step_;
    std::vector<std::unordered_map<std::vector<std::int64_t>, memo_entry, qvec_hash>> memo_;
};

}  // namespace

discrete_problem build_discrete(const instance& inst) {
    discrete_problem p;
    p.joint_cycle = inst.joint_cycle();
    p.sizes.reserve(inst.items().size());
    p.cycles.reserve(inst.items().size());
    for (const item& it : inst.items()) {
        p.sizes.push_back(it.reorder_size);
        p.cycles.push_back(it.cycle_length);
    }
    const std::int64_t w = inst.demand_numerator();
    p.caps.reserve(static_cast<std::size_t>(p.joint_cycle));
    for (std::int64_t l = 1; l <= p.joint_cycle; ++l) {
        p.caps.push_back(checked_mul(l, w) / p.joint_cycle);
    }
    return p;
}

std::optional<std::int64_t> dp_value(const discrete_problem& problem, int h,
                                     const std::vector<std::int64_t>& q,
                                     std::uint64_t state_budget) {
    validate(problem);
    if (h < 0 || h > problem.size()) {
        throw std::invalid_argument("dp_value: h out of [0, n]");
    }
    if (q.size() != static_cast<std::size_t>(problem.joint_cycle)) {
        throw std::invalid_argument("dp_value: q length must equal joint cycle");
    }
    for (std::int64_t v : q) {
        if (v < 0) throw std::invalid_argument("dp_value: negative q coordinate");
    }
    if (h == 0) return 0;
    discrete_problem prefix;
    prefix.sizes.assign(problem.sizes.begin(), problem.sizes.begin() + h);
    prefix.cycles.assign(problem.cycles.begin(), problem.cycles.begin() + h);
    prefix.joint_cycle = problem.joint_cycle;
    prefix.caps = q;
    dp_engine engine(prefix, state_budget);
    return engine.value(0, q);
}

dp_solution solve_discrete(const discrete_problem& problem, std::uint64_t state_budget) {
    validate(problem);
    dp_engine engine(problem, state_budget);
    dp_solution solution;
    std::optional<std::int64_t> best = engine.value(0, problem.caps);
    solution.objective = best;
    if (best) solution.times = engine.reconstruct(problem.caps);
    solution.stats = engine.stats();
    return solution;
}

exact_result solve_exact(const instance& inst, std::uint64_t state_budget) {
    exact_result result;
    result.solution = solve_discrete(build_discrete(inst), state_budget);
    if (!result.solution.objective) {
        // A cascading-feasible assignment always exists (shift any valid one),
        // so an infeasible report here is an engine defect.
        throw std::logic_error("solve_exact: engine reported infeasible for a valid instance");
    }
    result.peak = (conservation_constant(inst) - rational(*result.solution.objective)) /
                  rational(inst.joint_cycle());
    return result;
}

}  // namespace rsp
