#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rsp/model.hpp"

namespace rsp {

// Input to the generalized cap-vector dynamic program.  Sizes may be zero
// (scaled sizes round down to zero); caps[l-1] bounds the cumulative
// reorder total sum_{j<=l} Q_j.  The same engine solves the exact problem
// and its scaled variant.
struct discrete_problem {
    std::vector<std::int64_t> sizes;
    std::vector<int> cycles;
    int joint_cycle = 1;
    std::vector<std::int64_t> caps;

    int size() const noexcept { return static_cast<int>(sizes.size()); }
};

struct dp_stats {
    std::uint64_t states_visited = 0;   // distinct (h, q) states evaluated
    std::uint64_t value_table_size = 0; // memo entries held at the end
};

struct dp_solution {
    // Best weighted order total, or nullopt when no assignment fits the caps.
    std::optional<std::int64_t> objective;
    assignment times;
    dp_stats stats;
};

inline constexpr std::uint64_t default_state_budget = 100'000'000;

// Discretization of an instance: sizes s_i, caps floor(l*W/k).  Since every
// prefix sum of order quantities is an integer, these integer caps cut
// exactly the same feasible set as the fractional bounds l*D.
discrete_problem build_discrete(const instance& inst);

// Value of the subproblem restricted to the first `h` items under prefix
// caps `q` (length k, componentwise >= 0); nullopt when infeasible.
std::optional<std::int64_t> dp_value(const discrete_problem& problem, int h,
                                     const std::vector<std::int64_t>& q,
                                     std::uint64_t state_budget = default_state_budget);

// Memoized solve over reachable states only, with reconstruction.  Ties
// among optimal reorder timings resolve to the lexicographically smallest
// times vector.  Aborts with budget_error once `state_budget` distinct
// states have been evaluated.
dp_solution solve_discrete(const discrete_problem& problem,
                           std::uint64_t state_budget = default_state_budget);

struct exact_result {
    dp_solution solution;
    rational peak;  // optimal peak storage, recovered via k*V_k + z = C
};

// Exact optimum for an instance: discretize, solve, and convert the
// objective back to a peak through the conservation identity.
exact_result solve_exact(const instance& inst,
                         std::uint64_t state_budget = default_state_budget);

}  // namespace rsp
