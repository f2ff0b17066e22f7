#pragma once

#include <cstdint>
#include <vector>

#include "rsp/dp.hpp"
#include "rsp/model.hpp"
#include "rsp/rational.hpp"

namespace rsp {

// Everything derived from the accuracy parameter eps' for one instance:
// eps = eps'/2, the scale factor M = eps*D/(k*n), the rounded-down sizes
// s'_i = floor(s_i/M), the scaled demand D' = k*n/eps, and the prefix caps
// floor(l*D').  All rationals are exact; a scaled size may be 0 when
// s_i < M.
struct scale_params {
    rational eps_prime;
    rational eps;
    rational factor;
    std::vector<std::int64_t> scaled_sizes;
    rational scaled_demand;
    std::vector<std::int64_t> scaled_caps;
};

// Bound certificate for an assignment: upper = its peak, lower_bound a
// proven floor on the optimal peak, ratio_bound their quotient.
struct certificate {
    rational upper;
    rational lower_bound;
    rational ratio_bound;
};

struct approx_result {
    assignment times;
    rational value;        // peak with the original sizes
    rational lower_bound;
    rational ratio_bound;  // value / lower_bound; at most 1 + eps'
    scale_params scale;
    dp_stats stats;
};

// Computes the scaling data for `eps_prime` > 0 (throws std::invalid_argument
// otherwise).  D' = k*n/eps does not depend on the sizes at all, which is
// what makes the scaled state space polynomial in n and 1/eps.
scale_params scale_instance(const instance& inst, const rational& eps_prime);

// The approximation scheme: solve the scaled problem exactly, keep its
// reorder times unchanged, and evaluate them against the original sizes.
// The scaled caps floor(l*D') dominate the scaled instance's own cascading
// caps, so the scaled solve never comes back infeasible.
approx_result solve_fptas(const instance& inst, const rational& eps_prime,
                          std::uint64_t state_budget = default_state_budget);

// Cascading feasibility with slack eps*D: sum_{j<=l} Q_j <= l*D + eps*D for
// every prefix l.  eps = 0 is the exact check; eps < 0 throws.
bool relaxed_feasible(const instance& inst, const assignment& x, const rational& eps);

// Certifies an assignment at accuracy eps: upper = V(x), lower_bound =
// max(D, V_k(x) - eps*D), ratio = upper / lower_bound.  For an output of
// solve_fptas the ratio is at most 1 + 2*eps.
certificate certify(const instance& inst, const assignment& x, const rational& eps);

// z' = sum_j (k-j+1) * Q'_j, the weighted order total under scaled sizes.
std::int64_t scaled_objective(const scale_params& scale, const instance& inst,
                              const assignment& x);

// True iff M*z'(x) <= z(x) <= M*z'(x) + eps*k*D, the sandwich relating the
// scaled and original objectives (exact rational comparison).
bool zz_bounds_check(const instance& inst, const scale_params& scale,
                     const assignment& x);

}  // namespace rsp
