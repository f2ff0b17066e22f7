// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Populations are seeded and fixed, so every run sees the same instances.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "generator.hpp"
#include "report.hpp"
#include "rsp/dp.hpp"
#include "rsp/fptas.hpp"
#include "rsp/model.hpp"
#include "rsp/oracle.hpp"
#include "rsp/prng.hpp"
#include "rsp/rational.hpp"
#include "support.hpp"

using namespace rsp;
using cli::format_rational;
using cli::gen_params;
using cli::generate_instance;
using test::make_instance;

namespace {

// Pinned tolerances and population sizes.
constexpr double time_limit_seconds = 300.0;     // criterion 1 runtime ceiling
constexpr int population_size = 500;             // criterion 1 instances
constexpr int guarantee_population = 200;        // criterion 2 instances
constexpr int pair_sweep_rounds = 10'000;        // criteria 3-5 random pairs
constexpr double factor_allowance = 2.0;         // criterion 9 leading-constant slack

struct criterion {
    bool pass = true;
    std::string label;
    std::string detail;
};

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f s", s);
    return buf;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// The seeded acceptance population: n in 2..6, joint cycle dividing one of
// {1,2,3,4,6}, sizes in [1,20].  Small enough for brute force, varied enough
// to exercise every cycle structure the guards allow.
instance population_instance(int idx) {
    static const int cycle_targets[] = {1, 2, 3, 4, 6};
    gen_params p;
    p.items = 2 + idx % 5;
    p.cycle_target = cycle_targets[(idx / 5) % 5];
    p.max_size = 20;
    p.seed = static_cast<std::uint64_t>(1000 + idx);
    return generate_instance(p);
}

// Saturating n * prod(caps[l] + 1).
__int128 state_bound(int n, const std::vector<std::int64_t>& caps) {
    const __int128 hard_cap = static_cast<__int128>(1) << 100;
    __int128 bound = n;
    for (std::int64_t cap : caps) {
        bound *= (cap + 1);
        if (bound > hard_cap) return hard_cap;
    }
    return bound;
}

std::vector<std::int64_t> quantities_with_sizes(const instance& inst,
                                                const std::vector<std::int64_t>& sizes,
                                                const assignment& x) {
    std::vector<std::int64_t> q(static_cast<std::size_t>(inst.joint_cycle()), 0);
    for (std::size_t i = 0; i < inst.items().size(); ++i) {
        for (int j = x.first_order_times[i]; j <= inst.joint_cycle();
             j += inst.items()[i].cycle_length) {
            q[static_cast<std::size_t>(j - 1)] += sizes[i];
        }
    }
    return q;
}

bool prefix_within(const std::vector<std::int64_t>& q, const std::vector<std::int64_t>& caps) {
    std::int64_t prefix = 0;
    for (std::size_t l = 0; l < q.size(); ++l) {
        prefix += q[l];
        if (prefix > caps[l]) return false;
    }
    return true;
}

// All-cycles-equal family used by the criterion 9 growth check.
instance uniform_cycle_instance(int n, int cycle, std::uint64_t seed) {
    splitmix64 rng(0xFAC70 + seed);
    std::vector<std::pair<int, std::int64_t>> spec;
    spec.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        spec.emplace_back(cycle, 1 + static_cast<std::int64_t>(rng.bounded(20)));
    }
    return make_instance(spec);
}

}  // namespace

int main() {
    std::vector<criterion> lines(10);

    // Shared across criteria: exact solves and oracle peaks for the population.
    std::vector<exact_result> exact_runs;
    std::vector<rational> oracle_peaks;
    exact_runs.reserve(population_size);
    oracle_peaks.reserve(population_size);

    // Criterion 1: exact engine vs brute force, with a runtime ceiling.
    {
        criterion& c = lines[0];
        c.label = "exact engine matches brute force";
        const auto start = std::chrono::steady_clock::now();
        int equal = 0;
        for (int idx = 0; idx < population_size; ++idx) {
            const instance inst = population_instance(idx);
            exact_runs.push_back(solve_exact(inst));
            oracle_peaks.push_back(brute_force_optimum(inst).best_peak);
            if (exact_runs.back().peak == oracle_peaks.back()) ++equal;
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        c.pass = equal == population_size && seconds < time_limit_seconds;
        c.detail = std::to_string(equal) + "/" + std::to_string(population_size) +
                   " peaks equal in " + format_seconds(seconds) + " (limit " +
                   format_seconds(time_limit_seconds) + ")";
    }

    // Criteria 2, 6-9 share the approximation runs on the first 200 instances.
    const std::vector<rational> eps_primes = {rational(2), rational(1), rational(1, 2),
                                              rational(1, 5), rational(1, 10)};
    int guarantee_ok = 0, guarantee_total = 0;
    rational worst_ratio(0);
    int transfer_ok = 0, transfer_total = 0;       // criterion 6
    int sandwich_ok = 0, sandwich_total = 0;       // criterion 7
    int zgap_ok = 0, zgap_total = 0;               // criterion 8
    int scaled_bound_ok = 0, scaled_bound_total = 0;  // criterion 9, scaled engine
    for (int idx = 0; idx < guarantee_population; ++idx) {
        const instance inst = population_instance(idx);
        const rational best = oracle_peaks[static_cast<std::size_t>(idx)];
        const std::int64_t exact_z =
            *exact_runs[static_cast<std::size_t>(idx)].solution.objective;
        const rational slack_base =
            rational(inst.joint_cycle()) * inst.total_demand();
        for (const rational& eps_prime : eps_primes) {
            const approx_result r = solve_fptas(inst, eps_prime);
            const rational eps = r.scale.eps;

            ++guarantee_total;
            if (r.value <= (rational(1) + eps_prime) * best) ++guarantee_ok;
            const rational ratio = r.value / best;
            if (ratio > worst_ratio) worst_ratio = ratio;

            ++transfer_total;
            if (relaxed_feasible(inst, r.times, eps)) ++transfer_ok;

            ++sandwich_total;
            const inventory_profile profile = compute_profile(inst, r.times);
            if (zz_bounds_check(inst, r.scale, r.times) &&
                profile.peak <= profile.levels.back() + eps * inst.total_demand()) {
                ++sandwich_ok;
            }

            ++zgap_total;
            if (rational(objective_z(inst, r.times)) >=
                rational(exact_z) - eps * slack_base) {
                ++zgap_ok;
            }

            ++scaled_bound_total;
            if (static_cast<__int128>(r.stats.states_visited) <=
                state_bound(inst.size(), r.scale.scaled_caps)) {
                ++scaled_bound_ok;
            }
        }
    }

    {
        criterion& c = lines[1];
        c.label = "approximation guarantee";
        c.pass = guarantee_ok == guarantee_total;
        c.detail = std::to_string(guarantee_ok) + "/" + std::to_string(guarantee_total) +
                   " runs within (1 + eps'), worst ratio = " + format_rational(worst_ratio);
    }

    // Criteria 3-5: one sweep of random (instance, assignment) pairs.
    {
        int conservation_ok = 0, recurrence_ok = 0, normalize_ok = 0;
        splitmix64 rng(0xACCE97);
        for (int round = 0; round < pair_sweep_rounds; ++round) {
            const instance inst = test::random_instance(rng, 6, 6, 20);
            const assignment x = test::random_assignment(rng, inst);
            const int k = inst.joint_cycle();
            const rational d = inst.total_demand();

            const inventory_profile profile = compute_profile(inst, x);
            const std::int64_t z = objective_z(inst, x);
            const rational vk = profile.levels.back();

            if (rational(k) * vk + rational(z) == conservation_constant(inst)) {
                ++conservation_ok;
            }

            const std::vector<std::int64_t> q = order_quantities(inst, x);
            bool recurrence = true;
            std::int64_t prefix = 0;
            for (int l = 1; l <= k; ++l) {
                prefix += q[static_cast<std::size_t>(l - 1)];
                if (profile.levels[static_cast<std::size_t>(l - 1)] !=
                    vk - rational(l) * d + rational(prefix)) {
                    recurrence = false;
                    break;
                }
            }
            if (recurrence) ++recurrence_ok;

            const assignment shifted = shift_normalize(inst, x);
            const inventory_profile after = compute_profile(inst, shifted);
            if (after.peak == profile.peak && after.levels.back() == after.peak) {
                ++normalize_ok;
            }
        }

        lines[2].label = "conservation identity";
        lines[2].pass = conservation_ok == pair_sweep_rounds;
        lines[2].detail = std::to_string(conservation_ok) + "/" +
                          std::to_string(pair_sweep_rounds) +
                          " pairs with k*V_k + z = C exactly";

        lines[3].label = "level recurrence";
        lines[3].pass = recurrence_ok == pair_sweep_rounds;
        lines[3].detail = std::to_string(recurrence_ok) + "/" +
                          std::to_string(pair_sweep_rounds) +
                          " pairs with V_l = V_k - l*D + prefix orders at every l";

        lines[4].label = "peak normalization by shifting";
        lines[4].pass = normalize_ok == pair_sweep_rounds;
        lines[4].detail = std::to_string(normalize_ok) + "/" +
                          std::to_string(pair_sweep_rounds) +
                          " shifted assignments peak at time k with the same peak";
    }

    // Criteria 6 and 7 also cover randomly sampled scaled-feasible assignments.
    {
        splitmix64 rng(0x5A3D);
        const std::vector<rational> sample_eps = {rational(1), rational(1, 5)};
        int sampled = 0;
        for (int idx = 0; idx < 100; ++idx) {
            const instance inst = population_instance(idx);
            for (const rational& eps_prime : sample_eps) {
                const scale_params scale = scale_instance(inst, eps_prime);
                for (int draw = 0; draw < 20; ++draw) {
                    const assignment x = test::random_assignment(rng, inst);
                    if (!prefix_within(quantities_with_sizes(inst, scale.scaled_sizes, x),
                                       scale.scaled_caps)) {
                        continue;
                    }
                    ++sampled;
                    ++transfer_total;
                    if (relaxed_feasible(inst, x, scale.eps)) ++transfer_ok;
                    ++sandwich_total;
                    const inventory_profile profile = compute_profile(inst, x);
                    if (zz_bounds_check(inst, scale, x) &&
                        profile.peak <=
                            profile.levels.back() + scale.eps * inst.total_demand()) {
                        ++sandwich_ok;
                    }
                }
            }
        }

        lines[5].label = "feasibility transfer from the scaled problem";
        lines[5].pass = transfer_ok == transfer_total;
        lines[5].detail = std::to_string(transfer_ok) + "/" +
                          std::to_string(transfer_total) +
                          " assignments relaxed-feasible (" + std::to_string(sampled) +
                          " sampled scaled-feasible)";

        lines[6].label = "objective sandwich and relaxed peak bound";
        lines[6].pass = sandwich_ok == sandwich_total;
        lines[6].detail = std::to_string(sandwich_ok) + "/" +
                          std::to_string(sandwich_total) +
                          " assignments within both bounds";
    }

    {
        criterion& c = lines[7];
        c.label = "objective gap of scaled solutions";
        c.pass = zgap_ok == zgap_total;
        c.detail = std::to_string(zgap_ok) + "/" + std::to_string(zgap_total) +
                   " runs with z(approx) >= z(exact) - eps*k*D";
    }

    // Criterion 9: absolute state bounds plus the growth-factor check.
    {
        criterion& c = lines[8];
        c.label = "state-space bounds";

        int exact_bound_ok = 0;
        for (int idx = 0; idx < population_size; ++idx) {
            const instance inst = population_instance(idx);
            const exact_result& r = exact_runs[static_cast<std::size_t>(idx)];
            if (static_cast<__int128>(r.solution.stats.states_visited) <=
                state_bound(inst.size(), build_discrete(inst).caps)) {
                ++exact_bound_ok;
            }
        }

        // Fixed joint cycle and size range: doubling n may grow the scaled
        // state count by at most factor_allowance * 2^(k+1), the doubling
        // factor of the n^(k+1) envelope.
        const int cycle = 2;
        const double allowed =
            factor_allowance * static_cast<double>(1 << (cycle + 1));
        double mean_states[3] = {0, 0, 0};
        const int family_sizes[3] = {6, 12, 24};
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            for (int step = 0; step < 3; ++step) {
                const instance inst =
                    uniform_cycle_instance(family_sizes[step], cycle, seed);
                mean_states[step] += static_cast<double>(
                    solve_fptas(inst, rational(1)).stats.states_visited);
            }
        }
        const double grow1 = mean_states[1] / mean_states[0];
        const double grow2 = mean_states[2] / mean_states[1];

        c.pass = exact_bound_ok == population_size &&
                 scaled_bound_ok == scaled_bound_total && grow1 <= allowed &&
                 grow2 <= allowed;
        c.detail = std::to_string(exact_bound_ok) + "/" +
                   std::to_string(population_size) + " exact and " +
                   std::to_string(scaled_bound_ok) + "/" +
                   std::to_string(scaled_bound_total) +
                   " scaled runs under the cap product; doubling growth " +
                   format_double(grow1) + "x, " + format_double(grow2) +
                   "x (allowed " + format_double(allowed) + "x)";
    }

    // Criterion 10: closed-form optima.
    {
        criterion& c = lines[9];
        c.label = "closed-form spot checks";
        int ok = 0, total = 0;
        auto expect = [&](const instance& inst, const rational& want) {
            ++total;
            if (solve_exact(inst).peak == want) ++ok;
        };

        expect(test::instance_a(), rational(3));
        expect(test::instance_b(), rational(4));
        for (int cycle : {1, 2, 3, 4, 6}) {
            for (std::int64_t size : {1, 7, 20}) {
                expect(make_instance({{cycle, size}}), rational(size));
            }
        }
        splitmix64 rng(0xC10);
        for (int n = 2; n <= 6; ++n) {
            std::vector<std::pair<int, std::int64_t>> spec;
            std::int64_t sum = 0;
            for (int i = 0; i < n; ++i) {
                const std::int64_t size = 1 + static_cast<std::int64_t>(rng.bounded(20));
                spec.emplace_back(1, size);
                sum += size;
            }
            expect(make_instance(spec), rational(sum));
        }

        c.pass = ok == total;
        c.detail = std::to_string(ok) + "/" + std::to_string(total) +
                   " optima equal their closed form";
    }

    bool all_pass = true;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const criterion& c = lines[i];
        all_pass = all_pass && c.pass;
        std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
                  << c.label << " -- " << c.detail << '\n';
    }
    std::cout << (all_pass ? "acceptance: all criteria passed"
                           : "acceptance: at least one criterion failed")
              << '\n';
    return all_pass ? 0 : 1;
}
