#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"

#include "generator.hpp"
#include "instance_io.hpp"
#include "report.hpp"
#include "rsp/dp.hpp"
#include "rsp/errors.hpp"
#include "rsp/fptas.hpp"
#include "rsp/model.hpp"
#include "rsp/oracle.hpp"

namespace rsp::cli {

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return std::string(buf) + " ms";
}

void print_summary(std::ostream& out, const std::string& id, const instance& inst) {
    out << "instance: " << id << '\n'
        << "  items n = " << inst.size() << ", joint cycle k = " << inst.joint_cycle()
        << '\n'
        << "  demand per unit time D = " << format_rational(inst.total_demand()) << '\n'
        << "  conservation constant C = " << format_rational(conservation_constant(inst))
        << '\n';
}

rational end_level(const instance& inst, const assignment& x) {
    return inventory_level(inst, x, inst.joint_cycle());
}

void write_csv_file(const std::string& path, std::vector<csv_row> rows) {
    sort_rows(rows);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write CSV file: " + path);
    write_csv(out, rows);
}

csv_row base_row(const std::string& id, const instance& inst) {
    csv_row row;
    row.instance_id = id;
    row.n = inst.size();
    row.k = inst.joint_cycle();
    row.demand = inst.total_demand();
    return row;
}

std::vector<int> parse_times_list(const std::string& text) {
    std::vector<int> times;
    const char* cursor = text.data();
    const char* const end = text.data() + text.size();
    for (;;) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(cursor, end, value);
        if (ec != std::errc() || ptr == cursor) {
            throw std::invalid_argument("--times: expected a comma-separated integer list");
        }
        times.push_back(value);
        cursor = ptr;
        if (cursor == end) return times;
        if (*cursor != ',') {
            throw std::invalid_argument("--times: expected a comma-separated integer list");
        }
        ++cursor;
    }
}

struct file_run_options {
    std::string file;
    std::uint64_t budget = default_state_budget;
    std::string csv_path;
    bool timing = false;
};

void cmd_solve(const file_run_options& opt, std::ostream& out) {
    const instance inst = load_instance(opt.file);
    const auto start = clock_type::now();
    const exact_result res = solve_exact(inst, opt.budget);
    const double ms = elapsed_ms(start);

    out << "command: solve\n";
    print_summary(out, opt.file, inst);
    out << "engine: exact\n"
        << "  peak = " << format_rational(res.peak) << '\n'
        << "  times = " << format_times(res.solution.times) << '\n'
        << "  z = " << *res.solution.objective << '\n'
        << "  V_k = " << format_rational(end_level(inst, res.solution.times)) << '\n'
        << "  states visited = " << res.solution.stats.states_visited << '\n'
        << "  time = " << format_ms(ms) << '\n';

    if (!opt.csv_path.empty()) {
        csv_row row = base_row(opt.file, inst);
        row.engine = "exact";
        row.peak = res.peak;
        row.z = *res.solution.objective;
        row.states = res.solution.stats.states_visited;
        row.millis = opt.timing ? std::llround(ms) : 0;
        write_csv_file(opt.csv_path, {row});
    }
}

void cmd_approx(const file_run_options& opt, const std::string& eps_text, std::ostream& out) {
    const rational eps_prime = rational::parse(eps_text);
    const instance inst = load_instance(opt.file);
    const auto start = clock_type::now();
    const approx_result res = solve_fptas(inst, eps_prime, opt.budget);
    const double ms = elapsed_ms(start);
    const std::int64_t z = objective_z(inst, res.times);

    out << "command: approx\n";
    print_summary(out, opt.file, inst);
    out << "engine: fptas\n"
        << "  eps' = " << res.scale.eps_prime.str() << ", eps = " << res.scale.eps.str()
        << '\n'
        << "  scale factor M = " << res.scale.factor.str() << ", scaled demand D' = "
        << res.scale.scaled_demand.str() << '\n'
        << "  value = " << format_rational(res.value) << '\n'
        << "  times = " << format_times(res.times) << '\n'
        << "  z = " << z << '\n'
        << "  V_k = " << format_rational(end_level(inst, res.times)) << '\n'
        << "  lower bound = " << format_rational(res.lower_bound) << '\n'
        << "  ratio bound = " << format_rational(res.ratio_bound) << '\n'
        << "  states visited = " << res.stats.states_visited << '\n'
        << "  time = " << format_ms(ms) << '\n';

    if (!opt.csv_path.empty()) {
        csv_row row = base_row(opt.file, inst);
        row.engine = "fptas";
        row.eps_prime = eps_prime;
        row.peak = res.value;
        row.z = z;
        row.states = res.stats.states_visited;
        row.millis = opt.timing ? std::llround(ms) : 0;
        row.ratio_bound = res.ratio_bound;
        write_csv_file(opt.csv_path, {row});
    }
}

void cmd_oracle(const std::string& file, std::uint64_t limit, std::ostream& out) {
    const instance inst = load_instance(file);
    const auto start = clock_type::now();
    const oracle_result res = brute_force_optimum(inst, limit);
    const double ms = elapsed_ms(start);

    out << "command: oracle\n";
    print_summary(out, file, inst);
    out << "engine: oracle\n"
        << "  best peak = " << format_rational(res.best_peak) << '\n'
        << "  best times = " << format_times(res.best_times) << '\n'
        << "  assignments evaluated = " << res.assignments_evaluated << '\n'
        << "  time = " << format_ms(ms) << '\n';
}

void cmd_check(const std::string& file, const std::string& times_text,
               const std::optional<std::string>& eps_text, std::ostream& out) {
    const instance inst = load_instance(file);
    assignment x;
    x.first_order_times = parse_times_list(times_text);

    out << "command: check\n";
    print_summary(out, file, inst);
    out << "assignment: times = " << format_times(x) << '\n';
    if (!is_valid(inst, x)) {
        out << "  valid: false\n";
        return;
    }
    out << "  valid: true\n";

    const inventory_profile profile = compute_profile(inst, x);
    const std::int64_t z = objective_z(inst, x);
    const rational vk = profile.levels.back();
    const rational conserved =
        rational(inst.joint_cycle()) * vk + rational(z);
    const cascading_result cascade = cascading_check(inst, x, rational(0));

    out << "  peak = " << format_rational(profile.peak) << " at time "
        << profile.peak_time << '\n'
        << "  V_k = " << format_rational(vk) << '\n'
        << "  z = " << z << '\n'
        << "  k*V_k + z = C: " << (conserved == conservation_constant(inst) ? "true" : "false")
        << '\n'
        << "  cascading ok: " << (cascade.ok ? "true" : "false")
        << " (max violation = " << format_rational(cascade.max_violation) << ")\n";

    if (eps_text) {
        const rational eps = rational::parse(*eps_text);
        const certificate cert = certify(inst, x, eps);
        out << "  relaxed feasible at eps = " << eps.str() << ": "
            << (relaxed_feasible(inst, x, eps) ? "true" : "false") << '\n'
            << "  certificate: upper = " << format_rational(cert.upper)
            << ", lower = " << format_rational(cert.lower_bound)
            << ", ratio = " << format_rational(cert.ratio_bound) << '\n';
    }
}

void cmd_gen(const gen_params& params, const std::string& out_path, std::ostream& out) {
    const instance inst = generate_instance(params);
    std::string text = "# rsp gen: items=" + std::to_string(params.items) +
                       " cycle=" + std::to_string(params.cycle_target) +
                       " max-size=" + std::to_string(params.max_size) +
                       " seed=" + std::to_string(params.seed) + '\n';
    text += render_instance(inst);

    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write instance file: " + out_path);
    file << text;
}

struct bench_cell {
    int items = 0;
    int cycle_target = 0;
    std::int64_t max_size = 0;
    std::uint64_t seed = 0;
    std::vector<rational> eps_primes;
};

std::vector<bench_cell> builtin_bench_grid() {
    const std::vector<rational> eps_primes = {rational(1), rational(1, 2), rational(1, 5),
                                              rational(1, 10)};
    std::vector<bench_cell> cells;
    for (int n = 2; n <= 6; ++n) {
        for (int cycle : {2, 3, 4, 6}) {
            for (std::int64_t max_size : {10, 100}) {
                for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                    cells.push_back(bench_cell{n, cycle, max_size, seed, eps_primes});
                }
            }
        }
    }
    return cells;
}

// Suite lines: "<items> <cycle> <max_size> <seed> <eps'[,eps'...]>", with
// blank lines and '#' comments allowed.
std::vector<bench_cell> parse_bench_suite(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open suite file: " + path);

    std::vector<bench_cell> cells;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (line.front() == '#') continue;

        std::istringstream fields(line);
        bench_cell cell;
        std::string eps_list;
        if (!(fields >> cell.items >> cell.cycle_target >> cell.max_size >> cell.seed >>
              eps_list)) {
            throw parse_error("expected: items cycle max_size seed eps_list", line_no);
        }
        std::string tail;
        if (fields >> tail) {
            throw parse_error("trailing characters after eps list", line_no);
        }
        std::size_t pos = 0;
        while (pos <= eps_list.size()) {
            const std::size_t comma = eps_list.find(',', pos);
            const std::string token =
                eps_list.substr(pos, comma == std::string::npos ? std::string::npos
                                                                : comma - pos);
            try {
                cell.eps_primes.push_back(rational::parse(token));
            } catch (const std::invalid_argument&) {
                throw parse_error("malformed eps value '" + token + "'", line_no);
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

std::string bench_instance_id(const bench_cell& cell) {
    return "n" + std::to_string(cell.items) + "-c" + std::to_string(cell.cycle_target) +
           "-s" + std::to_string(cell.max_size) + "-seed" + std::to_string(cell.seed);
}

void cmd_bench(const std::string& suite_path, const std::string& csv_path, bool timing,
               std::ostream& out) {
    const std::vector<bench_cell> cells =
        suite_path.empty() ? builtin_bench_grid() : parse_bench_suite(suite_path);

    std::vector<csv_row> rows;
    rational worst_ratio(0);
    bool all_within_bound = true;
    for (const bench_cell& cell : cells) {
        const instance inst = generate_instance(
            gen_params{cell.items, cell.cycle_target, cell.max_size, cell.seed});
        const std::string id = bench_instance_id(cell);

        auto start = clock_type::now();
        const exact_result exact = solve_exact(inst);
        double ms = elapsed_ms(start);

        csv_row row = base_row(id, inst);
        row.engine = "exact";
        row.peak = exact.peak;
        row.z = *exact.solution.objective;
        row.states = exact.solution.stats.states_visited;
        row.millis = timing ? std::llround(ms) : 0;
        rows.push_back(row);

        for (const rational& eps_prime : cell.eps_primes) {
            start = clock_type::now();
            const approx_result approx = solve_fptas(inst, eps_prime);
            ms = elapsed_ms(start);

            row = base_row(id, inst);
            row.engine = "fptas";
            row.eps_prime = eps_prime;
            row.peak = approx.value;
            row.z = objective_z(inst, approx.times);
            row.states = approx.stats.states_visited;
            row.millis = timing ? std::llround(ms) : 0;
            row.ratio_bound = approx.ratio_bound;
            rows.push_back(row);

            const rational ratio = approx.value / exact.peak;
            if (ratio > worst_ratio) worst_ratio = ratio;
            if (approx.value > (rational(1) + eps_prime) * exact.peak) {
                all_within_bound = false;
            }
        }
    }

    write_csv_file(csv_path, rows);
    out << "bench: " << cells.size() << " instances, " << rows.size() << " rows -> "
        << csv_path << '\n'
        << "  worst approx/exact ratio = " << format_rational(worst_ratio) << '\n'
        << "  all rows within their (1 + eps') bound: " << (all_within_bound ? "yes" : "NO")
        << '\n';
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"replenishment storage: exact, approximate, and brute-force solvers"};
    app.name("rsp");
    app.require_subcommand(1);

    file_run_options solve_opt;
    auto* solve = app.add_subcommand("solve", "exact optimum of an instance file");
    solve->add_option("file", solve_opt.file, "instance file")->required();
    solve->add_option("--budget", solve_opt.budget, "DP state budget");
    solve->add_option("--csv", solve_opt.csv_path, "also write a one-row CSV report");
    solve->add_flag("--timing", solve_opt.timing, "record wall-clock millis in the CSV");
    solve->callback([&] { cmd_solve(solve_opt, out); });

    file_run_options approx_opt;
    std::string approx_eps;
    auto* approx = app.add_subcommand("approx", "scaled solve with a (1+eps') certificate");
    approx->add_option("file", approx_opt.file, "instance file")->required();
    approx->add_option("--eps", approx_eps, "accuracy eps' > 0, e.g. 1/2 or 0.5")->required();
    approx->add_option("--budget", approx_opt.budget, "DP state budget");
    approx->add_option("--csv", approx_opt.csv_path, "also write a one-row CSV report");
    approx->add_flag("--timing", approx_opt.timing, "record wall-clock millis in the CSV");
    approx->callback([&] { cmd_approx(approx_opt, approx_eps, out); });

    std::string oracle_file;
    std::uint64_t oracle_limit = default_enumeration_budget;
    auto* oracle = app.add_subcommand("oracle", "brute-force optimum by full enumeration");
    oracle->add_option("file", oracle_file, "instance file")->required();
    oracle->add_option("--limit", oracle_limit, "refuse above this many assignments");
    oracle->callback([&] { cmd_oracle(oracle_file, oracle_limit, out); });

    std::string check_file;
    std::string check_times;
    std::optional<std::string> check_eps;
    auto* check = app.add_subcommand("check", "evaluate and verify one assignment");
    check->add_option("file", check_file, "instance file")->required();
    check->add_option("--times", check_times, "first-order times, e.g. 1,2")->required();
    check->add_option("--eps", check_eps, "also check eps-relaxed feasibility");
    check->callback([&] { cmd_check(check_file, check_times, check_eps, out); });

    gen_params gen_opt;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "emit a seeded random instance");
    gen->add_option("--items", gen_opt.items, "number of items")->required();
    gen->add_option("--cycle", gen_opt.cycle_target, "cycle lengths divide this")->required();
    gen->add_option("--max-size", gen_opt.max_size, "sizes drawn from [1, S]")->required();
    gen->add_option("--seed", gen_opt.seed, "64-bit seed")->required();
    gen->add_option("-o,--output", gen_out, "write here instead of standard output");
    gen->callback([&] { cmd_gen(gen_opt, gen_out, out); });

    std::string bench_suite;
    std::string bench_csv;
    bool bench_timing = false;
    auto* bench = app.add_subcommand("bench", "run an instance grid and write a CSV");
    bench->add_option("--suite", bench_suite, "grid file; built-in grid when omitted");
    bench->add_option("--csv", bench_csv, "output CSV path")->required();
    bench->add_flag("--timing", bench_timing, "record wall-clock millis in the CSV");
    bench->callback([&] { cmd_bench(bench_suite, bench_csv, bench_timing, out); });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const parse_error& e) {
        err << "error: line " << e.line() << ": " << e.what() << '\n';
        return 2;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const cycle_cap_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace rsp::cli
