#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rsp/model.hpp"
#include "rsp/rational.hpp"

namespace rsp::cli {

// One result line of the fixed CSV schema:
//   instance_id,n,k,D,engine,eps,peak_decimal,peak_rational,z,states,millis,ratio_bound
// Rational-valued columns appear twice where exactness matters (peak), as a
// decimal where they are read numerically (D, ratio_bound), and as an exact
// "p/q" where they parameterize the run (eps).  Fields that do not apply to
// an engine stay empty.
struct csv_row {
    std::string instance_id;
    int n = 0;
    int k = 0;
    rational demand;
    std::string engine;
    std::optional<rational> eps_prime;
    rational peak;
    std::optional<std::int64_t> z;
    std::uint64_t states = 0;
    std::int64_t millis = 0;
    std::optional<rational> ratio_bound;
};

std::string csv_header();
std::string csv_line(const csv_row& row);

// Header plus rows, in the order given.
void write_csv(std::ostream& out, const std::vector<csv_row>& rows);

// Sorts by (instance_id, engine, eps) so row order never depends on
// evaluation order.
void sort_rows(std::vector<csv_row>& rows);

// "p/q = d.dddddd", e.g. "3/2 = 1.500000".
std::string format_rational(const rational& value);

// Comma-joined first-order times, e.g. "1,2".
std::string format_times(const assignment& x);

}  // namespace rsp::cli
