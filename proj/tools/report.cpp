#include "report.hpp"

#include <algorithm>
#include <tuple>

namespace rsp::cli {

namespace {

// Quotes a field only when it would break the format.
std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string csv_header() {
    return "instance_id,n,k,D,engine,eps,peak_decimal,peak_rational,z,states,millis,"
           "ratio_bound";
}

std::string csv_line(const csv_row& row) {
    std::string line = csv_field(row.instance_id);
    line += ',' + std::to_string(row.n);
    line += ',' + std::to_string(row.k);
    line += ',' + row.demand.decimal();
    line += ',' + row.engine;
    line += ',';
    if (row.eps_prime) line += row.eps_prime->str();
    line += ',' + row.peak.decimal();
    line += ',' + row.peak.str();
    line += ',';
    if (row.z) line += std::to_string(*row.z);
    line += ',' + std::to_string(row.states);
    line += ',' + std::to_string(row.millis);
    line += ',';
    if (row.ratio_bound) line += row.ratio_bound->decimal();
    return line;
}

void write_csv(std::ostream& out, const std::vector<csv_row>& rows) {
    out << csv_header() << '\n';
    for (const csv_row& row : rows) out << csv_line(row) << '\n';
}

void sort_rows(std::vector<csv_row>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const csv_row& a, const csv_row& b) {
        if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
        if (a.engine != b.engine) return a.engine < b.engine;
        const bool a_has = a.eps_prime.has_value();
        const bool b_has = b.eps_prime.has_value();
        if (a_has != b_has) return !a_has;  // exact rows ahead of approx ones
        if (!a_has) return false;
        return *a.eps_prime < *b.eps_prime;
    });
}

std::string format_rational(const rational& value) {
    return value.str() + " = " + value.decimal();
}

std::string format_times(const assignment& x) {
    std::string out;
    for (std::size_t i = 0; i < x.first_order_times.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(x.first_order_times[i]);
    }
    return out;
}

}  // namespace rsp::cli
