#include "instance_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rsp/errors.hpp"

namespace rsp::cli {

namespace {

// Consumes a decimal integer field from `rest`, which must be introduced by
// exactly one space.
std::int64_t take_field(std::string_view& rest, const char* what, int line) {
    if (rest.empty() || rest.front() != ' ') {
        throw parse_error(std::string("expected ' ' before ") + what, line);
    }
    rest.remove_prefix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw parse_error(std::string(what) + " out of range", line);
    }
    if (ec != std::errc() || ptr == rest.data()) {
        throw parse_error(std::string("malformed ") + what, line);
    }
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    return value;
}

}  // namespace

instance parse_instance(std::string_view text, const instance_limits& limits) {
    std::vector<item> items;
    int line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
        if (line.front() == '#') continue;

        if (line.substr(0, 4) != "item") {
            throw parse_error("expected an 'item' line", line_no);
        }
        std::string_view rest = line.substr(4);
        const std::int64_t cycle = take_field(rest, "cycle length", line_no);
        const std::int64_t size = take_field(rest, "reorder size", line_no);
        if (!rest.empty()) {
            throw parse_error("trailing characters after reorder size", line_no);
        }
        // Cycles above the joint-cycle guard are left for instance::make to
        // reject, so they surface as the guard error rather than a syntax one.
        if (cycle < 1 || cycle > std::numeric_limits<int>::max()) {
            throw parse_error("cycle length must be >= 1", line_no);
        }
        if (size < 1 || size > limits.max_reorder_size) {
            throw parse_error("reorder size must be in [1, " +
                                  std::to_string(limits.max_reorder_size) + "]",
                              line_no);
        }
        items.push_back(item{static_cast<int>(cycle), size});
    }
    return instance::make(std::move(items), limits);
}

instance load_instance(const std::string& path, const instance_limits& limits) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open instance file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str(), limits);
}

std::string render_instance(const instance& inst) {
    std::string out;
    for (const item& it : inst.items()) {
        out += "item " + std::to_string(it.cycle_length) + ' ' +
               std::to_string(it.reorder_size) + '\n';
    }
    return out;
}

}  // namespace rsp::cli
