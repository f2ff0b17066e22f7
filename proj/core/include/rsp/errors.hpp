#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rsp {

// Exact arithmetic never wraps; any out-of-range intermediate surfaces here.
class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// A solve or enumeration refused to start, or aborted mid-way, because it
// would exceed its state/assignment budget.  `visited` is the work done at
// the point of abort, or the size of the search refused up front.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, std::uint64_t visited)
        : std::runtime_error(what), visited_(visited) {}

    std::uint64_t visited() const noexcept { return visited_; }

private:
    std::uint64_t visited_;
};

// Joint cycle length above the configured cap.  Every engine is exponential
// in the joint cycle, so over-cap instances are rejected up front.
class cycle_cap_error : public std::runtime_error {
public:
    cycle_cap_error(const std::string& what, int cycle, int cap)
        : std::runtime_error(what), cycle_(cycle), cap_(cap) {}

    int cycle() const noexcept { return cycle_; }
    int cap() const noexcept { return cap_; }

private:
    int cycle_;
    int cap_;
};

// Malformed instance text; carries the 1-based source line.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line)
        : std::runtime_error(what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace rsp
