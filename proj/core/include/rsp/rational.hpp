#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rsp/errors.hpp"

namespace rsp {

using int128 = __int128;

std::string to_string(int128 value);

// Exact rational number over checked 128-bit integers.  Always stored in
// lowest terms with a positive denominator.  Every operation is exact;
// out-of-range intermediates throw rsp::overflow_error rather than wrap.
class rational {
public:
    constexpr rational() = default;
    rational(std::int64_t value) : num_(value) {}  // NOLINT: integers embed
    rational(std::int64_t num, std::int64_t den);

    static rational from_int128(int128 num, int128 den);

    // Accepts "p", "-p", "p/q", and decimal strings such as "0.25"
    // (parsed exactly, e.g. "0.1" -> 1/10).
    static rational parse(std::string_view text);

    int128 numerator() const noexcept { return num_; }
    int128 denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_negative() const noexcept { return num_ < 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    // Largest integer <= value.
    int128 floor() const;

    rational operator-() const;
    friend rational operator+(const rational& a, const rational& b);
    friend rational operator-(const rational& a, const rational& b);
    friend rational operator*(const rational& a, const rational& b);
    friend rational operator/(const rational& a, const rational& b);  // b != 0

    rational& operator+=(const rational& b) { return *this = *this + b; }
    rational& operator-=(const rational& b) { return *this = *this - b; }
    rational& operator*=(const rational& b) { return *this = *this * b; }
    rational& operator/=(const rational& b) { return *this = *this / b; }

    friend bool operator==(const rational& a, const rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const rational& a, const rational& b);

    // Always "p/q" in lowest terms, including unit denominators: "3/1".
    std::string str() const;

    // Fixed-point decimal rendering, rounded to nearest with ties away
    // from zero, e.g. "1.500000" for 3/2 at six places.
    std::string decimal(int places = 6) const;

private:
    rational(int128 num, int128 den, int);  // pre-reduced internal ctor
    static rational make(int128 num, int128 den);

    int128 num_ = 0;
    int128 den_ = 1;
};

rational abs(const rational& value);

// Streams str(), i.e. "p/q".
std::ostream& operator<<(std::ostream& out, const rational& value);

}  // namespace rsp
