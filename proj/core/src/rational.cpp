#include "rsp/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "rsp/checked.hpp"

namespace rsp {

namespace {

using uint128 = unsigned __int128;

uint128 uabs(int128 v) {
    return v < 0 ? -static_cast<uint128>(v) : static_cast<uint128>(v);
}

uint128 gcd_u128(uint128 a, uint128 b) {
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr int128 int128_min() {
    return static_cast<int128>(static_cast<uint128>(1) << 127);
}

}  // namespace

std::string to_string(int128 value) {
    if (value == 0) return "0";
    uint128 mag = uabs(value);
    char buf[48];
    int pos = 48;
    while (mag != 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(mag % 10));
        mag /= 10;
    }
    std::string out;
    if (value < 0) out.push_back('-');
    out.append(buf + pos, buf + 48);
    return out;
}

rational::rational(std::int64_t num, std::int64_t den) {
    *this = make(num, den);
}

rational::rational(int128 num, int128 den, int) : num_(num), den_(den) {}

rational rational::make(int128 num, int128 den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    // INT128_MIN has no representable negation; reject it outright.
    if (num == int128_min() || den == int128_min()) {
        throw overflow_error("rational: magnitude out of range");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return rational{};
    uint128 g = gcd_u128(uabs(num), static_cast<uint128>(den));
    if (g > 1) {
        num /= static_cast<int128>(g);
        den /= static_cast<int128>(g);
    }
    return rational(num, den, 0);
}

rational rational::from_int128(int128 num, int128 den) {
    return make(num, den);
}

rational rational::parse(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](int128& out, int max_digits) -> int {
        int count = 0;
        out = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (++count > max_digits) throw overflow_error("rational: literal too long");
            out = checked_add<int128>(checked_mul<int128>(out, 10), text[pos] - '0');
            ++pos;
        }
        return count;
    };
    int128 whole = 0;
    if (digits(whole, 37) == 0) fail();
    int128 num = whole;
    int128 den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (digits(den, 37) == 0 || den == 0) fail();
    } else if (pos < text.size() && text[pos] == '.') {
        ++pos;
        int128 frac = 0;
        int places = digits(frac, 30);
        if (places == 0) fail();
        for (int i = 0; i < places; ++i) den = checked_mul<int128>(den, 10);
        num = checked_add<int128>(checked_mul<int128>(whole, den), frac);
    }
    if (pos != text.size()) fail();
    return make(negative ? -num : num, den);
}

int128 rational::floor() const {
    if (num_ >= 0) return num_ / den_;
    return -(((-num_) + den_ - 1) / den_);
}

rational rational::operator-() const {
    return rational(-num_, den_, 0);
}

rational operator+(const rational& a, const rational& b) {
    int128 num = checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_));
    int128 den = checked_mul(a.den_, b.den_);
    return rational::make(num, den);
}

rational operator-(const rational& a, const rational& b) {
    return a + (-b);
}

rational operator*(const rational& a, const rational& b) {
    return rational::make(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

rational operator/(const rational& a, const rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational: division by zero");
    return rational::make(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

std::strong_ordering operator<=>(const rational& a, const rational& b) {
    int128 lhs = checked_mul(a.num_, b.den_);
    int128 rhs = checked_mul(b.num_, a.den_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string rational::str() const {
    return to_string(num_) + "/" + to_string(den_);
}

std::string rational::decimal(int places) const {
    if (places < 0 || places > 30) throw std::invalid_argument("rational: bad decimal places");
    int128 scale = 1;
    for (int i = 0; i < places; ++i) scale = checked_mul<int128>(scale, 10);
    uint128 mag = uabs(num_);
    uint128 den = static_cast<uint128>(den_);
    // round(|v| * scale) with ties away from zero
    uint128 scaled = checked_mul<uint128>(mag, static_cast<uint128>(scale));
    uint128 q = scaled / den;
    if ((scaled % den) * 2 >= den) ++q;
    uint128 whole = q / static_cast<uint128>(scale);
    uint128 frac = q % static_cast<uint128>(scale);
    std::string out;
    if (num_ < 0 && q != 0) out.push_back('-');
    out += to_string(static_cast<int128>(whole));
    if (places > 0) {
        std::string f = to_string(static_cast<int128>(frac));
        out.push_back('.');
        out.append(static_cast<std::size_t>(places) - f.size(), '0');
        out += f;
    }
    return out;
}

rational abs(const rational& value) {
    return value.is_negative() ? -value : value;
}

std::ostream& operator<<(std::ostream& out, const rational& value) {
    return out << value.str();
}

}  // namespace rsp
