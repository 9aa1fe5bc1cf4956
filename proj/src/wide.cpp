#include "cpps/wide.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "cpps/errors.hpp"

namespace cpps {

std::string to_string(Wide value)
{
    std::string out;
    do {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    } while (value != 0);
    std::reverse(out.begin(), out.end());
    return out;
}

Wide checked_add(Wide a, Wide b)
{
    if (a > kWideMax - b) {
        throw OverflowError("128-bit overflow in " + to_string(a) + " + " + to_string(b));
    }
    return a + b;
}

Wide checked_mul(Wide a, Wide b)
{
    if (b != 0 && a > kWideMax / b) {
        throw OverflowError("128-bit overflow in " + to_string(a) + " * " + to_string(b));
    }
    return a * b;
}

Wide pow10_wide(unsigned exp)
{
    if (exp > 38) {
        throw OverflowError("10^" + std::to_string(exp) + " does not fit in 128 bits");
    }
    Wide r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= 10;
    return r;
}

int decimal_exponent(Wide value)
{
    if (value == 0) return -1;
    int exp = 0;
    while (value % 10 == 0) {
        value /= 10;
        ++exp;
    }
    return value == 1 ? exp : -1;
}

namespace {

Wide parse_digits(std::string_view digits, std::string_view whole)
{
    if (digits.empty()) {
        throw std::invalid_argument("expected an integer, got '" + std::string(whole) + "'");
    }
    Wide value = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("expected an integer, got '" + std::string(whole) + "'");
        }
        try {
            value = checked_add(checked_mul(value, 10), static_cast<Wide>(c - '0'));
        } catch (const OverflowError&) {
            throw OverflowError("'" + std::string(whole) + "' does not fit in 128 bits");
        }
    }
    return value;
}

} // namespace

Wide parse_wide(std::string_view text)
{
    const auto e = text.find_first_of("eE");
    if (e == std::string_view::npos) return parse_digits(text, text);

    const Wide mantissa = parse_digits(text.substr(0, e), text);
    const Wide exp = parse_digits(text.substr(e + 1), text);
    if (mantissa == 0) return 0;
    if (exp > 38) throw OverflowError("'" + std::string(text) + "' does not fit in 128 bits");
    try {
        return checked_mul(mantissa, pow10_wide(static_cast<unsigned>(exp)));
    } catch (const OverflowError&) {
        throw OverflowError("'" + std::string(text) + "' does not fit in 128 bits");
    }
}

} // namespace cpps

std::ostream& operator<<(std::ostream& os, cpps::Wide value)
{
    return os << cpps::to_string(value);
}
