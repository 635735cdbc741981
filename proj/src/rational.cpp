#include "ultranear/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ultranear {

namespace {

using Int = boost::multiprecision::cpp_int;

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Int parse_int(const std::string& digits, const std::string& original) {
    if (!all_digits(digits))
        throw ValidationError("invalid numeric token '" + original + "'");
    // Leading zeros would flip the string constructor into octal mode.
    const auto first = digits.find_first_not_of('0');
    return first == std::string::npos ? Int(0) : Int(digits.substr(first));
}

} // namespace

Rat parse_rational(const std::string& token) {
    const auto begin = token.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) throw ValidationError("empty numeric token");
    const auto end = token.find_last_not_of(" \t\r\n");
    std::string s = token.substr(begin, end - begin + 1);

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    if (s.empty()) throw ValidationError("invalid numeric token '" + token + "'");

    Int num, den = 1;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = parse_int(s.substr(0, slash), token);
        den = parse_int(s.substr(slash + 1), token);
        if (den == 0) throw ValidationError("zero denominator in '" + token + "'");
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string whole = dot == 0 ? "0" : s.substr(0, dot);
        const std::string frac = s.substr(dot + 1);
        if (frac.empty()) {
            num = parse_int(whole, token);
        } else {
            num = parse_int(whole + frac, token);
            for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
        }
    } else {
        num = parse_int(s, token);
    }

    Rat value(num, den);
    return negative ? -value : value;
}

std::string rat_str(const Rat& value) {
    return value.str();
}

} // namespace ultranear
