#include "dec/rational.hpp"

#include <cctype>

namespace dec {

Integer factorial(int n) {
    Integer out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer out = 1;
    for (int i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

std::string to_string(const Rational& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1) return num;
    return num + "/" + denominator(r).str();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("invalid rational literal: '" + text + "'");
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator in rational literal: '" + text + "'");
    Rational r(Integer(num), d);
    return negative ? -r : r;
}

}  // namespace dec
