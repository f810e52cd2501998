#include "credal/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace credal {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!all_digits(num)) {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    BigInt n{std::string(num)};
    BigInt d = 1;
    if (slash != std::string_view::npos) {
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(den)) {
            throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        }
        d = BigInt{std::string(den)};
        if (d == 0) {
            throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        }
    }
    if (negative) n = -n;
    return Rational(n, d);
}

std::string to_fraction_string(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_fraction_string(const std::vector<Rational>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_fraction_string(v[i]);
    }
    out += ")";
    return out;
}

std::string to_decimal_string(const Rational& r) {
    if (r == 0) return "0";
    constexpr int kDigits = 6;

    BigInt a = numerator(r);
    const bool neg = a < 0;
    if (neg) a = -a;
    BigInt d = denominator(r);

    // Scale so that a/d lands in [1, 10); e is the decimal exponent.
    int e = 0;
    if (a >= d) {
        while (a >= d * 10) {
            d *= 10;
            ++e;
        }
    } else {
        while (a < d) {
            a *= 10;
            --e;
        }
    }

    // Mantissa in [10^(kDigits-1), 10^kDigits), round half to even.
    BigInt scale = 1;
    for (int i = 0; i < kDigits - 1; ++i) scale *= 10;
    BigInt num = a * scale;
    BigInt q = num / d;
    BigInt rem = num % d;
    const BigInt twice = rem * 2;
    if (twice > d || (twice == d && (q % 2) != 0)) ++q;
    BigInt full = scale * 10;
    if (q == full) {
        q = scale;
        ++e;
    }

    std::string digits = q.str(); // exactly kDigits characters
    std::string out;
    if (e >= 0 && e < kDigits) {
        out = digits.substr(0, static_cast<size_t>(e) + 1);
        const std::string frac = digits.substr(static_cast<size_t>(e) + 1);
        if (!frac.empty()) out += "." + frac;
    } else if (e < 0 && e >= -4) {
        out = "0.";
        out.append(static_cast<size_t>(-e - 1), '0');
        out += digits;
    } else {
        out = digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(e);
    }
    return (neg ? "-" : "") + out;
}

} // namespace credal
