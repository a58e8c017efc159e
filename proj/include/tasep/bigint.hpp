#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace tasep {

// Arbitrary-precision integers and rationals. cpp_rational keeps values
// canonical: denominator > 0 and gcd(|num|, den) = 1 after every operation.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// binom(m, r) = 0 for r < 0 or r > m; binom(m, 0) = 1 for m >= 0.
inline BigInt binomial(long m, long r) {
    if (r < 0 || r > m) return 0;
    if (m - r < r) r = m - r;
    BigInt result = 1;
    for (long i = 1; i <= r; ++i) {
        result *= m - r + i;
        result /= i; // exact: result is binom(m-r+i, i) after this step
    }
    return result;
}

// Accepts "p/q" or a plain integer literal, optionally negative.
inline BigRational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return BigRational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return BigRational(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    }
}

inline std::string rational_str(const BigRational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

} // namespace tasep
