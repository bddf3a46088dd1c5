#include "rembed/numbers.hpp"

#include <cstdio>

#include "rembed/errors.hpp"

namespace rembed {

BigInt factorial(int n) {
    if (n < 0) throw PreconditionError("factorial of a negative integer");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step
    }
    return r;
}

Rational harmonic(int n) {
    if (n < 0) throw PreconditionError("harmonic number of a negative index");
    Rational h = 0;
    for (int i = 1; i <= n; ++i) h += Rational(1, i);
    return h;
}

std::string to_string(const BigInt& v) {
    return v.str();
}

std::string to_string(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

std::string to_decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string to_decimal(const Rational& v) {
    return to_decimal(v.convert_to<double>());
}

} // namespace rembed
