#ifndef REMBED_POLYNOMIAL_HPP
#define REMBED_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "rembed/numbers.hpp"

namespace rembed {

// Polynomial in q with exact integer coefficients; coefficient index = power.
// Normalized: the highest stored coefficient is nonzero (zero polynomial
// stores nothing, degree() == -1).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial monomial(int power, BigInt coefficient = 1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Zero outside the stored range.
    const BigInt& coeff(int power) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt operator()(const BigInt& x) const;
    IntPolynomial derivative() const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) {
        return lhs += rhs;
    }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) {
        return lhs -= rhs;
    }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    // "2q + 3q^2 + q^3"
    std::string to_string() const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

// q(q+1)...(q+n), the generating polynomial of the unsigned Stirling row
// n+1: the coefficient of q^k is c(n+1, k).  n >= 0; n = 0 gives q.
IntPolynomial rising_factorial_poly(int n);

// f(q - t) for t >= 0, by binomial expansion; exact.
IntPolynomial shift_poly(const IntPolynomial& f, long t);

} // namespace rembed

#endif
