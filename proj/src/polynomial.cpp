#include "rembed/polynomial.hpp"

#include <sstream>

#include "rembed/errors.hpp"

namespace rembed {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial IntPolynomial::monomial(int power, BigInt coefficient) {
    if (power < 0) throw PreconditionError("monomial with negative power");
    std::vector<BigInt> c(power + 1);
    c[power] = std::move(coefficient);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[power];
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
    BigInt value = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        value = value * x + *it;
    }
    return value;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return IntPolynomial();
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * static_cast<int>(k);
    }
    return IntPolynomial(std::move(d));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    normalize();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPolynomial();
    std::vector<BigInt> prod(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(prod));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        BigInt mag = abs(c);
        if (mag != 1 || k == 0) out << mag.str();
        if (k >= 1) {
            out << 'q';
            if (k >= 2) out << '^' << k;
        }
    }
    return out.str();
}

IntPolynomial rising_factorial_poly(int n) {
    if (n < 0) throw PreconditionError("rising factorial of negative order");
    std::vector<BigInt> c{0, 1}; // q
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] += c[k] * i;
            next[k + 1] += c[k];
        }
        c = std::move(next);
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial shift_poly(const IntPolynomial& f, long t) {
    if (t < 0) throw PreconditionError("shift_poly needs t >= 0");
    if (t == 0 || f.is_zero()) return f;
    const int deg = f.degree();

    std::vector<BigInt> minus_t_pow(deg + 1);
    minus_t_pow[0] = 1;
    for (int e = 1; e <= deg; ++e) minus_t_pow[e] = minus_t_pow[e - 1] * (-t);

    // Pascal triangle up to deg
    std::vector<std::vector<BigInt>> choose(deg + 1);
    for (int j = 0; j <= deg; ++j) {
        choose[j].resize(j + 1);
        choose[j][0] = 1;
        choose[j][j] = 1;
        for (int i = 1; i < j; ++i) choose[j][i] = choose[j - 1][i - 1] + choose[j - 1][i];
    }

    // [q^i] f(q-t) = sum_{j>=i} c_j * C(j,i) * (-t)^(j-i)
    std::vector<BigInt> out(deg + 1);
    for (int j = 0; j <= deg; ++j) {
        const BigInt& cj = f.coeff(j);
        if (cj == 0) continue;
        for (int i = 0; i <= j; ++i) {
            out[i] += cj * choose[j][i] * minus_t_pow[j - i];
        }
    }
    return IntPolynomial(std::move(out));
}

} // namespace rembed
