#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace inctab {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in q with arbitrary-precision integer coefficients; index is
/// the exponent. Kept canonical: no trailing zero coefficients, so the zero
/// polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(long long constant);  // NOLINT: integers promote to constants

    /// c * q^exponent.
    static IntPolynomial monomial(unsigned exponent, BigInt c = 1);

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coefficient(unsigned exponent) const;
    BigInt evaluate(const BigInt& q) const;
    bool has_nonnegative_coefficients() const noexcept;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    bool operator==(const IntPolynomial&) const = default;

    std::string str() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

struct PolyDivision {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/// Long division over the integers. Requires every quotient coefficient to
/// be integral (always true for monic divisors); throws std::domain_error
/// otherwise.
PolyDivision divmod(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// Quotient of a division that must be exact; throws std::domain_error on a
/// nonzero remainder.
IntPolynomial exact_divide(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// [j]_q = 1 + q + ... + q^{j-1}; [0]_q = 0.
IntPolynomial q_int(int j);
/// [j]_q! = [1]_q [2]_q ... [j]_q.
IntPolynomial q_factorial(int j);
/// Gaussian binomial [a choose b]_q by exact division of q-factorials.
IntPolynomial q_binomial(int a, int b);

/// d-th cyclotomic polynomial, by dividing q^d - 1 by Φ_e for e | d, e < d.
const IntPolynomial& cyclotomic(int d);

/// Value of p at a primitive d-th root of unity, computed as the remainder
/// of p modulo Φ_d. `value` is set iff the remainder is constant, in which
/// case p(ζ) equals it for every primitive d-th root ζ.
struct RootValue {
    IntPolynomial remainder;
    std::optional<BigInt> value;
};

RootValue eval_at_root(const IntPolynomial& p, int d);

BigInt factorial(int n);
BigInt binomial(int n, int k);

}  // namespace inctab
