#include "inctab/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace inctab {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(long long constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

IntPolynomial IntPolynomial::monomial(unsigned exponent, BigInt c) {
    std::vector<BigInt> coeffs(exponent + 1, 0);
    coeffs[exponent] = std::move(c);
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(unsigned exponent) const {
    return exponent < coeffs_.size() ? coeffs_[exponent] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& q) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

bool IntPolynomial::has_nonnegative_coefficients() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        const BigInt& c = coeffs_[e];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        if (e == 0 || mag != 1) s += mag.str();
        if (e >= 1) s += "q";
        if (e >= 2) s += "^" + std::to_string(e);
    }
    return s;
}

PolyDivision divmod(const IntPolynomial& dividend, const IntPolynomial& divisor) {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<BigInt> rem = dividend.coefficients();
    const auto& den = divisor.coefficients();
    const std::size_t dd = den.size() - 1;
    if (rem.size() <= dd) return {IntPolynomial{}, dividend};
    std::vector<BigInt> quot(rem.size() - dd, 0);
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0) continue;
        if (rem[i] % den.back() != 0) throw std::domain_error("quotient is not integral");
        const BigInt c = rem[i] / den.back();
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial exact_divide(const IntPolynomial& dividend, const IntPolynomial& divisor) {
    auto [q, r] = divmod(dividend, divisor);
    if (!r.is_zero()) throw std::domain_error("nonzero remainder " + r.str() + " in exact division");
    return q;
}

IntPolynomial q_int(int j) {
    if (j < 0) throw std::invalid_argument("q_int requires j >= 0");
    return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(j), 1));
}

IntPolynomial q_factorial(int j) {
    if (j < 0) throw std::invalid_argument("q_factorial requires j >= 0");
    IntPolynomial acc(1);
    for (int i = 2; i <= j; ++i) acc *= q_int(i);
    return acc;
}

IntPolynomial q_binomial(int a, int b) {
    if (b < 0 || b > a) throw std::invalid_argument("q_binomial requires 0 <= b <= a");
    return exact_divide(q_factorial(a), q_factorial(b) * q_factorial(a - b));
}

const IntPolynomial& cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic requires d >= 1");
    static std::map<int, IntPolynomial> cache;
    static std::recursive_mutex guard;
    std::lock_guard lock(guard);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
    IntPolynomial p = IntPolynomial::monomial(static_cast<unsigned>(d)) - IntPolynomial(1);
    for (int e = 1; e < d; ++e)
        if (d % e == 0) p = exact_divide(p, cyclotomic(e));
    return cache.emplace(d, std::move(p)).first->second;
}

RootValue eval_at_root(const IntPolynomial& p, int d) {
    RootValue out{divmod(p, cyclotomic(d)).remainder, std::nullopt};
    if (out.remainder.degree() <= 0) out.value = out.remainder.coefficient(0);
    return out;
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    BigInt acc = 1;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace inctab
