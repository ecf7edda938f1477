#include "inctab/sieving.hpp"

#include <numeric>
#include <stdexcept>

#include "inctab/dynamics.hpp"
#include "inctab/tableau.hpp"

namespace inctab {

namespace {

void require_nk(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1) throw std::invalid_argument("need n >= 1 and 0 <= k <= n - 1");
}

BigInt exact_quotient(const BigInt& num, const BigInt& den) {
    if (den == 0 || num % den != 0) throw std::domain_error("inexact integer division");
    return num / den;
}

}  // namespace

IntPolynomial f_poly(int n, int k) {
    require_nk(n, k);
    return exact_divide(q_binomial(n - 1, k) * q_binomial(2 * n - k, n - k - 1), q_int(n - k));
}

IntPolynomial maj_gen_poly(int n, int k) {
    require_nk(n, k);
    IntPolynomial acc;
    for (const auto& t : enumerate_two_row(n, k)) acc += IntPolynomial::monomial(static_cast<unsigned>(maj(t)));
    return acc;
}

int maj_shift(int n, int k) { return n + k * (k + 1) / 2; }

BigInt closed_form_f(int n, int k, int d) {
    require_nk(n, k);
    const int m = 2 * n - k;
    if (d < 2) throw std::invalid_argument("closed form requires d >= 2");
    if (m % d != 0) throw std::invalid_argument("closed form requires d | 2n - k");
    if (n % d == 0) {
        const BigInt den = factorial(k / d) * factorial((n - k) / d) * factorial((n - k) / d - 1) * (n / d);
        return exact_quotient(factorial(m / d), den);
    }
    if ((n + 1) % d == 0) {
        const int c = (n - k - 1) / d;
        const BigInt den = factorial((k + 2) / d - 1) * factorial(c) * factorial(c) * ((n + 1) / d);
        return exact_quotient(factorial(m / d), den);
    }
    return 0;
}

const CSPEntry* CSPReport::witness() const noexcept {
    for (const auto& e : entries)
        if (!e.ok) return &e;
    return nullptr;
}

CSPReport csp_promotion(int n, int k) {
    require_nk(n, k);
    const int order = 2 * n - k;
    const auto tableaux = enumerate_two_row(n, k);
    const auto f = f_poly(n, k);
    CSPReport report{n, k, order, "promotion", {}, true};
    for (int m = 0; m < order; ++m) {
        CSPEntry e;
        e.m = m;
        e.order = order / std::gcd(m, order);
        for (const auto& t : tableaux)
            if (k_promote_pow(t, m) == t) ++e.fixed;
        e.root_value = eval_at_root(f, e.order).value;
        if (e.order >= 2) e.closed_form = closed_form_f(n, k, e.order);
        e.ok = e.root_value && *e.root_value == e.fixed && (!e.closed_form || *e.closed_form == e.fixed);
        report.ok = report.ok && e.ok;
        report.entries.push_back(std::move(e));
    }
    return report;
}

CSPReport csp_evacuation(int n, int k) {
    require_nk(n, k);
    const auto tableaux = enumerate_two_row(n, k);
    const auto f = f_poly(n, k);
    CSPReport report{n, k, 2, "evacuation", {}, true};
    for (int m = 0; m < 2; ++m) {
        CSPEntry e;
        e.m = m;
        e.order = m == 0 ? 1 : 2;
        for (const auto& t : tableaux)
            if (m == 0 || k_evacuate(t) == t) ++e.fixed;
        e.root_value = eval_at_root(f, e.order).value;
        e.ok = e.root_value && *e.root_value == e.fixed;
        report.ok = report.ok && e.ok;
        report.entries.push_back(std::move(e));
    }
    return report;
}

BigInt typeb_count(int n, int p, bool central) {
    if (n < 0 || p < 0 || p > n) throw std::invalid_argument("typeb_count requires 0 <= p <= N");
    BigInt total = 0;
    for (int i = 0; i <= p; ++i) {
        const int rest = n - i;
        BigInt term;
        if (rest == 0) {
            // Only the empty partition remains: no blocks, hence no central block.
            term = central ? 0 : 1;
        } else {
            const BigInt sq = binomial(rest, p - i) * binomial(rest, p - i);
            const BigInt weight = central ? BigInt(n - p) : BigInt(p - i);
            term = binomial(n, i) * exact_quotient(sq * weight, rest);
        }
        total += (i % 2 == 0) ? term : BigInt(-term);
    }
    return total;
}

BigInt typeb_total(int n, int p) { return binomial(n, p) * binomial(n, p); }

BigInt typeb_central_total(int n, int p) {
    if (n == 0) return 0;
    return exact_quotient(BigInt(n - p) * typeb_total(n, p), n);
}

IdentityCheck identity_no_central(int n, int p) {
    if (p < 1 || 2 * p > n) throw std::invalid_argument("first identity needs 1 <= p and 2p <= N");
    IdentityCheck c;
    c.lhs = typeb_count(n, p, false);
    c.rhs = exact_quotient(factorial(n), factorial(n - 2 * p) * factorial(p) * factorial(p - 1) * (n - p));
    c.ok = c.lhs == c.rhs;
    return c;
}

IdentityCheck identity_central(int n, int p) {
    if (p < 0 || 2 * p + 1 > n) throw std::invalid_argument("second identity needs 0 <= p and 2p + 1 <= N");
    IdentityCheck c;
    c.lhs = typeb_count(n, p, true);
    c.rhs = exact_quotient(factorial(n), factorial(n - 2 * p - 1) * factorial(p) * factorial(p) * (n - p));
    c.ok = c.lhs == c.rhs;
    return c;
}

bool identity_check(int n, int p) {
    const bool first = p >= 1 && 2 * p <= n;
    const bool second = p >= 0 && 2 * p + 1 <= n;
    if (!first && !second) throw std::invalid_argument("no identity applies to (N, p)");
    return (!first || identity_no_central(n, p).ok) && (!second || identity_central(n, p).ok);
}

}  // namespace inctab
