#include <doctest.h>

#include <cmath>

#include "inctab/bijections.hpp"
#include "inctab/sieving.hpp"
#include "inctab/tableau.hpp"
#include "oracles.hpp"

using namespace inctab;

namespace {

std::vector<std::int64_t> small_coeffs(const IntPolynomial& p) {
    std::vector<std::int64_t> out;
    for (const auto& c : p.coefficients()) out.push_back(static_cast<std::int64_t>(c));
    return out;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("arithmetic and canonical form") {
    const IntPolynomial one(1);
    const auto q = IntPolynomial::monomial(1);
    CHECK((q - q).is_zero());
    CHECK((q - q).degree() == -1);
    CHECK(((one + q) * (one - q)).str() == "1 - q^2");
    CHECK((q * q * 3 - q).str() == "-q + 3q^2");
    CHECK(IntPolynomial(0).str() == "0");
    CHECK((one + q).evaluate(-1) == 0);
    CHECK_FALSE((one - q).has_nonnegative_coefficients());
}

TEST_CASE("division") {
    const auto num = q_int(6);
    const auto [quot, rem] = divmod(num, q_int(3));
    CHECK(rem.is_zero());
    CHECK(quot == IntPolynomial::monomial(3) + IntPolynomial(1));
    CHECK_THROWS_AS(exact_divide(q_int(5), q_int(2)), std::domain_error);
    CHECK_THROWS_AS(divmod(IntPolynomial(1), IntPolynomial()), std::domain_error);
    CHECK_THROWS_AS(divmod(IntPolynomial(1), IntPolynomial(2)), std::domain_error);
}

TEST_CASE("Gaussian binomials match inversion counts") {
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= a; ++b) REQUIRE(small_coeffs(q_binomial(a, b)) == oracle::q_binomial_by_inversions(a, b));
    CHECK(q_factorial(3).str() == "1 + 2q + 2q^2 + q^3");
    CHECK(q_int(0).is_zero());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1).str() == "-1 + q");
    CHECK(cyclotomic(2).str() == "1 + q");
    CHECK(cyclotomic(6).str() == "1 - q + q^2");
    CHECK(cyclotomic(12).str() == "1 - q^2 + q^4");
    CHECK(cyclotomic(105).coefficient(7) == -2);  // first cyclotomic with a coefficient outside {-1,0,1}
}

TEST_CASE("root evaluation agrees with floating point") {
    for (int a = 1; a <= 10; ++a)
        for (int b = 0; b <= a; ++b) {
            const auto p = q_binomial(a, b);
            for (int d = 1; d <= a; ++d) {
                const auto rv = eval_at_root(p, d);
                const auto z = oracle::eval_complex(small_coeffs(p), d);
                if (rv.value) {
                    REQUIRE(std::abs(z.real() - static_cast<double>(*rv.value)) < 1e-6);
                    REQUIRE(std::abs(z.imag()) < 1e-6);
                } else {
                    REQUIRE(std::abs(z.imag()) + std::abs(z.real() - std::round(z.real())) > 1e-9);
                }
            }
        }
}

}

TEST_SUITE("sieving") {

TEST_CASE("q-enumerator values") {
    CHECK(f_poly(3, 1) == q_int(5));
    CHECK(f_poly(4, 2).evaluate(1) == 9);
    CHECK(f_poly(4, 2).evaluate(-1) == 3);
    CHECK(f_poly(1, 0) == IntPolynomial(1));
    CHECK_THROWS(f_poly(3, 3));
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k < n; ++k) {
            const auto f = f_poly(n, k);
            REQUIRE(f.has_nonnegative_coefficients());
            REQUIRE(f.evaluate(1) == enumerate_two_row(n, k).size());
        }
}

TEST_CASE("maj generating function with the shift n + k(k+1)/2") {
    CHECK(maj_shift(2, 1) == 3);
    CHECK(maj_gen_poly(2, 1) == IntPolynomial::monomial(3));
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k < n; ++k)
            REQUIRE(maj_gen_poly(n, k) == IntPolynomial::monomial(static_cast<unsigned>(maj_shift(n, k))) * f_poly(n, k));
    // The shift n + k(k-1)/2 is off by k whenever k > 0.
    CHECK(maj_gen_poly(3, 1) != IntPolynomial::monomial(3) * f_poly(3, 1));
}

TEST_CASE("closed form at roots of unity") {
    CHECK(closed_form_f(4, 2, 2) == 3);
    CHECK(closed_form_f(5, 2, 2) == 8);
    CHECK(closed_form_f(3, 1, 5) == 0);
    CHECK_THROWS(closed_form_f(4, 2, 1));
    CHECK_THROWS(closed_form_f(4, 2, 4));
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k < n; ++k)
            for (int d = 2; d <= 2 * n - k; ++d) {
                if ((2 * n - k) % d) continue;
                REQUIRE(eval_at_root(f_poly(n, k), d).value == closed_form_f(n, k, d));
            }
}

TEST_CASE("cyclic sieving reports") {
    const auto r = csp_promotion(4, 2);
    CHECK(r.ok);
    CHECK(r.group_order == 6);
    REQUIRE(r.entries.size() == 6);
    CHECK(r.entries[3].fixed == 3);
    CHECK(r.entries[3].order == 2);
    CHECK(r.witness() == nullptr);
    const auto e = csp_evacuation(4, 2);
    CHECK(e.ok);
    CHECK(e.entries[1].fixed == 3);
}

TEST_CASE("type-B counts") {
    CHECK(typeb_count(3, 1, false) == 3);
    CHECK(typeb_count(3, 0, true) == 1);
    CHECK(typeb_count(2, 1, false) == 2);
    for (int n = 1; n <= 6; ++n) {
        const auto brute = typeb_bruteforce(n);
        for (int p = 0; p <= n; ++p)
            for (bool central : {false, true}) {
                const auto it = brute.find({p, central, true});
                const std::int64_t expected = it == brute.end() ? 0 : it->second;
                REQUIRE(typeb_count(n, p, central) == expected);
            }
    }
    CHECK(typeb_total(4, 2) == 36);
    CHECK(typeb_central_total(4, 2) == 18);
}

TEST_CASE("binomial identities") {
    for (int n = 1; n <= 30; ++n)
        for (int p = 0; 2 * p <= n; ++p) {
            if (p >= 1) REQUIRE(identity_no_central(n, p).ok);
            if (2 * p + 1 <= n) REQUIRE(identity_central(n, p).ok);
            REQUIRE(identity_check(n, p));
        }
    CHECK(identity_check(2, 0));
    CHECK_THROWS(identity_check(1, 1));
}

}
