#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inctab/polynomial.hpp"

namespace inctab {

/// q-enumerator of Inc_k(2 x n):
///     [n-1 choose k]_q [2n-k choose n-k-1]_q / [n-k]_q.
IntPolynomial f_poly(int n, int k);

/// Sum of q^maj(T) over Inc_k(2 x n), by enumeration.
IntPolynomial maj_gen_poly(int n, int k);

/// Exponent s with maj_gen_poly(n, k) = q^s f_poly(n, k): n + k(k+1)/2.
int maj_shift(int n, int k);

/// f_poly(n, k) at a primitive d-th root of unity from the factorial closed
/// form. Requires d >= 2 and d | 2n - k.
BigInt closed_form_f(int n, int k, int d);

/// One row of a cyclic sieving check: the m-th group element.
struct CSPEntry {
    int m = 0;
    int order = 1;  // d = (group order) / gcd(m, group order)
    std::int64_t fixed = 0;
    std::optional<BigInt> root_value;    // f at a primitive d-th root, via Φ_d
    std::optional<BigInt> closed_form;   // d >= 2 only
    bool ok = false;
};

struct CSPReport {
    int n = 0;
    int k = 0;
    int group_order = 0;
    std::string group;  // "promotion" or "evacuation"
    std::vector<CSPEntry> entries;
    bool ok = false;

    /// First failing entry, if any.
    const CSPEntry* witness() const noexcept;
};

/// (Inc_k(2 x n), C_{2n-k}, f) with the generator acting by K-promotion.
CSPReport csp_promotion(int n, int k);

/// (Inc_k(2 x n), C_2, f) with the generator acting by K-evacuation.
CSPReport csp_evacuation(int n, int k);

/// Noncrossing B_N-partitions with p block pairs and no singleton blocks,
/// without (central = false) or with a central block, by inclusion-exclusion.
BigInt typeb_count(int n, int p, bool central);

/// C(N, p)^2: all noncrossing B_N-partitions with p pairs.
BigInt typeb_total(int n, int p);
/// (N - p)/N C(N, p)^2: those with a central block.
BigInt typeb_central_total(int n, int p);

struct IdentityCheck {
    BigInt lhs;
    BigInt rhs;
    bool ok = false;
};

/// Σ (-1)^i C(N,i) C(N-i,p-i)^2 (p-i)/(N-i) = N! / ((N-2p)! p! (p-1)! (N-p)),
/// for 1 <= p and 2p <= N.
IdentityCheck identity_no_central(int n, int p);
/// Σ (-1)^i C(N,i) C(N-i,p-i)^2 (N-p)/(N-i) = N! / ((N-2p-1)! p! p! (N-p)),
/// for 0 <= p and 2p + 1 <= N.
IdentityCheck identity_central(int n, int p);

/// Every identity whose range admits (N, p) holds. Throws when neither applies.
bool identity_check(int n, int p);

}  // namespace inctab
