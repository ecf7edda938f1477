// Acceptance suite: one PASS/FAIL line per criterion, with its time budget.
// Exits 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "inctab/gallery.hpp"
#include "inctab/verify.hpp"
#include "oracles.hpp"

using namespace inctab;

namespace {

constexpr int kNMax = 6;

struct Outcome {
    bool ok = true;
    std::string detail;
    std::string note;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

template <typename F>
void for_each_two_row(F&& f) {
    for (int n = 1; n <= kNMax; ++n)
        for (int k = 0; k < n; ++k)
            for (const auto& t : enumerate_two_row(n, k)) f(n, k, t);
}

std::string show(const IncreasingTableau& t) {
    std::ostringstream os;
    os << '<';
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r) os << ';';
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) os << (c ? "," : "") << t.rows()[r][c];
    }
    os << '>';
    return os.str();
}

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

Outcome enumeration() {
    Outcome o;
    const std::vector<std::int64_t> totals{1, 3, 11, 45, 197, 903};
    const auto schroeder = oracle::small_schroeder(kNMax);
    o.expect(schroeder == totals, "small Schroeder oracle disagrees with the frozen totals");
    for (int n = 1; n <= kNMax; ++n) {
        std::int64_t total = 0;
        for (int k = 0; k < n; ++k) {
            const auto count = static_cast<std::int64_t>(enumerate_two_row(n, k).size());
            total += count;
            o.expect(f_poly(n, k).evaluate(1) == count, nk(n, k) + ": count differs from f(1)");
            o.expect(static_cast<std::int64_t>(oracle::two_row_by_rows(n, 2 * n - k).size()) == count,
                     nk(n, k) + ": count differs from row-choice brute force");
        }
        o.expect(total == totals[n - 1], "n=" + std::to_string(n) + ": total " + std::to_string(total));
    }
    return o;
}

Outcome promotion_order() {
    Outcome o;
    for_each_two_row([&](int n, int k, const IncreasingTableau& t) {
        o.expect(k_promote_pow(t, 2 * n - k) == t, show(t));
    });
    return o;
}

Outcome evacuation_algebra() {
    Outcome o;
    for_each_two_row([&](int n, int k, const IncreasingTableau& t) {
        const auto e = k_evacuate(t);
        o.expect(k_evacuate(e) == t, "E E != id at " + show(t));
        o.expect(dual_k_evacuate(dual_k_evacuate(t)) == t, "E* E* != id at " + show(t));
        o.expect(k_promote(e) == k_evacuate(k_promote_inv(t)), "P E != E P^-1 at " + show(t));
        o.expect(dual_k_evacuate(e) == k_promote_pow(t, 2 * n - k), "E* E != P^(2n-k) at " + show(t));
        o.expect(e == rot(t), "E != rot at " + show(t));
        o.expect(word_promote(height_word(t)) == height_word(k_promote(t)), "word promotion differs at " + show(t));
        const auto h = height_growth_diagram(t);
        o.expect(h.first_row() == h.last_column(), "first row != last column at " + show(t));
    });
    return o;
}

Outcome promotion_csp() {
    Outcome o;
    int tables = 0;
    for (int n = 1; n <= kNMax; ++n)
        for (int k = 0; k < n; ++k) {
            const auto r = csp_promotion(n, k);
            ++tables;
            for (const auto& e : r.entries) {
                if (e.order == 1) o.expect(e.fixed == f_poly(n, k).evaluate(1), nk(n, k) + ": m=0 is not |X|");
                o.expect(e.root_value && *e.root_value == e.fixed,
                         nk(n, k) + " m=" + std::to_string(e.m) + ": fixed " + std::to_string(e.fixed) + " vs f(root)");
                if (e.order >= 2)
                    o.expect(e.closed_form && *e.closed_form == e.fixed,
                             nk(n, k) + " m=" + std::to_string(e.m) + ": closed form disagrees");
            }
        }
    o.note = "closed form used for d >= 2 only; d = 1 (m = 0) checked as f(1) = |X| in " + std::to_string(tables) + " tables";
    return o;
}

Outcome evacuation_csp() {
    Outcome o;
    for (int n = 1; n <= kNMax; ++n)
        for (int k = 0; k < n; ++k) {
            const auto all = enumerate_two_row(n, k);
            std::int64_t fixed = 0;
            for (const auto& t : all) fixed += k_evacuate(t) == t;
            const auto f = f_poly(n, k);
            o.expect(f.evaluate(-1) == fixed, nk(n, k) + ": E-fixed " + std::to_string(fixed));
            o.expect(f.evaluate(1) == all.size(), nk(n, k) + ": |X| != f(1)");
        }
    return o;
}

Outcome maj_shift_identity() {
    Outcome o;
    int with_k = 0, printed_fails = 0;
    for (int n = 1; n <= kNMax; ++n)
        for (int k = 0; k < n; ++k) {
            const auto shift = static_cast<unsigned>(n + k * (k + 1) / 2);
            o.expect(maj_gen_poly(n, k) == IntPolynomial::monomial(shift) * f_poly(n, k), nk(n, k));
            if (k > 0) {
                ++with_k;
                const auto printed = static_cast<unsigned>(n + k * (k - 1) / 2);
                printed_fails += maj_gen_poly(n, k) != IntPolynomial::monomial(printed) * f_poly(n, k);
            }
        }
    o.note = "shift n + k(k-1)/2 fails in " + std::to_string(printed_fails) + " of " + std::to_string(with_k) +
             " cases with k > 0";
    return o;
}

Outcome worked_examples() {
    Outcome o;
    for (const auto& id : gallery_ids()) {
        const auto r = run_example(id);
        o.expect(r.ok(), id + ": " + (r.mismatches.empty() ? "" : r.mismatches.front()));
    }
    return o;
}

Outcome shape_444() {
    Outcome o;
    const PartitionShape shape({4, 4, 4});
    std::size_t total = 0, at_two = 0;
    for (int k = 0; k < shape.size(); ++k) {
        const auto c = enumerate_shape(shape, k).size();
        total += c;
        if (k == 2) at_two = c;
    }
    o.expect(at_two == 1596, "k=2 gives " + std::to_string(at_two));
    o.expect(total == 4593, "total " + std::to_string(total));
    return o;
}

Outcome flag_maps() {
    Outcome o;
    for_each_two_row([&](int, int, const IncreasingTableau& t) {
        o.expect(flag_evacuation_commutes(t).commutes, "F E != E F at " + show(t));
        o.expect(rectify_skew_flag(t) == to_flag(t), "rectification != F at " + show(t));
    });
    return o;
}

Outcome partitions_and_typeb() {
    Outcome o;
    for_each_two_row([&](int, int, const IncreasingTableau& t) {
        o.expect(to_ncpartition(k_promote(t)) == rotate_nc(to_ncpartition(t)), "pi P != R pi at " + show(t));
    });
    for (int big_n = 1; big_n <= 6; ++big_n) {
        const auto brute = typeb_bruteforce(big_n);
        for (int p = 0; p <= big_n; ++p) {
            BigInt all = 0, central_all = 0;
            for (bool central : {false, true})
                for (bool free : {false, true}) {
                    const auto it = brute.find({p, central, free});
                    const std::int64_t v = it == brute.end() ? 0 : it->second;
                    all += v;
                    if (central) central_all += v;
                    if (free)
                        o.expect(typeb_count(big_n, p, central) == v,
                                 "N=" + std::to_string(big_n) + " p=" + std::to_string(p) + " central=" +
                                     std::to_string(central));
                }
            const BigInt c2 = binomial(big_n, p) * binomial(big_n, p);
            o.expect(all == c2 && all == typeb_total(big_n, p), "total at N=" + std::to_string(big_n));
            o.expect(central_all * big_n == (big_n - p) * c2 && central_all == typeb_central_total(big_n, p),
                     "central total at N=" + std::to_string(big_n));
        }
    }
    for (int big_n = 1; big_n <= 30; ++big_n)
        for (int p = 0; 2 * p <= big_n; ++p) {
            if (p >= 1) o.expect(identity_no_central(big_n, p).ok, "first identity at N=" + std::to_string(big_n));
            if (2 * p + 1 <= big_n) o.expect(identity_central(big_n, p).ok, "second identity at N=" + std::to_string(big_n));
        }
    return o;
}

Outcome tropical() {
    Outcome o;
    std::mt19937_64 rng(20130611ULL);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t len = 2 + rng() % 11;  // 2..12
        FriezeRow row(len, 0);
        for (std::size_t i = 1; i + 1 < len; ++i) row[i] = static_cast<int>(rng() % 7) - 3;
        const auto f = tropical_frieze_from_row(row, 2 * (len + 1) + 1);
        o.expect(!find_relation_violation(f) && has_glide_symmetry(f), "random seed " + std::to_string(trial));
    }
    for_each_two_row([&](int, int, const IncreasingTableau& t) {
        if (t.max_entry() < 3) return;
        o.expect(!find_relation_violation(jdt_frieze(t)), "relation fails for " + show(t));
        const auto row = frieze_row(t);
        const auto c = classify_row(row);
        const auto report = check_propagation(row);
        o.expect(c.tableau_row() && report.all_tableau_rows, "(1)(2)(3)(4) not closed for " + show(t));
        if (c.standard_row()) o.expect(report.all_standard_rows, "(1)(2)(3') not closed for " + show(t));
        o.expect(t.repeats() > 0 || c.standard_row(), "standard row lacks (3') for " + show(t));
    });
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "enumeration totals and per-k counts", 5, enumeration},
        {2, "P^(2n-k) = id", 10, promotion_order},
        {3, "evacuation algebra, word promotion, height growth", 30, evacuation_algebra},
        {4, "promotion cyclic sieving (root value and closed form)", 30, promotion_csp},
        {5, "evacuation cyclic sieving", 5, evacuation_csp},
        {6, "maj generating function, shift n + k(k+1)/2", 5, maj_shift_identity},
        {7, "worked examples bit-exact", 5, worked_examples},
        {8, "shape (4,4,4): 1596 at k=2, 4593 total", 30, shape_444},
        {9, "flag maps: F E = E F and rectification", 20, flag_maps},
        {10, "rotation, type-B counts and identities", 30, partitions_and_typeb},
        {11, "tropical friezes: glide symmetry, relation, closure", 10, tropical},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_seconds;
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << " [" << std::setw(2) << c.id << "] " << c.name << " (" << std::fixed
                  << std::setprecision(2) << secs << "s / " << std::setprecision(0) << c.budget_seconds << "s)";
        if (!o.ok) std::cout << " -- " << o.detail;
        if (o.ok && !in_time) std::cout << " -- over time budget";
        std::cout << '\n';
        if (!o.note.empty()) std::cout << "       note: " << o.note << '\n';
    }
    std::cout << (failures ? "acceptance: FAILED " + std::to_string(failures) : std::string("acceptance: all passed"))
              << '\n';
    return failures ? 1 : 0;
}
