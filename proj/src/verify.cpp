#include "inctab/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

namespace inctab {

namespace {

std::string show(const IncreasingTableau& t) {
    std::string s;
    for (const auto& row : t.rows()) {
        if (!s.empty()) s += ';';
        for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
    }
    return "<" + s + ">";
}

std::string show(const FriezeRow& row) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
    return "[" + s + "]";
}

// Accumulates one check; keeps only the first failure.
class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& witness) {
        ++cases_;
        if (!ok && ok_) {
            ok_ = false;
            witness_ = witness();
        }
    }
    void fail(std::string witness) { expect(false, [&] { return witness; }); }
    CheckResult result(std::string suite, std::string name) const {
        return {std::move(suite), std::move(name), ok_, cases_, witness_, 0};
    }

private:
    bool ok_ = true;
    std::size_t cases_ = 0;
    std::string witness_;
};

using TableauCheck = std::function<void(const IncreasingTableau&, Tally&)>;

void over_two_row(int n_max, Tally& tally, const TableauCheck& check) {
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k < n; ++k)
            for (const auto& t : enumerate_two_row(n, k)) check(t, tally);
}

struct Check {
    std::string suite;
    std::string name;
    std::function<void(const VerifyConfig&, Tally&)> body;
};

std::vector<Check> dynamics_checks() {
    return {
        {"dynamics", "enumeration counts match f(1)",
         [](const VerifyConfig& c, Tally& tally) {
             for (int n = 1; n <= c.n_max; ++n)
                 for (int k = 0; k < n; ++k) {
                     const auto count = enumerate_two_row(n, k).size();
                     tally.expect(f_poly(n, k).evaluate(1) == count, [&] {
                         return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " count " + std::to_string(count) +
                                " vs f(1) " + f_poly(n, k).evaluate(1).str();
                     });
                 }
         }},
        {"dynamics", "promote-inv undoes promote",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 tl.expect(k_promote_inv(k_promote(t)) == t && k_promote(k_promote_inv(t)) == t, [&] { return show(t); });
             });
         }},
        {"dynamics", "P^(2n-k) = id",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 tl.expect(k_promote_pow(t, t.max_entry()) == t, [&] { return show(t); });
             });
         }},
        {"dynamics", "orbit sizes divide 2n-k",
         [](const VerifyConfig& c, Tally& tally) {
             for (int n = 1; n <= c.n_max; ++n)
                 for (int k = 0; k < n; ++k) {
                     const auto all = enumerate_two_row(n, k);
                     const auto report = orbits(all, [](const IncreasingTableau& t) { return k_promote(t); });
                     tally.expect(report.sizes_divide(static_cast<std::size_t>(2 * n - k)),
                                  [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
                 }
         }},
        {"dynamics", "E and E* are involutions",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 tl.expect(k_evacuate(k_evacuate(t)) == t && dual_k_evacuate(dual_k_evacuate(t)) == t,
                           [&] { return show(t); });
             });
         }},
        {"dynamics", "P E = E P^-1",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 tl.expect(k_promote(k_evacuate(t)) == k_evacuate(k_promote_inv(t)), [&] { return show(t); });
             });
         }},
        {"dynamics", "E* E = P^M",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 tl.expect(dual_k_evacuate(k_evacuate(t)) == k_promote_pow(t, t.max_entry()), [&] { return show(t); });
             });
         }},
        {"dynamics", "E = rot on two rows",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 tl.expect(k_evacuate(t) == rot(t), [&] { return show(t); });
             });
         }},
        {"dynamics", "growth diagram local rule",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 const auto bad = find_local_rule_violation(growth_diagram(t));
                 tl.expect(!bad, [&] {
                     return show(t) + " at (" + std::to_string(bad->first) + "," + std::to_string(bad->second) + ")";
                 });
             });
         }},
        {"dynamics", "shape (4,4,4) counts 1596 / 4593",
         [](const VerifyConfig&, Tally& tally) {
             const PartitionShape shape({4, 4, 4});
             std::size_t total = 0, at_two = 0;
             for (int k = 0; k < shape.size(); ++k) {
                 const auto count = enumerate_shape(shape, k).size();
                 total += count;
                 if (k == 2) at_two = count;
             }
             tally.expect(at_two == 1596, [&] { return "k=2 count " + std::to_string(at_two); });
             tally.expect(total == 4593, [&] { return "total " + std::to_string(total); });
         }},
    };
}

std::vector<Check> word_checks() {
    return {
        {"words", "steps and height words round-trip",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 const auto path = to_steps(t);
                 const auto word = height_word(t);
                 tl.expect(from_steps(path) == t && from_height_word(word) == t && height_word(path) == word &&
                               steps_of(word) == path && height_word_from_truncations(t) == word,
                           [&] { return show(t); });
             });
         }},
        {"words", "word_promote matches k_promote",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 tl.expect(word_promote(height_word(t)) == height_word(k_promote(t)), [&] { return show(t); });
             });
         }},
        {"words", "height growth diagram: first row = last column",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 const auto h = height_growth_diagram(t);
                 tl.expect(h.first_row() == h.last_column(), [&] { return show(t); });
             });
         }},
    };
}

std::vector<Check> bijection_checks() {
    return {
        {"bijections", "flag bijection round-trips",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 const auto flag = to_flag(t);
                 tl.expect(from_flag(flag) == t && flag.k() == t.repeats(), [&] { return show(t); });
             });
         }},
        {"bijections", "maj agrees with the flag major index",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 tl.expect(maj(t) == major_index(to_flag(t).tableau()), [&] { return show(t); });
             });
         }},
        {"bijections", "F E = E F",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 tl.expect(flag_evacuation_commutes(t).commutes, [&] { return show(t); });
             });
         }},
        {"bijections", "skew flag rectifies to F",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 tl.expect(rectify_skew_flag(t) == to_flag(t), [&] { return show(t); });
             });
         }},
        {"bijections", "partition bijection round-trips",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 const auto p = to_ncpartition(t);
                 tl.expect(p.is_noncrossing() && !p.has_singleton() &&
                               p.num_blocks() == static_cast<std::size_t>(t.row_length(1) - t.repeats()) &&
                               from_ncpartition(p) == t,
                           [&] { return show(t) + " -> " + p.str(); });
             });
         }},
        {"bijections", "partition counts match",
         [](const VerifyConfig& c, Tally& tally) {
             for (int n = 1; n <= c.n_max; ++n) {
                 for (int k = 0; k < n; ++k) {
                     const auto direct = enumerate_two_row(n, k).size();
                     // 2n - k points, n - k blocks.
                     std::size_t count = 0;
                     for (const auto& p : enumerate_noncrossing(2 * n - k))
                         if (!p.has_singleton() && p.num_blocks() == static_cast<std::size_t>(n - k)) ++count;
                     tally.expect(count == direct, [&] {
                         return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(count) +
                                " partitions vs " + std::to_string(direct) + " tableaux";
                     });
                 }
             }
         }},
        {"bijections", "partition of P(T) is the rotation",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 tl.expect(to_ncpartition(k_promote(t)) == rotate_nc(to_ncpartition(t)), [&] { return show(t); });
             });
         }},
        {"bijections", "type-B counts match brute force",
         [](const VerifyConfig& c, Tally& tally) {
             for (int big_n = 1; big_n <= std::min(c.typeb_max_n, 8); ++big_n) {
                 const auto table = typeb_bruteforce(big_n);
                 for (int p = 0; p <= big_n; ++p) {
                     BigInt all = 0, central_all = 0;
                     for (bool central : {false, true}) {
                         std::int64_t free_count = 0;
                         for (bool free : {false, true}) {
                             const auto it = table.find({p, central, free});
                             const std::int64_t v = it == table.end() ? 0 : it->second;
                             all += v;
                             if (central) central_all += v;
                             if (free) free_count = v;
                         }
                         tally.expect(typeb_count(big_n, p, central) == free_count, [&] {
                             return "N=" + std::to_string(big_n) + " p=" + std::to_string(p) +
                                    (central ? " central" : " no central") + ": formula " +
                                    typeb_count(big_n, p, central).str() + " vs brute " + std::to_string(free_count);
                         });
                     }
                     tally.expect(all == typeb_total(big_n, p) && central_all == typeb_central_total(big_n, p), [&] {
                         return "N=" + std::to_string(big_n) + " p=" + std::to_string(p) + " totals " + all.str() + "/" +
                                central_all.str();
                     });
                 }
             }
         }},
    };
}

std::vector<Check> frieze_checks() {
    return {
        {"frieze", "jdt friezes satisfy the tropical relation",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 if (t.max_entry() < 3) return;  // rows would be empty
                 const auto f = jdt_frieze(t);
                 const auto bad = find_relation_violation(f);
                 const auto grown = tropical_frieze_from_row(f.rows().front(), f.depth());
                 tl.expect(!bad && grown == f, [&] { return show(t); });
             });
         }},
        {"frieze", "closure of row conditions",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 if (t.max_entry() < 3) return;
                 const auto row = frieze_row(t);
                 const auto report = check_propagation(row);
                 const bool hypotheses = report.seed_tableau_row && (t.repeats() > 0 || report.seed_standard_row);
                 tl.expect(hypotheses && report.closure_ok() && tableau_from_frieze_row(row) == t,
                           [&] { return show(t) + " row " + show(row); });
             });
         }},
        {"frieze", "glide symmetry of jdt friezes",
         [](const VerifyConfig& c, Tally& tally) {
             over_two_row(c.n_max, tally, [](const IncreasingTableau& t, Tally& tl) {
                 if (t.max_entry() < 3) return;
                 const auto row = frieze_row(t);
                 tl.expect(has_glide_symmetry(tropical_frieze_from_row(row, 2 * (row.size() + 1) + 1)),
                           [&] { return show(t); });
             });
         }},
        {"frieze", "glide symmetry of random seeds",
         [](const VerifyConfig& c, Tally& tally) {
             std::mt19937_64 rng(c.seed);
             std::uniform_int_distribution<int> length(2, 12), entry(-3, 3);
             for (int i = 0; i < c.random_rows; ++i) {
                 FriezeRow row(static_cast<std::size_t>(length(rng)), 0);
                 for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = entry(rng);
                 tally.expect(has_glide_symmetry(tropical_frieze_from_row(row, 2 * (row.size() + 1) + 1)),
                              [&] { return show(row); });
             }
         }},
    };
}

std::vector<Check> csp_checks() {
    return {
        {"csp", "promotion CSP",
         [](const VerifyConfig& c, Tally& tally) {
             for (int n = 1; n <= c.n_max; ++n)
                 for (int k = 0; k < n; ++k) {
                     const auto report = csp_promotion(n, k);
                     tally.expect(report.ok, [&] {
                         const auto* w = report.witness();
                         return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(w->m) +
                                " fixed " + std::to_string(w->fixed);
                     });
                 }
         }},
        {"csp", "evacuation CSP",
         [](const VerifyConfig& c, Tally& tally) {
             for (int n = 1; n <= c.n_max; ++n)
                 for (int k = 0; k < n; ++k) {
                     const auto report = csp_evacuation(n, k);
                     tally.expect(report.ok, [&] {
                         const auto* w = report.witness();
                         return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(w->m) +
                                " fixed " + std::to_string(w->fixed);
                     });
                 }
         }},
        {"csp", "maj generating function = q^(n+k(k+1)/2) f",
         [](const VerifyConfig& c, Tally& tally) {
             for (int n = 1; n <= c.n_max; ++n)
                 for (int k = 0; k < n; ++k) {
                     const auto lhs = maj_gen_poly(n, k);
                     const auto rhs = IntPolynomial::monomial(static_cast<unsigned>(maj_shift(n, k))) * f_poly(n, k);
                     tally.expect(lhs == rhs, [&] {
                         return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + lhs.str() + " vs " + rhs.str();
                     });
                 }
         }},
    };
}

std::vector<Check> identity_checks() {
    return {
        {"identities", "type-B binomial identities",
         [](const VerifyConfig& c, Tally& tally) {
             for (int big_n = 1; big_n <= c.identities_max_n; ++big_n)
                 for (int p = 0; 2 * p <= big_n; ++p) {
                     if (p >= 1) {
                         const auto r = identity_no_central(big_n, p);
                         tally.expect(r.ok, [&] {
                             return "no central N=" + std::to_string(big_n) + " p=" + std::to_string(p) + ": " +
                                    r.lhs.str() + " vs " + r.rhs.str();
                         });
                     }
                     if (2 * p + 1 <= big_n) {
                         const auto r = identity_central(big_n, p);
                         tally.expect(r.ok, [&] {
                             return "central N=" + std::to_string(big_n) + " p=" + std::to_string(p) + ": " +
                                    r.lhs.str() + " vs " + r.rhs.str();
                         });
                     }
                 }
         }},
    };
}

std::vector<Check> checks_for(std::string_view suite) {
    if (suite == "dynamics") return dynamics_checks();
    if (suite == "words") return word_checks();
    if (suite == "bijections") return bijection_checks();
    if (suite == "frieze") return frieze_checks();
    if (suite == "csp") return csp_checks();
    if (suite == "identities") return identity_checks();
    if (suite == "all") {
        std::vector<Check> all;
        for (const auto& name : suite_names()) {
            if (name == "all") continue;
            auto part = checks_for(name);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw InputError("unknown suite '" + std::string(suite) + "'");
}

CheckResult run_check(const Check& check, const VerifyConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    Tally tally;
    try {
        check.body(config, tally);
    } catch (const std::exception& e) {
        tally.fail(std::string("exception: ") + e.what());
    }
    auto result = tally.result(check.suite, check.name);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"bijections", "dynamics", "words", "frieze", "csp", "identities", "all"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyConfig& config) {
    if (config.n_max < 1 || config.n_max > 8) throw InputError("n-max must be between 1 and 8");
    const auto checks = checks_for(suite);
    std::vector<CheckResult> results(checks.size());
    const int workers = std::clamp(config.jobs, 1, static_cast<int>(std::max<std::size_t>(checks.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < checks.size();) results[i] = run_check(checks[i], config);
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return results;
}

bool all_ok(const std::vector<CheckResult>& results) noexcept {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.ok; });
}

Json to_json(const std::vector<CheckResult>& results) {
    Json j{{"schema", std::string(kReportSchema)}, {"ok", all_ok(results)}, {"checks", Json::array()}};
    for (const auto& r : results) {
        Json row{{"suite", r.suite}, {"name", r.name}, {"ok", r.ok}, {"cases", r.cases}, {"seconds", r.seconds}};
        if (!r.ok) row["witness"] = r.witness;
        j["checks"].push_back(std::move(row));
    }
    return j;
}

std::string render(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.ok ? "PASS " : "FAIL ") << std::left << std::setw(11) << r.suite << ' ' << std::setw(48) << r.name
           << std::right << std::setw(8) << r.cases << " cases " << std::fixed << std::setprecision(2) << r.seconds
           << "s\n";
        if (!r.ok) os << "     witness: " << r.witness << '\n';
    }
    os << (all_ok(results) ? "all checks passed" : "some checks FAILED") << '\n';
    return os.str();
}

}  // namespace inctab
