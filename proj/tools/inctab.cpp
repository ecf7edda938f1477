// inctab: command-line front end for the increasing-tableau library.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "inctab/gallery.hpp"
#include "inctab/json_io.hpp"
#include "inctab/verify.hpp"

using namespace inctab;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

struct Options {
    std::string format = "auto";
    int jobs = 1;
    std::string tableau;  // inline input; stdin when empty
};

int default_n_max() {
    if (const char* env = std::getenv("INCTAB_N_MAX")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw InputError("INCTAB_N_MAX is not an integer");
        }
    }
    return 6;
}

bool wants_json(const Options& o, bool transform) { return o.format == "json" || (o.format == "auto" && transform); }

IncreasingTableau read_tableau(const Options& o) {
    if (!o.tableau.empty()) return parse_tableau(o.tableau);
    std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return parse_tableau(text);
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

FriezeRow parse_row(const std::string& text) {
    FriezeRow row;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            row.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(' ', used) != std::string::npos) throw InputError("bad entry");
        } catch (const std::exception&) {
            throw InputError("row entries must be comma-separated integers, got '" + item + "'");
        }
    }
    if (row.empty()) throw InputError("empty row");
    return row;
}

PartitionShape parse_shape(const std::string& text) {
    std::vector<int> parts;
    for (auto v : parse_row(text)) parts.push_back(static_cast<int>(v));
    return PartitionShape(parts);
}

void check_two_row_bounds(int n, int k) {
    if (n < 1 || n > 8) throw InputError("n must be between 1 and 8");
    if (k < 0 || k >= n) throw InputError("k must satisfy 0 <= k < n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Increasing tableaux: K-promotion, K-evacuation, bijections, friezes and cyclic sieving"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"auto", "text", "json"}));
    app.add_option("--jobs", opt.jobs, "Worker threads for verification")->check(CLI::PositiveNumber);

    int result = kOk;

    // Tableau transforms.
    int times = 1;
    auto* promote = app.add_subcommand("promote", "K-promotion of a tableau (stdin or --tableau)");
    promote->add_option("--tableau,-t", opt.tableau, "Tableau as JSON or rows like 124;345");
    promote->add_option("--times", times, "Apply this many times")->check(CLI::NonNegativeNumber);
    auto* promote_inv = app.add_subcommand("promote-inv", "Inverse K-promotion");
    promote_inv->add_option("--tableau,-t", opt.tableau, "Tableau");
    promote_inv->add_option("--times", times, "Apply this many times")->check(CLI::NonNegativeNumber);
    bool dual = false;
    auto* evacuate = app.add_subcommand("evacuate", "K-evacuation");
    evacuate->add_option("--tableau,-t", opt.tableau, "Tableau");
    evacuate->add_flag("--dual", dual, "Dual K-evacuation (rectangles)");
    auto* rot_cmd = app.add_subcommand("rot", "Rotate a rectangular tableau and complement entries");
    rot_cmd->add_option("--tableau,-t", opt.tableau, "Tableau");

    std::string biject_to, path_in, word_in, partition_in;
    auto* biject = app.add_subcommand("biject", "Bijections for 2-row rectangular tableaux");
    biject->add_option("--to", biject_to, "Target")
        ->required()
        ->check(CLI::IsMember({"flag", "partition", "path", "word", "tableau", "skew"}));
    biject->add_option("--tableau,-t", opt.tableau, "Tableau");
    biject->add_option("--path", path_in, "Small Schroeder path over UDH");
    biject->add_option("--word", word_in, "Height word, e.g. 0,1,1,0");
    biject->add_option("--partition", partition_in, "Noncrossing partition JSON");

    std::string row_in;
    std::size_t depth = 0;
    auto* frieze = app.add_subcommand("frieze", "Jeu de taquin frieze of a tableau, or tropical frieze of a row");
    frieze->add_option("--tableau,-t", opt.tableau, "Tableau");
    frieze->add_option("--row", row_in, "Seed row, comma-separated, starting and ending with 0");
    frieze->add_option("--depth", depth, "Number of rows including the seed");

    int orbit_n = 0, orbit_k = -1;
    auto* orbit = app.add_subcommand("orbit", "Promotion orbit of a tableau, or orbit sizes of Inc_k(2 x n)");
    orbit->add_option("--tableau,-t", opt.tableau, "Tableau");
    orbit->add_option("--n", orbit_n, "Columns");
    orbit->add_option("--k", orbit_k, "Repeats");

    auto* growth = app.add_subcommand("growth", "K-theory growth diagram of a tableau");
    growth->add_option("--tableau,-t", opt.tableau, "Tableau");

    // Reports.
    int csp_n = 0, csp_k = 0;
    std::string group = "promotion";
    auto* csp = app.add_subcommand("csp", "Cyclic sieving table for Inc_k(2 x n)");
    csp->add_option("--n", csp_n, "Columns")->required();
    csp->add_option("--k", csp_k, "Repeats")->required();
    csp->add_option("--group", group, "Acting group")->check(CLI::IsMember({"promotion", "evacuation"}));

    int max_n = 30;
    auto* identities = app.add_subcommand("identities", "Check the type-B binomial identities");
    identities->add_option("--max-n", max_n, "Largest N")->check(CLI::Range(1, 200));

    std::vector<int> qpoly_f, qpoly_maj;
    int qpoly_root = 0;
    auto* qpoly = app.add_subcommand("qpoly", "q-enumerator f(n, k) or the maj generating function");
    qpoly->add_option("--f", qpoly_f, "n k")->expected(2);
    qpoly->add_option("--maj", qpoly_maj, "n k")->expected(2);
    qpoly->add_option("--root", qpoly_root, "Also evaluate at a primitive d-th root of unity");

    int brute_n = 0;
    auto* typeb = app.add_subcommand("typeb", "Type-B noncrossing partition counts");
    typeb->add_option("--brute", brute_n, "N for brute-force enumeration")->required()->check(CLI::Range(1, 8));

    std::string example_id;
    auto* examples = app.add_subcommand("examples", "Recompute a worked example and diff against golden data");
    examples->add_option("id", example_id, "fig2 fig3 fig4 fig5 fig7 ex-4row ex-3row ex-frieze, or all")->required();

    std::string suite;
    std::optional<int> n_max;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "bijections dynamics words frieze csp identities all")->required();
    verify->add_option("--n-max", n_max, "Largest n (default $INCTAB_N_MAX or 6)");

    std::string shape_in;
    std::optional<int> enum_k;
    bool list = false;
    auto* enumerate = app.add_subcommand("enumerate", "Count or list increasing tableaux of a shape");
    enumerate->add_option("--shape", shape_in, "Partition, e.g. 4,4,4")->required();
    enumerate->add_option("--k", enum_k, "Repeats (all k when omitted)");
    enumerate->add_flag("--list", list, "Print every tableau");

    int rank_rows = 3, rank_cols = 3;
    auto* rank = app.add_subcommand("rank-search", "Promotion ranks of rectangular tableaux (exploratory)");
    rank->add_option("--rows", rank_rows, "Rows")->check(CLI::Range(1, 6));
    rank->add_option("--cols", rank_cols, "Columns")->check(CLI::Range(1, 8));

    int exp_length = 6;
    auto* experiment = app.add_subcommand("frieze-experiment",
                                          "Seed rows meeting conditions (1)(2)(3) only: largest step seen (exploratory)");
    experiment->add_option("--length", exp_length, "Row length including both zeros")->check(CLI::Range(2, 14));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        auto show_tableau = [&](const IncreasingTableau& t) {
            if (wants_json(opt, true))
                emit(to_json(t));
            else
                std::cout << render(t);
        };

        if (*promote || *promote_inv) {
            const auto t = read_tableau(opt);
            show_tableau(*promote ? k_promote_pow(t, times) : [&] {
                auto cur = t;
                for (int i = 0; i < times; ++i) cur = k_promote_inv(cur);
                return cur;
            }());
        } else if (*evacuate) {
            const auto t = read_tableau(opt);
            show_tableau(dual ? dual_k_evacuate(t) : k_evacuate(t));
        } else if (*rot_cmd) {
            show_tableau(rot(read_tableau(opt)));
        } else if (*biject) {
            std::optional<IncreasingTableau> t;
            if (!path_in.empty())
                t = from_steps(SchroederPath::parse(path_in));
            else if (!word_in.empty())
                t = from_height_word(HeightWord::parse(word_in));
            else if (!partition_in.empty())
                t = from_ncpartition(ncpartition_from_json(Json::parse(partition_in)));
            else
                t = read_tableau(opt);
            const bool json = wants_json(opt, true);
            if (biject_to == "tableau") {
                show_tableau(*t);
            } else if (biject_to == "flag") {
                const auto flag = to_flag(*t).tableau();
                show_tableau(flag);
            } else if (biject_to == "skew") {
                const auto s = skew_flag(*t);
                if (json)
                    emit({{"outer", s.outer.parts()}, {"inner", s.inner.parts()}, {"rows", s.rows}});
                else
                    std::cout << render(s);
            } else if (biject_to == "partition") {
                const auto p = to_ncpartition(*t);
                if (json)
                    emit(to_json(p));
                else
                    std::cout << p.str() << '\n';
            } else if (biject_to == "path") {
                const auto p = to_steps(*t).str();
                if (json)
                    emit({{"path", p}});
                else
                    std::cout << p << '\n';
            } else {
                const auto w = height_word(*t);
                if (json)
                    emit({{"word", w.heights()}});
                else
                    std::cout << w.str() << '\n';
            }
        } else if (*frieze) {
            TropicalFrieze f = [&] {
                if (!row_in.empty()) {
                    const auto row = parse_row(row_in);
                    return tropical_frieze_from_row(row, depth ? depth : row.size() + 2);
                }
                return jdt_frieze(read_tableau(opt));
            }();
            if (wants_json(opt, true))
                emit(to_json(f));
            else
                std::cout << render(f);
        } else if (*orbit) {
            if (orbit_n > 0) {
                const int k = std::max(orbit_k, 0);
                check_two_row_bounds(orbit_n, k);
                const auto all = enumerate_two_row(orbit_n, k);
                const auto report = orbits(all, [](const IncreasingTableau& t) { return k_promote(t); });
                const bool divides = report.sizes_divide(static_cast<std::size_t>(2 * orbit_n - k));
                if (wants_json(opt, false)) {
                    auto j = to_json(report);
                    j["divides"] = divides;
                    emit(j);
                } else {
                    std::map<std::size_t, std::size_t> histogram;
                    for (auto s : report.sizes) ++histogram[s];
                    std::cout << all.size() << " tableaux, " << report.sizes.size() << " orbits\n";
                    for (auto [size, count] : histogram) std::cout << "  size " << size << ": " << count << " orbits\n";
                    std::cout << "every size divides " << 2 * orbit_n - k << ": " << (divides ? "yes" : "no") << '\n';
                }
                result = divides ? kOk : kFailed;
            } else {
                const auto t = read_tableau(opt);
                std::vector<IncreasingTableau> chain{t};
                for (auto cur = k_promote(t); cur != t; cur = k_promote(cur)) {
                    chain.push_back(cur);
                    if (static_cast<int>(chain.size()) > 10 * std::max(1, t.max_entry()))
                        throw std::runtime_error("orbit longer than the search cap");
                }
                const bool two_row_rect = t.is_rectangular() && t.num_rows() == 2;
                const bool divides = !two_row_rect || t.max_entry() % static_cast<int>(chain.size()) == 0;
                if (wants_json(opt, false)) {
                    Json j{{"schema", std::string(kOrbitSchema)}, {"size", chain.size()}, {"orbit", Json::array()}};
                    for (const auto& c : chain) j["orbit"].push_back(c.rows());
                    if (two_row_rect) j["divides"] = divides;
                    emit(j);
                } else {
                    for (const auto& c : chain) std::cout << render(c) << '\n';
                    std::cout << "orbit size " << chain.size();
                    if (two_row_rect) std::cout << (divides ? ", divides " : ", does not divide ") << t.max_entry();
                    std::cout << '\n';
                }
                result = divides ? kOk : kFailed;
            }
        } else if (*growth) {
            const auto g = growth_diagram(read_tableau(opt));
            if (wants_json(opt, true))
                emit(to_json(g));
            else
                std::cout << render(g);
        } else if (*csp) {
            check_two_row_bounds(csp_n, csp_k);
            const auto report = group == "promotion" ? csp_promotion(csp_n, csp_k) : csp_evacuation(csp_n, csp_k);
            if (wants_json(opt, false)) {
                emit(to_json(report));
            } else {
                std::cout << "Inc_" << csp_k << "(2 x " << csp_n << "), " << report.group << ", cyclic group of order "
                          << report.group_order << "\n";
                std::cout << "   m   d   fixed   f(root)   closed form\n";
                for (const auto& e : report.entries) {
                    std::cout << std::setw(4) << e.m << std::setw(4) << e.order << std::setw(8) << e.fixed
                              << std::setw(10) << (e.root_value ? e.root_value->str() : "?") << std::setw(14)
                              << (e.closed_form ? e.closed_form->str() : "-") << (e.ok ? "" : "   MISMATCH") << '\n';
                }
                std::cout << (report.ok ? "cyclic sieving holds\n" : "cyclic sieving FAILS\n");
            }
            result = report.ok ? kOk : kFailed;
        } else if (*identities) {
            VerifyConfig config;
            config.identities_max_n = max_n;
            const auto results = run_suite("identities", config);
            if (wants_json(opt, false))
                emit(to_json(results));
            else
                std::cout << render(results);
            result = all_ok(results) ? kOk : kFailed;
        } else if (*qpoly) {
            if (qpoly_f.empty() == qpoly_maj.empty()) throw InputError("give exactly one of --f n k or --maj n k");
            const auto& nk = qpoly_f.empty() ? qpoly_maj : qpoly_f;
            check_two_row_bounds(nk[0], nk[1]);
            const auto p = qpoly_f.empty() ? maj_gen_poly(nk[0], nk[1]) : f_poly(nk[0], nk[1]);
            std::optional<RootValue> at_root;
            if (qpoly_root > 0) at_root = eval_at_root(p, qpoly_root);
            if (wants_json(opt, false)) {
                Json j{{"poly", p.str()}, {"coefficients", Json::array()}};
                for (const auto& c : p.coefficients()) j["coefficients"].push_back(c.str());
                if (at_root) j["root_value"] = at_root->value ? Json(at_root->value->str()) : Json(at_root->remainder.str());
                emit(j);
            } else {
                std::cout << p.str() << '\n';
                if (at_root)
                    std::cout << "at a primitive root of unity of order " << qpoly_root << ": "
                              << (at_root->value ? at_root->value->str() : at_root->remainder.str() + " (mod Phi)") << '\n';
            }
        } else if (*typeb) {
            const auto table = typeb_bruteforce(brute_n);
            bool ok = true;
            Json rows = Json::array();
            std::ostringstream text;
            text << "   p  central  all  no-singleton  formula\n";
            for (int p = 0; p <= brute_n; ++p)
                for (bool central : {false, true}) {
                    std::int64_t all = 0, free = 0;
                    for (bool f : {false, true})
                        if (auto it = table.find({p, central, f}); it != table.end()) {
                            all += it->second;
                            if (f) free = it->second;
                        }
                    const auto formula = typeb_count(brute_n, p, central);
                    ok = ok && formula == free;
                    rows.push_back({{"p", p}, {"central", central}, {"all", all}, {"no_singleton", free},
                                    {"formula", formula.str()}});
                    text << std::setw(4) << p << std::setw(9) << (central ? "yes" : "no") << std::setw(5) << all
                         << std::setw(14) << free << std::setw(9) << formula.str() << '\n';
                }
            if (wants_json(opt, false))
                emit({{"n", brute_n}, {"rows", rows}, {"ok", ok}});
            else
                std::cout << text.str() << (ok ? "formula matches brute force\n" : "formula MISMATCH\n");
            result = ok ? kOk : kFailed;
        } else if (*examples) {
            std::vector<std::string> ids;
            if (example_id == "all")
                ids = gallery_ids();
            else
                ids.push_back(example_id);
            Json out = Json::array();
            for (const auto& id : ids) {
                const auto r = run_example(id);
                if (!r.ok()) result = kFailed;
                if (wants_json(opt, false)) {
                    out.push_back({{"id", r.id}, {"ok", r.ok()}, {"computed", r.computed}, {"mismatches", r.mismatches}});
                } else {
                    std::cout << "== " << r.id << "\n" << r.rendered;
                    for (const auto& m : r.mismatches) std::cout << "  MISMATCH " << m << '\n';
                    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.id << "\n";
                }
            }
            if (wants_json(opt, false)) emit(out);
        } else if (*verify) {
            VerifyConfig config;
            config.n_max = n_max.value_or(default_n_max());
            config.jobs = opt.jobs;
            const auto results = run_suite(suite, config);
            if (wants_json(opt, false))
                emit(to_json(results));
            else
                std::cout << render(results);
            result = all_ok(results) ? kOk : kFailed;
        } else if (*enumerate) {
            const auto shape = parse_shape(shape_in);
            if (shape.size() > 13) throw InputError("shape too large (at most 13 boxes)");
            Json counts = Json::object();
            std::size_t total = 0;
            for (int k = enum_k.value_or(0); k <= enum_k.value_or(shape.size() - 1); ++k) {
                const auto all = enumerate_shape(shape, k);
                total += all.size();
                counts[std::to_string(k)] = all.size();
                if (list && !wants_json(opt, false))
                    for (const auto& t : all) std::cout << render(t) << '\n';
                if (!wants_json(opt, false) && all.size()) std::cout << "k=" << k << ": " << all.size() << '\n';
            }
            if (wants_json(opt, false))
                emit({{"shape", shape.parts()}, {"counts", counts}, {"total", total}});
            else
                std::cout << "total: " << total << '\n';
        } else if (*rank) {
            const PartitionShape shape(std::vector<int>(rank_rows, rank_cols));
            if (shape.size() > 13) throw InputError("shape too large (at most 13 boxes)");
            Json rows = Json::array();
            for (int k = 0; k < shape.size(); ++k) {
                const auto all = enumerate_shape(shape, k);
                if (all.empty()) continue;
                std::size_t not_dividing = 0;
                std::map<int, std::size_t> ranks;
                std::optional<IncreasingTableau> example;
                for (const auto& t : all) {
                    const int pr = promotion_rank(t);
                    ++ranks[pr];
                    if (t.max_entry() % pr != 0) {
                        ++not_dividing;
                        if (!example) example = t;
                    }
                }
                Json row{{"k", k}, {"count", all.size()}, {"not_dividing", not_dividing}};
                if (example) row["example"] = example->rows();
                rows.push_back(row);
                if (!wants_json(opt, false)) {
                    std::cout << "k=" << k << " M=" << shape.size() - k << ": " << all.size() << " tableaux, ranks";
                    for (auto [r, c] : ranks) std::cout << ' ' << r << "x" << c;
                    std::cout << "; rank not dividing M: " << not_dividing << '\n';
                    if (example) std::cout << render(*example);
                }
            }
            if (wants_json(opt, false)) emit({{"shape", shape.parts()}, {"rows", rows}});
        } else if (*experiment) {
            // All rows of the given length meeting (1)(2)(3), grown to two periods.
            std::size_t seeds = 0, with_double = 0, stays_small = 0;
            std::int64_t largest = 0;
            FriezeRow row(static_cast<std::size_t>(exp_length), 0);
            std::function<void(std::size_t)> fill = [&](std::size_t i) {
                if (i + 1 == row.size()) {
                    if (std::abs(row[i - 1]) > 1) return;
                    const auto c = classify_row(row);
                    if (!(c.endpoints_zero && c.at_least_minus_one && c.steps_at_most_one)) return;
                    ++seeds;
                    if (!c.no_double_minus_one) ++with_double;
                    const auto report = check_propagation(row);
                    largest = std::max(largest, report.max_step);
                    if (report.max_step <= 2) ++stays_small;
                    return;
                }
                for (std::int64_t v = row[i - 1] - 1; v <= row[i - 1] + 1; ++v) {
                    if (v < -1) continue;
                    row[i] = v;
                    fill(i + 1);
                }
                row[i] = 0;
            };
            if (row.size() >= 2) fill(1);
            if (wants_json(opt, false)) {
                emit({{"length", exp_length}, {"seeds", seeds}, {"with_double_minus_one", with_double},
                      {"max_step_at_most_2", stays_small}, {"largest_step", largest}});
            } else {
                std::cout << seeds << " seed rows of length " << exp_length << " meet (1)(2)(3); " << with_double
                          << " of them violate (4)\n"
                          << stays_small << " keep every step <= 2 over two periods; largest step seen " << largest
                          << '\n';
            }
        }
    } catch (const TableauError& e) {
        std::cerr << "invalid tableau: " << e.what() << '\n';
        return kInvalid;
    } catch (const Json::exception& e) {
        std::cerr << "invalid JSON: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return result;
}
