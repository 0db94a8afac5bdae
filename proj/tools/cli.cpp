// Command-line front end.  All output is deterministic; --json switches the
// human-readable summaries to machine-readable JSON on stdout.
//
// Exit codes: 0 = every checked statement holds, 1 = some mathematical
// verdict is false, 2 = usage error or budget exhaustion.

#include <CLI11.hpp>

#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "csieve/cherednik.hpp"
#include "csieve/csp.hpp"
#include "csieve/json_io.hpp"
#include "csieve/noncrossing.hpp"

using namespace csieve;

namespace {

std::vector<int> parse_composition(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("composition part is not an integer: '" + item + "'");
        }
        if (pos != item.size()) throw UsageError("composition part is not an integer: '" + item + "'");
        if (v < 0) throw UsageError("composition parts must be nonnegative");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty composition");
    std::vector<int> positive;
    for (int v : out)
        if (v > 0) positive.push_back(v);
    if (positive.size() != out.size())
        std::cerr << "note: zero parts dropped from the composition" << std::endl;
    if (positive.empty()) throw UsageError("composition has no positive part");
    return positive;
}

std::vector<Permutation> parse_generators(const std::string& text, int n) {
    // generators separated by ';', each in cycle notation
    std::vector<Permutation> gens;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        gens.push_back(Permutation::from_cycles(item, n));
    }
    return gens;
}

std::vector<std::vector<int>> compositions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            cur.push_back(p);
            rec(rem - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

int run_necklaces(const std::string& comp_text, bool as_json) {
    std::vector<int> alpha = parse_composition(comp_text);
    int n = std::accumulate(alpha.begin(), alpha.end(), 0);
    if (n < 3) throw UsageError("need a composition of n >= 3");
    if (composition_gcd(alpha) != 1)
        throw UsageError("rotation is not free on these words: gcd of the parts is " +
                         std::to_string(composition_gcd(alpha)) +
                         "; the dihedral sieving statements here assume a free rotation action");

    IntPoly p = c_alpha(alpha);
    auto necklaces = enumerate_necklaces(alpha);
    auto bracelet = check_bracelet_csp(alpha);

    // primary sieving: words under the full rotation group
    Permutation c = n_cycle(n), pw = Permutation::identity(n);
    std::vector<Int> fixes;
    for (int b = 0; b < n; ++b) {
        fixes.push_back(count_fixed_words(alpha, pw.cycle_type()));
        pw = c * pw;
    }
    auto primary = check_csp([&](int b) { return fixes[static_cast<size_t>(b)]; }, n, q_multinomial(alpha));

    if (as_json) {
        json reps = json::array();
        for (const auto& nk : necklaces) reps.push_back(necklace_to_json(nk));
        json out{{"composition", alpha},
                 {"polynomial", poly_to_json(p)},
                 {"necklace_count", static_cast<long>(necklaces.size())},
                 {"necklaces", std::move(reps)},
                 {"bracelets", json{{"total", bracelet.counts.total.get_str()},
                                    {"asymmetric", bracelet.counts.asymmetric.get_str()},
                                    {"symmetric", bracelet.counts.symmetric_necklaces.get_str()}}},
                 {"primary_csp", csp_report_to_json(primary)},
                 {"secondary_csp", csp_report_to_json(bracelet.report)},
                 {"identities_hold", bracelet.identities_hold}};
        std::cout << out.dump(2) << std::endl;
    } else {
        std::cout << "C(alpha;q) = " << p.to_string() << "\n";
        std::cout << "necklaces: " << necklaces.size() << "\n";
        for (const auto& nk : necklaces) {
            std::cout << "  ";
            for (size_t i = 0; i < nk.canonical.size(); ++i) std::cout << (i ? " " : "") << nk.canonical[i];
            std::cout << "  (orbit " << nk.orbit_size << ")\n";
        }
        std::cout << "bracelets: " << bracelet.counts.total << " total, " << bracelet.counts.asymmetric
                  << " asymmetric, " << bracelet.counts.symmetric_necklaces << " reflection-symmetric\n";
        std::cout << "rotation sieving: " << (primary.verdict ? "holds" : "FAILS") << "\n";
        std::cout << "reflection sieving at q = -1: " << (bracelet.report.verdict ? "holds" : "FAILS")
                  << std::endl;
    }
    return (primary.verdict && bracelet.report.verdict && bracelet.identities_hold) ? 0 : 1;
}

int run_schroder(int bound, bool as_json) {
    if (bound < 2 || bound > 30) throw UsageError("--bound must be between 2 and 30");
    bool all_ok = true;
    json records = json::array();
    for (int b = 2; b <= bound; ++b)
        for (int a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            for (int k = 0; k <= a; ++k) {
                IntPoly p = rational_q_schroder(a, b, k);  // throws FormulaMismatch on disagreement
                bool pal = is_palindromic(p);
                bool pu = is_parity_unimodal(p).ok;
                if (!pal || !pu) all_ok = false;
                if (as_json)
                    records.push_back(sweep_record_to_json(a, b, k, p, pal, pu));
                else if (!pal || !pu)
                    std::cout << "a=" << a << " b=" << b << " k=" << k << "  palindromic=" << pal
                              << " parity_unimodal=" << pu << "\n";
            }
        }
    if (as_json)
        std::cout << records.dump(2) << std::endl;
    else
        std::cout << "checked all coprime a < b <= " << bound << ": "
                  << (all_ok ? "all palindromic and parity-unimodal" : "FAILURES above") << std::endl;
    return all_ok ? 0 : 1;
}

int run_csp_check(int n, const std::string& tau_text, const std::string& gens_text, size_t budget,
                  bool as_json) {
    if (n < 3) throw UsageError("need n >= 3");
    Permutation tau = Permutation::from_cycles(tau_text, n);
    SubgroupSpec H(n, parse_generators(gens_text, n), budget);
    auto r = check_technical_csp(tau, H, budget);
    if (as_json) {
        std::cout << technical_csp_to_json(r).dump(2) << std::endl;
    } else {
        std::cout << "|Y| = " << r.y_size << ", m = " << r.m << "\n";
        std::cout << "Y(q) = " << r.y_polynomial.to_string() << "\n";
        std::cout << "avoidance conditions: " << (r.conditions.hold ? "hold" : "violated") << "\n";
        for (const auto& v : r.conditions.violations) std::cout << "  " << v << "\n";
        std::cout << "sieving: " << (r.report.verdict ? "holds" : "FAILS");
        if (!r.report.verdict) {
            std::cout << " at b =";
            for (int b : r.report.witnesses) std::cout << " " << b;
        }
        std::cout << std::endl;
    }
    return r.report.verdict ? 0 : 1;
}

int run_parity_sweep(int bound, bool as_json) {
    if (bound < 2 || bound > 18) throw UsageError("--bound must be between 2 and 18");
    long checked = 0;
    bool all_ok = true;
    json failures = json::array();
    for (int n = 2; n <= bound; ++n)
        for (const auto& alpha : compositions_of(n)) {
            if (composition_gcd(alpha) != 1) continue;
            ++checked;
            auto r = is_parity_unimodal(c_alpha(alpha));
            if (!r.ok) {
                all_ok = false;
                if (as_json)
                    failures.push_back(json{{"composition", alpha}});
                else
                    std::cout << "FAIL at composition of " << n << "\n";
            }
        }
    if (as_json)
        std::cout << json{{"bound", bound}, {"checked", checked}, {"all_parity_unimodal", all_ok},
                          {"failures", std::move(failures)}}
                         .dump(2)
                  << std::endl;
    else
        std::cout << "checked " << checked << " aperiodic compositions up to n = " << bound << ": "
                  << (all_ok ? "all parity-unimodal" : "FAILURES above") << std::endl;
    return all_ok ? 0 : 1;
}

int run_molien(int n, const std::string& gens_text, int bound, size_t budget, bool as_json) {
    if (n < 1) throw UsageError("need n >= 1");
    if (bound < 0) throw UsageError("--bound must be nonnegative");
    SubgroupSpec H(n, parse_generators(gens_text, n), budget);
    MolienSeries ms(H);
    auto coeffs = ms.coefficients(bound);
    IntPoly X = coset_poly_X(H);
    bool have_y = true;
    IntPoly Y;
    std::string y_note;
    try {
        Y = y_poly(H);
    } catch (const NonPolynomialQuotient& e) {
        have_y = false;
        y_note = e.what();
    }
    if (as_json) {
        json series = json::array();
        for (const auto& v : coeffs) series.push_back(v.get_str());
        json out{{"n", n},
                 {"order", static_cast<long>(H.elements().size())},
                 {"invariant_series", std::move(series)},
                 {"x_polynomial", poly_to_json(X)},
                 {"y_polynomial", have_y ? poly_to_json(Y) : json(nullptr)}};
        if (!have_y) out["y_note"] = y_note;
        std::cout << out.dump(2) << std::endl;
    } else {
        std::cout << "|H| = " << H.elements().size() << "\n";
        std::cout << "invariant dimensions:";
        for (const auto& v : coeffs) std::cout << " " << v.get_str();
        std::cout << "\nX(q) = " << X.to_string() << "\n";
        if (have_y)
            std::cout << "Y(q) = " << Y.to_string() << std::endl;
        else
            std::cout << "Y(q) is not a polynomial: " << y_note << std::endl;
    }
    return 0;
}

int run_nc_check(int n, int k, bool as_json) {
    if (n < 1 || k < 1 || k > n) throw UsageError("need 1 <= k <= n");
    auto r = check_nc_secondary(n, k);
    if (as_json) {
        std::cout << nc_result_to_json(r).dump(2) << std::endl;
    } else {
        std::cout << "noncrossing partitions of " << n << " into " << k << " blocks: " << r.count << "\n";
        if (Int(r.count) != r.narayana_display)
            std::cout << "note: the alternate closed form gives " << r.narayana_display.get_str()
                      << "; enumeration is authoritative\n";
        std::cout << "X(q) = " << r.x_polynomial.to_string() << "\n";
        std::cout << "Y(q) = " << r.y_polynomial.to_string() << "\n";
        std::cout << "rotation orbits: " << r.orbit_count << ", reflection-fixed orbits: "
                  << r.tau_fixed_orbits.get_str() << "\n";
        std::cout << "primary sieving: " << (r.primary.verdict ? "holds" : "FAILS") << "\n";
        std::cout << "secondary sieving: " << (r.secondary.verdict ? "holds" : "FAILS") << "\n";
        std::cout << "q = -1 reflection count: " << (r.ding_identity ? "matches" : "MISMATCH") << std::endl;
    }
    return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic sieving toolkit for necklaces, cosets, and noncrossing partitions"};
    app.require_subcommand(1);

    bool as_json = false;
    int jobs = 1;
    size_t budget = kDefaultCosetBudget;
    app.add_flag("--json", as_json, "emit JSON on stdout");
    app.add_option("--jobs", jobs, "worker count (accepted for interface stability; work is sequential)")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", budget, "element budget for subgroup/coset enumeration")
        ->check(CLI::PositiveNumber);

    std::string comp_text, tau_text, gens_text;
    int bound_schroder = 30, bound_parity = 14, bound_molien = 10;
    int cn = 0, ck = 0;

    auto* necklaces = app.add_subcommand("necklaces", "necklace and bracelet sieving for one composition");
    necklaces->add_option("composition", comp_text, "comma-separated content, e.g. 3,4")->required();

    auto* schroder = app.add_subcommand("schroder", "sweep the three-part family over coprime a < b");
    schroder->add_option("--bound", bound_schroder, "largest b (default 30)");

    auto* cspc = app.add_subcommand("csp-check", "sieving check for one (subgroup, tau) pair");
    cspc->add_option("--n", cn, "degree of the symmetric group")->required();
    cspc->add_option("--tau", tau_text, "tau in cycle notation, e.g. \"(2 4 10 8)(3 7 9 5)\"")->required();
    cspc->add_option("--group", gens_text, "generators in cycle notation, ';' separated")->required();

    auto* parity = app.add_subcommand("parity-sweep", "parity-unimodality over all aperiodic compositions");
    parity->add_option("--bound", bound_parity, "largest n (default 14)");

    auto* molien = app.add_subcommand("molien", "invariant series and coset polynomials of a subgroup");
    molien->add_option("--n", cn, "degree of the symmetric group")->required();
    molien->add_option("--group", gens_text, "generators in cycle notation, ';' separated")->required();
    molien->add_option("--bound", bound_molien, "series truncation degree (default 10)");

    auto* nc = app.add_subcommand("nc-check", "noncrossing-partition sieving bundle for one (n, k)");
    nc->add_option("--n", cn, "number of points")->required();
    nc->add_option("--k", ck, "number of blocks")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*necklaces) return run_necklaces(comp_text, as_json);
        if (*schroder) return run_schroder(bound_schroder, as_json);
        if (*cspc) return run_csp_check(cn, tau_text, gens_text, budget, as_json);
        if (*parity) return run_parity_sweep(bound_parity, as_json);
        if (*molien) return run_molien(cn, gens_text, bound_molien, budget, as_json);
        if (*nc) return run_nc_check(cn, ck, as_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const NonFreeAction& e) {
        std::cerr << "error: " << e.what()
                  << " (the rotation action has a nontrivial stabilizer, so the free-action statements "
                     "do not apply)"
                  << std::endl;
        return 2;
    } catch (const FormulaMismatch& e) {
        std::cerr << "formula mismatch: " << e.what() << std::endl;
        return 1;
    } catch (const NonPolynomialQuotient& e) {
        std::cerr << "non-polynomial quotient: " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 2;
}
