#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "csieve/admissible.hpp"
#include "csieve/csp.hpp"
#include "csieve/cyclotomic.hpp"
#include "csieve/intpoly.hpp"
#include "csieve/noncrossing.hpp"
#include "csieve/perm.hpp"
#include "csieve/words.hpp"

namespace csieve {

using json = nlohmann::json;

/// Polynomials serialize as arrays of decimal-string coefficients, lowest
/// exponent first (big integers don't fit JSON numbers).
inline json poly_to_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

inline IntPoly poly_from_json(const json& arr) {
    if (!arr.is_array()) throw UsageError("polynomial JSON must be an array of decimal strings");
    std::vector<Int> coeffs;
    for (const auto& v : arr) {
        if (v.is_string())
            coeffs.emplace_back(v.get<std::string>());
        else if (v.is_number_integer())
            coeffs.emplace_back(static_cast<long>(v.get<long long>()));
        else
            throw UsageError("polynomial coefficients must be strings or integers");
    }
    return IntPoly{std::move(coeffs)};
}

inline json cyclotomic_to_json(const CyclotomicInt& v) {
    return json{{"m", v.conductor()}, {"residue", poly_to_json(v.residue())}};
}

inline json permutation_to_json(const Permutation& g) {
    json arr = json::array();
    for (int v : g.one_line()) arr.push_back(v);
    return arr;
}

inline Permutation permutation_from_json(const json& arr) {
    if (!arr.is_array()) throw UsageError("permutation JSON must be a one-line array");
    std::vector<int> img;
    for (const auto& v : arr) img.push_back(v.get<int>());
    return Permutation::from_one_line(img);
}

inline json csp_report_to_json(const CSPReport& rep) {
    json rows = json::array();
    for (const auto& row : rep.rows) {
        json r{{"b", row.b}, {"fix", row.fix.get_str()}, {"eval", cyclotomic_to_json(row.eval)}};
        r["integer_eval"] = row.integer_eval ? json(row.integer_eval->get_str()) : json(nullptr);
        rows.push_back(std::move(r));
    }
    return json{{"m", rep.m}, {"rows", std::move(rows)}, {"verdict", rep.verdict}, {"witnesses", rep.witnesses}};
}

inline json conditions_to_json(const TechnicalConditions& c) {
    json witnesses = json::array();
    for (const auto& w : c.witnesses) witnesses.push_back(w.to_string());
    return json{{"hold", c.hold}, {"violations", c.violations}, {"witnesses", std::move(witnesses)}};
}

inline json technical_csp_to_json(const TechnicalCspResult& r) {
    json out = csp_report_to_json(r.report);
    out["conditions"] = conditions_to_json(r.conditions);
    out["y_polynomial"] = poly_to_json(r.y_polynomial);
    out["y_size"] = r.y_size;
    return out;
}

inline json sweep_record_to_json(int a, int b, int k, const IntPoly& p, bool palindromic, bool parity_unimodal) {
    return json{{"a", a},
                {"b", b},
                {"k", k},
                {"polynomial", poly_to_json(p)},
                {"palindromic", palindromic},
                {"parity_unimodal", parity_unimodal}};
}

inline json necklace_to_json(const NecklaceRep& rep) {
    std::string word;
    for (size_t i = 0; i < rep.canonical.size(); ++i) {
        if (i) word += ' ';
        word += std::to_string(rep.canonical[i]);
    }
    return json{{"word", word}, {"orbit_size", rep.orbit_size}};
}

inline json nc_result_to_json(const NcSecondaryResult& r) {
    return json{{"n", r.n},
                {"k", r.k},
                {"count", r.count},
                {"narayana_display", r.narayana_display.get_str()},
                {"x_polynomial", poly_to_json(r.x_polynomial)},
                {"y_polynomial", poly_to_json(r.y_polynomial)},
                {"orbit_count", r.orbit_count},
                {"tau_fixed_elements", r.tau_fixed_elements.get_str()},
                {"tau_fixed_orbits", r.tau_fixed_orbits.get_str()},
                {"primary", csp_report_to_json(r.primary)},
                {"secondary", csp_report_to_json(r.secondary)},
                {"ding_identity", r.ding_identity},
                {"fixed_count_match", r.fixed_count_match},
                {"all_pass", r.all_pass()}};
}

}  // namespace csieve
