#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "rankpert/canonical.hpp"
#include "rankpert/matrix.hpp"
#include "rankpert/oracle.hpp"
#include "rankpert/perturb.hpp"

/// JSON wire formats.  Matrices: {"field": "Q" | "GF(p)", "rows": [["a","b"],
/// ...]}; polynomials: ascending coefficient string lists; scalars as decimal
/// strings, rationals as "a/b".  Serialization is deterministic (sorted keys,
/// canonical scalar strings) so reports can be golden-tested byte for byte.

namespace rankpert {

using Json = nlohmann::json;

inline Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(static_cast<std::size_t>(i)).str());
    return arr;
}

inline Poly poly_from_json(const Json& j, const FieldSpec& f) {
    const Json& arr = j.is_object() ? j.at("coeffs") : j;
    if (!arr.is_array()) throw std::invalid_argument("polynomial: expected a coefficient array");
    std::vector<Scalar> coeffs;
    for (const Json& c : arr) {
        if (!c.is_string()) throw std::invalid_argument("polynomial: coefficients must be strings");
        coeffs.push_back(Scalar::parse(f, c.get<std::string>()));
    }
    return Poly(f, std::move(coeffs));
}

inline Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return Json{{"field", m.field().str()}, {"rows", std::move(rows)}};
}

/// Reads a matrix file; `override_field` wins over the file's field key and
/// is required when the file has none.
inline Mat mat_from_json(const Json& j, const std::optional<FieldSpec>& override_field = {}) {
    if (!j.is_object() || !j.contains("rows"))
        throw std::invalid_argument("matrix: expected an object with a \"rows\" key");
    FieldSpec f = override_field             ? *override_field
                  : j.contains("field")      ? FieldSpec::parse(j.at("field").get<std::string>())
                                             : throw std::invalid_argument("matrix: no field given");
    const Json& rows = j.at("rows");
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("matrix: \"rows\" must be a nonempty array");
    std::size_t r = rows.size();
    std::size_t c = rows.at(0).size();
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        const Json& row = rows.at(i);
        if (!row.is_array() || row.size() != c) throw std::invalid_argument("matrix: ragged rows");
        for (std::size_t k = 0; k < c; ++k) {
            const Json& cell = row.at(k);
            std::string text = cell.is_string() ? cell.get<std::string>() : cell.dump();
            m.at(i, k) = Scalar::parse(f, text);
        }
    }
    return m;
}

inline Json invariant_factors_to_json(const InvariantFactors& inv) {
    Json arr = Json::array();
    for (const Poly& p : inv.factors) arr.push_back(poly_to_json(p));
    return arr;
}

inline Json jordan_to_json(const JordanData& jd) {
    Json entries = Json::array();
    for (const JordanEntry& e : jd.entries) {
        entries.push_back(Json{{"factor", poly_to_json(e.factor)},
                               {"block_multiplicities", e.block_multiplicities},
                               {"algebraic_multiplicity", e.algebraic_multiplicity}});
    }
    return Json{{"complete", jd.complete}, {"entries", std::move(entries)}};
}

inline Json certificate_to_json(const FeasibilityCertificate& cert) {
    Json rows = Json::array();
    for (const JordanReportRow& r : cert.jordan_report) {
        rows.push_back(Json{{"factor", poly_to_json(r.factor)},
                            {"multiplicity_in_q", r.multiplicity_in_q},
                            {"algebraic_multiplicity", r.algebraic_multiplicity},
                            {"sum_largest_m_blocks", r.sum_largest_m_blocks},
                            {"satisfied", r.satisfied}});
    }
    Json j{{"feasible", cert.feasible},
           {"m_requested", cert.m_requested},
           {"m_effective", cert.m_effective},
           {"required_divisor", poly_to_json(cert.required_divisor)},
           {"jordan_complete", cert.jordan_complete},
           {"jordan_report", std::move(rows)}};
    if (cert.quotient_h) j["quotient_h"] = poly_to_json(*cert.quotient_h);
    if (cert.remainder) j["remainder"] = poly_to_json(*cert.remainder);
    return j;
}

inline Json verify_report_to_json(const VerifyReport& rep) {
    return Json{{"rank_B", rep.rank_B},
                {"rank_ok", rep.rank_ok},
                {"achieved_charpoly", poly_to_json(rep.achieved_charpoly)},
                {"charpoly_ok", rep.charpoly_ok},
                {"pass", rep.pass()}};
}

inline Json theorem_report_to_json(const TheoremReport& rep) {
    Json j{{"field", rep.field.str()},
           {"n", rep.n},
           {"m", rep.m},
           {"bruteforce_count", rep.bruteforce_count},
           {"predicted_count", rep.predicted_count},
           {"equal", rep.equal},
           {"seed", rep.seed},
           {"wall_ms", rep.wall_ms}};
    if (rep.counterexample) j["counterexample"] = poly_to_json(*rep.counterexample);
    if (rep.counterexample_B) j["counterexample_B"] = mat_to_json(*rep.counterexample_B);
    return j;
}

}  // namespace rankpert
