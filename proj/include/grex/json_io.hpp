#pragma once

#include <json.hpp>

#include "grex/ext.hpp"
#include "grex/ideals.hpp"
#include "grex/staircase.hpp"
#include "grex/verify.hpp"

namespace grex {

inline nlohmann::json to_json(const GradedIdeal& ideal) {
    return {{"k", ideal.k()}, {"exponents", ideal.exponents()}, {"shift", ideal.shift()}};
}

inline nlohmann::json to_json(const CrossingGrid& grid) {
    return {{"flavor", flavor_name(grid.flavor())}, {"k", grid.k()}, {"rows", grid.rows()}};
}

inline nlohmann::json to_json(const ExtReport& report) {
    nlohmann::json out{{"k", report.k},
                       {"l", report.l.elements()},
                       {"m", report.m.elements()},
                       {"alpha", report.alpha},
                       {"beta", report.beta},
                       {"intersection", report.intersection},
                       {"ext_dim", report.ext_dim},
                       {"compatible", report.compatible}};
    if (report.oracle_dim) out["oracle_dim"] = *report.oracle_dim;
    return out;
}

inline nlohmann::json to_json(const VerificationSummary& summary) {
    nlohmann::json mismatches = nlohmann::json::array();
    for (const Mismatch& mm : summary.mismatches) {
        mismatches.push_back({{"l", mm.l.elements()},
                              {"m", mm.m.elements()},
                              {"formula_dim", mm.formula_dim},
                              {"oracle_dim", mm.oracle_dim}});
    }
    return {{"k", summary.k},
            {"window", {summary.lo, summary.hi}},
            {"pairs_checked", summary.pairs_checked},
            {"mismatches", mismatches},
            {"elapsed_ms", summary.elapsed_ms}};
}

} // namespace grex
