#pragma once

#include "orbicheck/orbifold.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbicheck {

/** Three-valued verdict cell: yes, no, or not applicable. */
enum class Tri { Yes, No, NA };

inline Tri tri_of(bool b) { return b ? Tri::Yes : Tri::No; }
std::string tri_str(Tri t); // "Y", "N", "—"

/** Expected values a scenario may pin; only the present fields are compared. */
struct ExpectSpec {
    std::optional<bool> suborbifold, full, saturated, split, embeddable;
    std::optional<std::string> omega, lambda_name, gamma_p;
    std::optional<int> candidates;
};

struct SubchartItem {
    Subchart sub;
    std::string notes;
    ExpectSpec expect;
};

struct RecognitionItem {
    std::string name;
    Chart chart;
    RecognitionTarget target;
    std::optional<std::string> require_gamma_p;
    std::string notes;
    ExpectSpec expect;
};

/** A parsed and validated scenario: charts resolved, shapes and groups built. */
struct Scenario {
    std::string name;
    std::vector<SubchartItem> subcharts;
    std::vector<RecognitionItem> recognitions;
};

/**
 * Parse a scenario document (JSON). Grammar:
 *   {"name": str, "cap"?: int,
 *    "charts": [ {"name": str, "dim": int, "generators": [gen...]}
 *              | {"name": str, "product": [str, str]} ],
 *    "subcharts"?: [ {"name": str, "chart": str, "shape": shape,
 *                     "lambda": "auto" | "full" | [gen...],
 *                     "notes"?: str, "expect"?: {...}} ],
 *    "recognitions"?: [ {"name": str, "chart": str, "target": shape-or-ray,
 *                        "require_gamma_p"?: str, "notes"?: str, "expect"?: {...}} ]}
 * where gen is a matrix [[scalar,...],...] or a builder
 *   {"kind": "rotation", "order": k} | {"kind": "reflection", "axis": 0|1}
 * | {"kind": "diag", "entries": [scalar,...]},
 * shape is {"kind": "span", "vectors": [[scalar,...],...]} | {"kind": "whole"}
 *        | {"kind": "diagonal"} | {"kind": "graph", "p": [scalar,...]}
 * and a recognition target may additionally be {"kind": "ray", "v": [scalar,...]}.
 * Scalars use the exact grammar of parse_scalar ("1/2", "zeta(8)^3", ...).
 */
Scenario parse_scenario(const std::string& text);

/** One evaluated subchart or recognition. */
struct ItemReport {
    std::string kind; // "subchart" or "recognition"
    std::string name;
    Tri suborbifold = Tri::NA, full = Tri::NA, saturated = Tri::NA, split = Tri::NA,
        embeddable = Tri::NA;
    std::optional<Verdict> verdict;                // subcharts
    std::vector<RecognitionCandidate> candidates;  // recognitions
    std::string witness_summary;                   // empty when every check passes
    std::vector<std::string> expect_diffs;
};

struct ScenarioReport {
    std::string name;
    std::vector<ItemReport> items;
    // conjunction over items; full/saturated/split collapse to NA when the
    // scenario is not a suborbifold at all
    Tri suborbifold = Tri::NA, full = Tri::NA, saturated = Tri::NA, split = Tri::NA,
        embeddable = Tri::NA;
    bool expectations_met() const;
};

ScenarioReport evaluate_scenario(const Scenario& s);

/** One line of the verdict table. */
struct ReportRow {
    std::string example;
    Tri suborbifold = Tri::NA, full = Tri::NA, saturated = Tri::NA, split = Tri::NA,
        embeddable = Tri::NA;
};

std::vector<ReportRow> table_rows(const std::vector<ScenarioReport>& reports);

std::string render_md(const std::vector<ScenarioReport>& reports, bool witness = false);
std::string render_tsv(const std::vector<ScenarioReport>& reports);
std::string render_json(const std::vector<ScenarioReport>& reports);
/** Rows back out of render_json output (used to check format agreement). */
std::vector<ReportRow> rows_from_json(const std::string& text);

/** The built-in scenario corpus, in table order: (file name, document text). */
const std::vector<std::pair<std::string, std::string>>& builtin_scenarios();

/** Parse and evaluate every built-in scenario. */
std::vector<ScenarioReport> run_examples();

} // namespace orbicheck
