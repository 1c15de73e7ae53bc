#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucc/curve.hpp"
#include "ucc/dataset.hpp"

namespace ucc {

struct EvalOptions {
    AxisPair axes = {XMetric::bandwidth, YMetric::miss_rate};
    double cost_c = 0.1;
    std::optional<std::pair<double, double>> partial;  // y range [lo, hi]
    std::optional<double> at_miss_rate;
    bool allow_infinite = false;  // drop never-captured records instead of failing
};

struct ModelReport {
    std::string name;
    std::string axes;
    std::int64_t n = 0;           // records in the input
    std::int64_t n_infinite = 0;  // records never capturable (dropped if allowed)
    double auucc = 0.0;
    double gain_vs_constant_pct = 0.0;
    double optimal_k = 0.0;
    double optimal_cost = 0.0;
    std::optional<double> partial_auucc;
    std::optional<double> op_k;        // scale hit by --at-missrate
    std::optional<double> cost_at_op;  // cost there
    std::optional<double> mae_at_op;   // MAE there (symmetric bands only)
};

struct PairwiseReport {
    std::string model_a;
    std::string model_b;
    double delta_auucc = 0.0;
    double p_value = 1.0;
    int n_permutations = 0;
    std::uint64_t seed = 0;
};

struct ReportProvenance {
    std::vector<std::string> inputs;
    std::map<std::string, std::string> flags;  // canonical flag spellings, no --out
    std::string normalization = "none";
    std::optional<double> std_divisor;
    std::string tool_version;
};

struct EvaluationReport {
    std::vector<ModelReport> models;
    std::vector<PairwiseReport> pairwise;
    ReportProvenance provenance;
};

/// Runs the full single-model evaluation: curve, AUUCC, gain against the
/// auto-generated constant reference, optimal operating point, and the
/// optional partial/at-miss-rate extras.  `ds` must already be normalized if
/// normalization was requested.
ModelReport evaluate_model(const Dataset& ds, const std::string& name,
                           const EvalOptions& options);

/// Record filter behind --allow-infinite: drops records that no finite scale
/// captures.  Throws AllScalesInfinite when nothing would remain.
Dataset drop_never_captured(const Dataset& ds);

/// Paired variant: drops the union of never-captured indices so the two
/// datasets stay aligned record for record.
std::pair<Dataset, Dataset> drop_never_captured_pair(const Dataset& a, const Dataset& b);

nlohmann::json report_to_json(const EvaluationReport& report);
std::string report_to_csv(const EvaluationReport& report);

}  // namespace ucc
