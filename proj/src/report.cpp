#include "ucc/report.hpp"

#include <cmath>
#include <sstream>

#include "ucc/errors.hpp"
#include "ucc/io.hpp"
#include "ucc/metrics.hpp"
#include "ucc/references.hpp"
#include "ucc/version.hpp"

namespace ucc {

Dataset drop_never_captured(const Dataset& ds) {
    const auto ks = critical_scales(ds);
    std::vector<PredictionRecord> kept;
    kept.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (!std::isinf(ks.scales[i])) kept.push_back(ds.record(i));
    }
    if (kept.empty()) {
        throw Error(ErrorCode::AllScalesInfinite,
                    "AllScalesInfinite: every record has a zero band against a nonzero error");
    }
    return validate(std::move(kept), ds.name());
}

std::pair<Dataset, Dataset> drop_never_captured_pair(const Dataset& a, const Dataset& b) {
    const auto ka = critical_scales(a);
    const auto kb = critical_scales(b);
    std::vector<PredictionRecord> kept_a, kept_b;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!std::isinf(ka.scales[i]) && !std::isinf(kb.scales[i])) {
            kept_a.push_back(a.record(i));
            kept_b.push_back(b.record(i));
        }
    }
    if (kept_a.empty()) {
        throw Error(ErrorCode::AllScalesInfinite,
                    "AllScalesInfinite: no record is capturable in both datasets");
    }
    return {validate(std::move(kept_a), a.name()), validate(std::move(kept_b), b.name())};
}

ModelReport evaluate_model(const Dataset& ds, const std::string& name,
                           const EvalOptions& options) {
    const auto ks = critical_scales(ds);
    const std::int64_t n_inf = ks.n_infinite();

    const Dataset* eval_ds = &ds;
    std::optional<Dataset> filtered;
    if (n_inf > 0 && options.allow_infinite) {
        filtered = drop_never_captured(ds);
        eval_ds = &*filtered;
    }

    const UccCurve curve = build_ucc(*eval_ds, options.axes, name);
    const UccCurve ref = build_ucc(constant_band(*eval_ds), options.axes, "constant");

    ModelReport out;
    out.name = name;
    out.axes = options.axes.name();
    out.n = static_cast<std::int64_t>(ds.size());
    out.n_infinite = n_inf;
    out.auucc = auucc(curve);
    out.gain_vs_constant_pct = auucc_gain(curve, ref);

    const auto opt = optimal_operating_point(curve, options.cost_c);
    out.optimal_k = opt.point.k;
    out.optimal_cost = opt.cost;

    if (options.partial) {
        out.partial_auucc = partial_auucc(curve, options.partial->first, options.partial->second);
    }
    if (options.at_miss_rate) {
        const auto op = op_at_miss_rate(curve, *options.at_miss_rate);
        out.op_k = op.k;
        out.cost_at_op = cost(op, options.cost_c);
        if (eval_ds->symmetric_bands()) {
            out.mae_at_op = mae_at_scale(*eval_ds, op.k);
        }
    }
    return out;
}

nlohmann::json report_to_json(const EvaluationReport& report) {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;

    nlohmann::json models = nlohmann::json::array();
    for (const auto& m : report.models) {
        nlohmann::json e;
        e["name"] = m.name;
        e["axes"] = m.axes;
        e["n"] = m.n;
        e["n_infinite"] = m.n_infinite;
        e["auucc"] = m.auucc;
        e["gain_vs_constant_pct"] = m.gain_vs_constant_pct;
        e["optimal_k"] = m.optimal_k;
        e["optimal_cost"] = m.optimal_cost;
        if (m.partial_auucc) e["partial_auucc"] = *m.partial_auucc;
        if (m.op_k) e["op_k"] = *m.op_k;
        if (m.cost_at_op) e["cost_at_op"] = *m.cost_at_op;
        if (m.mae_at_op) e["mae_at_op"] = *m.mae_at_op;
        models.push_back(std::move(e));
    }
    j["models"] = std::move(models);

    nlohmann::json pairwise = nlohmann::json::array();
    for (const auto& p : report.pairwise) {
        pairwise.push_back({{"model_a", p.model_a},
                            {"model_b", p.model_b},
                            {"delta_auucc", p.delta_auucc},
                            {"p_value", p.p_value},
                            {"n_permutations", p.n_permutations},
                            {"seed", p.seed}});
    }
    j["pairwise"] = std::move(pairwise);

    nlohmann::json prov;
    prov["inputs"] = report.provenance.inputs;
    prov["flags"] = report.provenance.flags;
    prov["normalization"] = report.provenance.normalization;
    if (report.provenance.std_divisor) prov["std_divisor"] = *report.provenance.std_divisor;
    prov["tool_version"] = report.provenance.tool_version;
    j["provenance"] = std::move(prov);
    return j;
}

std::string report_to_csv(const EvaluationReport& report) {
    std::ostringstream out;
    out << "name,axes,n,n_infinite,auucc,gain_vs_constant_pct,optimal_k,optimal_cost,"
           "partial_auucc,op_k,cost_at_op,mae_at_op\n";
    auto opt = [](const std::optional<double>& v) {
        return v ? format_double(*v) : std::string();
    };
    for (const auto& m : report.models) {
        out << m.name << ',' << m.axes << ',' << m.n << ',' << m.n_infinite << ','
            << format_double(m.auucc) << ',' << format_double(m.gain_vs_constant_pct) << ','
            << format_double(m.optimal_k) << ',' << format_double(m.optimal_cost) << ','
            << opt(m.partial_auucc) << ',' << opt(m.op_k) << ',' << opt(m.cost_at_op) << ','
            << opt(m.mae_at_op) << '\n';
    }
    return out.str();
}

}  // namespace ucc
