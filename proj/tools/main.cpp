// ucc: prediction-interval quality assessment on uncertainty characteristics
// curves.  Subcommands: evaluate, compare, curve, plot, synth.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ucc/errors.hpp"
#include "ucc/io.hpp"
#include "ucc/metrics.hpp"
#include "ucc/references.hpp"
#include "ucc/report.hpp"
#include "ucc/stats.hpp"
#include "ucc/svg.hpp"
#include "ucc/synthetic.hpp"
#include "ucc/version.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIngestion = 3;
constexpr int kExitComputation = 4;

struct CommonFlags {
    std::string axes = "bandwidth:miss_rate";
    std::string normalize = "none";
    bool allow_infinite = false;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_format = true) {
    cmd->add_option("--axes", flags.axes, "Curve axes, x:y")
        ->capture_default_str();
    cmd->add_option("--normalize", flags.normalize, "Rescale by the std of y")
        ->check(CLI::IsMember({"none", "std"}))
        ->capture_default_str();
    cmd->add_flag("--allow-infinite", flags.allow_infinite,
                  "Drop records that no finite scale captures");
    if (with_format) {
        cmd->add_option("--format", flags.format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    }
    cmd->add_option("--out", flags.out, "Output path (default: stdout)");
}

void emit(const std::string& content, const std::string& out) {
    if (out.empty()) {
        std::cout << content;
    } else {
        ucc::write_file(out, content);
    }
}

ucc::Dataset prepare(const ucc::Dataset& raw, const std::string& normalize) {
    return normalize == "std" ? ucc::normalize_std(raw) : raw;
}

std::pair<double, double> parse_partial(const std::string& text) {
    const auto sep = text.find(':');
    if (sep != std::string::npos) {
        try {
            const double lo = std::stod(text.substr(0, sep));
            const double hi = std::stod(text.substr(sep + 1));
            return {lo, hi};
        } catch (const std::exception&) {
        }
    }
    throw CLI::ValidationError("--partial", "expected LO:HI");
}

std::map<std::string, std::string> base_flags(const CommonFlags& flags) {
    return {{"axes", flags.axes},
            {"normalize", flags.normalize},
            {"allow_infinite", flags.allow_infinite ? "true" : "false"},
            {"format", flags.format}};
}

ucc::ReportProvenance make_provenance(std::vector<std::string> inputs,
                                      std::map<std::string, std::string> flags,
                                      const std::vector<ucc::Dataset>& prepared) {
    ucc::ReportProvenance prov;
    prov.inputs = std::move(inputs);
    prov.flags = std::move(flags);
    prov.normalization = prov.flags.at("normalize");
    if (prepared.size() == 1 && prepared.front().normalization() == ucc::Normalization::std_units) {
        prov.std_divisor = prepared.front().std_divisor();
    }
    prov.tool_version = ucc::kVersion;
    return prov;
}

std::string render_report(const ucc::EvaluationReport& report, const std::string& format) {
    if (format == "csv") return ucc::report_to_csv(report);
    return ucc::report_to_json(report).dump(2) + "\n";
}

// ---- evaluate ----

struct EvaluateArgs {
    std::vector<std::string> inputs;
    CommonFlags common;
    double cost_c = 0.1;
    std::string partial;
    double at_missrate = -1.0;
    bool has_at_missrate = false;
};

int run_evaluate(const EvaluateArgs& args) {
    const ucc::AxisPair axes = ucc::AxisPair::parse(args.common.axes);
    ucc::EvalOptions options;
    options.axes = axes;
    options.cost_c = args.cost_c;
    options.allow_infinite = args.common.allow_infinite;
    if (!args.partial.empty()) options.partial = parse_partial(args.partial);
    if (args.has_at_missrate) options.at_miss_rate = args.at_missrate;

    ucc::EvaluationReport report;
    std::vector<ucc::Dataset> prepared;
    for (const auto& path : args.inputs) {
        prepared.push_back(prepare(ucc::load_dataset(path), args.common.normalize));
        report.models.push_back(
            ucc::evaluate_model(prepared.back(), prepared.back().name(), options));
    }

    auto flags = base_flags(args.common);
    flags["cost_c"] = ucc::format_double(args.cost_c);
    if (!args.partial.empty()) flags["partial"] = args.partial;
    if (args.has_at_missrate) flags["at_missrate"] = ucc::format_double(args.at_missrate);
    report.provenance = make_provenance(args.inputs, std::move(flags), prepared);

    emit(render_report(report, args.common.format), args.common.out);
    return 0;
}

// ---- compare ----

struct CompareArgs {
    std::string input_a, input_b;
    CommonFlags common;
    double cost_c = 0.1;
    int n_perm = 999;
    std::uint64_t seed = 0;
};

int run_compare(const CompareArgs& args) {
    const ucc::AxisPair axes = ucc::AxisPair::parse(args.common.axes);

    ucc::Dataset a = prepare(ucc::load_dataset(args.input_a), args.common.normalize);
    ucc::Dataset b = prepare(ucc::load_dataset(args.input_b), args.common.normalize);
    if (args.common.allow_infinite) {
        auto [fa, fb] = ucc::drop_never_captured_pair(a, b);
        a = std::move(fa);
        b = std::move(fb);
    }

    ucc::EvalOptions options;
    options.axes = axes;
    options.cost_c = args.cost_c;
    // infinite records were already dropped above when allowed

    ucc::EvaluationReport report;
    report.models.push_back(ucc::evaluate_model(a, a.name(), options));
    report.models.push_back(ucc::evaluate_model(b, b.name(), options));

    const auto perm = ucc::paired_permutation_test(a, b, axes, args.n_perm, args.seed);
    report.pairwise.push_back(
        {a.name(), b.name(), perm.delta_auucc, perm.p_value, perm.n_permutations, perm.seed});

    auto flags = base_flags(args.common);
    flags["cost_c"] = ucc::format_double(args.cost_c);
    flags["n_perm"] = std::to_string(args.n_perm);
    flags["seed"] = std::to_string(args.seed);
    report.provenance =
        make_provenance({args.input_a, args.input_b}, std::move(flags), {});

    emit(render_report(report, args.common.format), args.common.out);
    return 0;
}

// ---- curve ----

struct CurveArgs {
    std::string input;
    CommonFlags common;
    bool include_reference = false;
};

int run_curve(const CurveArgs& args) {
    const ucc::AxisPair axes = ucc::AxisPair::parse(args.common.axes);
    ucc::Dataset ds = prepare(ucc::load_dataset(args.input), args.common.normalize);
    if (args.common.allow_infinite) ds = ucc::drop_never_captured(ds);

    const auto model = ucc::build_ucc(ds, axes, ds.name());
    std::vector<ucc::UccCurve> curves{model};
    if (args.include_reference) {
        curves.push_back(ucc::build_ucc(ucc::constant_band(ds), axes, "constant"));
    }

    std::string content;
    if (args.common.format == "csv") {
        for (std::size_t i = 0; i < curves.size(); ++i) {
            if (i > 0) content += "\n";
            // the leading block is named by whatever file carries it; the
            // blocks behind it embed their own labels
            content += ucc::curve_to_csv(curves[i], i > 0);
        }
    } else if (curves.size() == 1) {
        content = ucc::curve_to_json(curves.front()).dump(2) + "\n";
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : curves) arr.push_back(ucc::curve_to_json(c));
        content = arr.dump(2) + "\n";
    }
    emit(content, args.common.out);
    return 0;
}

// ---- plot ----

struct PlotArgs {
    std::vector<std::string> inputs;
    CommonFlags common;
    double cost_c = 0.1;
    std::string title;
};

int run_plot(const PlotArgs& args) {
    const ucc::AxisPair axes = ucc::AxisPair::parse(args.common.axes);
    std::vector<ucc::UccCurve> curves;
    bool first_dataset = true;
    for (const auto& path : args.inputs) {
        const std::string content = ucc::read_file(path);
        const auto eol = content.find('\n');
        if (ucc::looks_like_curve_csv(content.substr(0, eol))) {
            std::istringstream in(content);
            auto parsed = ucc::curves_from_csv(in);
            const auto slash = path.find_last_of("/\\");
            const std::string file_label =
                slash == std::string::npos ? path : path.substr(slash + 1);
            for (std::size_t i = 0; i < parsed.size(); ++i) {
                if (parsed[i].model_label.empty()) {
                    parsed[i].model_label =
                        i == 0 ? file_label : file_label + " #" + std::to_string(i + 1);
                }
                curves.push_back(std::move(parsed[i]));
            }
            continue;
        }
        ucc::Dataset ds = prepare(ucc::load_dataset(path), args.common.normalize);
        if (args.common.allow_infinite) ds = ucc::drop_never_captured(ds);
        curves.push_back(ucc::build_ucc(ds, axes, ds.name()));
        if (first_dataset) {
            curves.push_back(ucc::build_ucc(ucc::constant_band(ds), axes, "constant"));
            first_dataset = false;
        }
    }

    ucc::PlotOptions options;
    options.cost_c = args.cost_c;
    options.title = args.title;
    options.x_unit = args.common.normalize == "std" ? "std units" : "target units";
    const std::string svg = ucc::render_svg(curves, options);
    emit(svg, args.common.out.empty() ? "ucc_plot.svg" : args.common.out);
    return 0;
}

// ---- synth ----

struct SynthArgs {
    std::string kind = "xsinx";
    int n_train = 4000;
    int n_test = 1000;
    double noise_lo = -1.0;  // negative: use the per-kind default
    double noise_hi = -1.0;
    std::uint64_t seed = 0;
    std::string bands;
    double epsilon = 0.05;
    std::string format = "csv";
    std::string out;
};

int run_synth(const SynthArgs& args) {
    ucc::SyntheticSpec spec;
    spec.kind = args.kind == "xsinx" ? ucc::SyntheticKind::xsinx
                                     : ucc::SyntheticKind::heteroskedastic;
    spec.n_train = args.n_train;
    spec.n_test = args.n_test;
    spec.seed = args.seed;
    if (spec.kind == ucc::SyntheticKind::heteroskedastic) {
        spec.noise_lo = args.noise_lo < 0.0 ? 0.4 : args.noise_lo;
        spec.noise_hi = args.noise_hi < 0.0 ? 2.0 : args.noise_hi;
    } else {
        spec.noise_lo = args.noise_lo < 0.0 ? 1.0 : args.noise_lo;
        spec.noise_hi = args.noise_hi < 0.0 ? 1.0 : args.noise_hi;
    }

    std::string bands = args.bands;
    if (bands.empty()) bands = spec.kind == ucc::SyntheticKind::xsinx ? "tuned" : "oracle";

    ucc::Dataset base = [&] {
        if (spec.kind == ucc::SyntheticKind::xsinx) {
            if (bands == "oracle") {
                throw CLI::ValidationError("--bands",
                                           "oracle bands exist only for --kind heteroskedastic");
            }
            const auto data = ucc::gen_xsinx(spec);
            return ucc::xsinx_standin(data,
                                      bands == "weak" ? ucc::StandinQuality::weak
                                                      : ucc::StandinQuality::tuned,
                                      spec.seed);
        }
        if (bands == "tuned" || bands == "weak") {
            throw CLI::ValidationError("--bands",
                                       "tuned/weak stand-ins exist only for --kind xsinx");
        }
        return ucc::gen_heteroskedastic(spec);
    }();

    ucc::Dataset out_ds = [&] {
        if (bands == "constant") return ucc::constant_band(base);
        if (bands == "random") return ucc::random_band(base, spec.seed);
        if (bands == "eps-perfect") {
            return ucc::epsilon_perfect_band(base, args.epsilon, spec.seed);
        }
        return base;  // oracle / tuned / weak: bands already attached
    }();

    std::string content;
    if (args.format == "json") {
        content = ucc::dataset_to_json(out_ds).dump(2) + "\n";
    } else {
        std::ostringstream csv;
        ucc::save_csv(out_ds, csv);
        content = csv.str();
    }
    emit(content, args.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uncertainty characteristics curves for regression prediction intervals"};
    app.set_version_flag("--version", ucc::kVersion);
    app.require_subcommand(1);

    EvaluateArgs ev;
    auto* evaluate = app.add_subcommand("evaluate", "Evaluate datasets against references");
    evaluate->add_option("inputs", ev.inputs, "Dataset files (CSV or JSON)")
        ->required()
        ->expected(-1);
    add_common(evaluate, ev.common);
    evaluate->add_option("--cost-c", ev.cost_c, "Bandwidth weight of the linear cost")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    evaluate->add_option("--partial", ev.partial, "Partial-area y range, LO:HI");
    evaluate->add_option("--at-missrate", ev.at_missrate, "Report the first OP at/below this miss rate")
        ->check(CLI::Range(0.0, 1.0));

    CompareArgs cmp;
    auto* compare = app.add_subcommand("compare", "Compare two band sets on shared predictions");
    compare->add_option("input_a", cmp.input_a, "First dataset")->required();
    compare->add_option("input_b", cmp.input_b, "Second dataset")->required();
    add_common(compare, cmp.common);
    compare->add_option("--cost-c", cmp.cost_c, "Bandwidth weight of the linear cost")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    compare->add_option("--n-perm", cmp.n_perm, "Permutations for the significance test")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    compare->add_option("--seed", cmp.seed, "Permutation RNG seed")->capture_default_str();

    CurveArgs cv;
    auto* curve = app.add_subcommand("curve", "Export the operating points of a dataset");
    curve->add_option("input", cv.input, "Dataset file")->required();
    add_common(curve, cv.common);
    curve->add_flag("--include-reference", cv.include_reference,
                    "Also export the constant-band reference curve");

    PlotArgs pl;
    auto* plot = app.add_subcommand("plot", "Render curves to SVG");
    plot->add_option("inputs", pl.inputs, "Dataset or exported-curve files")
        ->required()
        ->expected(-1);
    add_common(plot, pl.common, /*with_format=*/false);
    plot->add_option("--cost-c", pl.cost_c, "Isocost slope parameter")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    plot->add_option("--title", pl.title, "Plot title");

    SynthArgs sy;
    auto* synth = app.add_subcommand("synth", "Generate synthetic benchmark datasets");
    synth->add_option("--kind", sy.kind, "Generator")
        ->check(CLI::IsMember({"xsinx", "heteroskedastic"}))
        ->capture_default_str();
    synth->add_option("--n-train", sy.n_train, "Training points (xsinx)")->capture_default_str();
    synth->add_option("--n-test", sy.n_test, "Test points")->capture_default_str();
    synth->add_option("--noise-lo", sy.noise_lo, "Lower end of the noise band");
    synth->add_option("--noise-hi", sy.noise_hi, "Upper end of the noise band");
    synth->add_option("--seed", sy.seed, "Generator seed")->capture_default_str();
    synth->add_option("--bands", sy.bands,
                      "Band source: tuned|weak (xsinx), oracle|constant|random|eps-perfect")
        ->check(CLI::IsMember({"tuned", "weak", "oracle", "constant", "random", "eps-perfect"}));
    synth->add_option("--epsilon", sy.epsilon, "Slack for eps-perfect bands")
        ->capture_default_str();
    synth->add_option("--format", sy.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    synth->add_option("--out", sy.out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (evaluate->parsed()) {
            ev.has_at_missrate = evaluate->count("--at-missrate") > 0;
            return run_evaluate(ev);
        }
        if (compare->parsed()) return run_compare(cmp);
        if (curve->parsed()) return run_curve(cv);
        if (plot->parsed()) return run_plot(pl);
        if (synth->parsed()) return run_synth(sy);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ucc::Error& e) {
        std::cerr << e.what() << "\n";
        if (e.code() == ucc::ErrorCode::InfiniteScalesPresent) {
            std::cerr << "hint: pass --allow-infinite to drop never-captured records\n";
        }
        if (e.code() == ucc::ErrorCode::InvalidAxes || e.code() == ucc::ErrorCode::InvalidRange) {
            return kExitUsage;  // bad flag values surface here
        }
        return classify(e.code()) == ucc::ErrorClass::ingestion ? kExitIngestion
                                                                : kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return 0;
}
