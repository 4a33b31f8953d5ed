// uqkit command-line front end: synthetic data generation, window analysis,
// raw-ADC conversion, linear calibration, step-response fitting, and the
// oversampling constraint check.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "uqkit/bme680.hpp"
#include "uqkit/calibration.hpp"
#include "uqkit/csv.hpp"
#include "uqkit/errors.hpp"
#include "uqkit/noise_model.hpp"
#include "uqkit/pipeline.hpp"
#include "uqkit/stats.hpp"
#include "uqkit/synth.hpp"
#include "uqkit/thermal.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitConstraintFailed = 3;
constexpr int kSchemaVersion = 1;

std::string default_prefix(const std::string& input) {
    fs::path p(input);
    p.replace_extension();
    return p.string();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw uqkit::Error("cannot open output file " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw uqkit::ParseError("cannot open input file " + path);
    return in;
}

double derive_sample_rate(const uqkit::PairedCsv& data) {
    if (data.timestamp_s.size() < 2) return 1.0;
    const double span = data.timestamp_s.back() - data.timestamp_s.front();
    if (!(span > 0.0)) return 1.0;
    return static_cast<double>(data.timestamp_s.size() - 1) / span;
}

struct AnalyzeOptions {
    std::string input;
    std::string output_prefix;
    std::size_t window_size = 30;
    double max_skew = 2.0;
    double max_kurtosis = 7.0;
    std::string mode = "conditional";
    std::string gate_channels = "both";
};

uqkit::StreamConfig stream_config(const AnalyzeOptions& opt, double fs) {
    uqkit::StreamConfig cfg;
    cfg.window_size = opt.window_size;
    cfg.thresholds = {opt.max_skew, opt.max_kurtosis};
    cfg.mode = opt.mode == "baseline" ? uqkit::PipelineMode::baseline
                                      : uqkit::PipelineMode::conditional;
    if (opt.gate_channels == "temperature")
        cfg.channels = uqkit::GateChannels::temperature_only;
    else if (opt.gate_channels == "humidity")
        cfg.channels = uqkit::GateChannels::humidity_only;
    cfg.sample_rate_hz = fs;
    return cfg;
}

json summarize(const std::vector<uqkit::UqReport>& reports, const uqkit::PairedCsv& data,
               const AnalyzeOptions& opt, const uqkit::StreamConfig& cfg) {
    const std::size_t n_windows = reports.size();
    const std::size_t used = n_windows * cfg.window_size;

    std::size_t passes = 0;
    std::size_t fail_thresholds = 0;
    std::size_t fail_degenerate = 0;
    double sum_sigma_t = 0.0;
    double sum_sigma_h = 0.0;
    double sum_sigma_hat = 0.0;
    double sum_reduction = 0.0;
    double sum_reduction_passed = 0.0;
    for (const auto& r : reports) {
        sum_sigma_t += r.sigma_t;
        sum_sigma_h += r.sigma_h;
        sum_sigma_hat += r.sigma_hat_h;
        sum_reduction += r.reduction_fraction;
        switch (r.gate) {
            case uqkit::GateOutcome::passed:
                ++passes;
                sum_reduction_passed += r.reduction_fraction;
                break;
            case uqkit::GateOutcome::failed_thresholds:
                ++fail_thresholds;
                break;
            case uqkit::GateOutcome::failed_degenerate:
                ++fail_degenerate;
                break;
            case uqkit::GateOutcome::not_evaluated:
                break;
        }
    }
    const double nw = static_cast<double>(n_windows);

    json j;
    j["schema_version"] = kSchemaVersion;
    j["mode"] = opt.mode;
    j["window_size"] = cfg.window_size;
    j["max_abs_skew"] = opt.max_skew;
    j["max_kurtosis"] = opt.max_kurtosis;
    j["gate_channels"] = opt.gate_channels;
    j["sample_rate_hz"] = cfg.sample_rate_hz;
    j["n_samples"] = data.t_values.size();
    j["n_samples_used"] = used;
    j["n_windows"] = n_windows;
    j["mean_sigma_t"] = sum_sigma_t / nw;
    j["mean_sigma_h"] = sum_sigma_h / nw;
    j["mean_sigma_hat_h"] = sum_sigma_hat / nw;
    j["mean_reduction_fraction"] = sum_reduction / nw;
    if (cfg.mode == uqkit::PipelineMode::conditional) {
        j["gate_passes"] = passes;
        j["gate_failures_thresholds"] = fail_thresholds;
        j["gate_failures_degenerate"] = fail_degenerate;
        j["gate_pass_rate"] = static_cast<double>(passes) / nw;
        j["mean_reduction_fraction_passed"] =
            passes > 0 ? json(sum_reduction_passed / static_cast<double>(passes))
                       : json(nullptr);
        // Whole-corpus statistics over the windowed region, as one pool.
        const std::span<const double> t(data.t_values.data(), used);
        const std::span<const double> h(data.h_values.data(), used);
        try {
            const double pooled_rho = uqkit::pearson_correlation(h, t);
            j["pooled_rho"] = pooled_rho;
            j["pooled_reduction_fraction"] =
                uqkit::conditional_sigma(1.0, pooled_rho).reduction_fraction;
        } catch (const uqkit::Error&) {
            j["pooled_rho"] = nullptr;
            j["pooled_reduction_fraction"] = nullptr;
        }
    } else {
        j["gate_passes"] = nullptr;
        j["gate_failures_thresholds"] = nullptr;
        j["gate_failures_degenerate"] = nullptr;
        j["gate_pass_rate"] = nullptr;
        j["mean_reduction_fraction_passed"] = nullptr;
        j["pooled_rho"] = nullptr;
        j["pooled_reduction_fraction"] = nullptr;
    }
    return j;
}

int run_analyze(const AnalyzeOptions& opt) {
    auto in = open_in(opt.input);
    const uqkit::PairedCsv data = uqkit::read_paired_csv(in);
    const double fs = derive_sample_rate(data);
    const uqkit::StreamConfig cfg = stream_config(opt, fs);
    const auto reports = uqkit::process_stream(data.t_values, data.h_values, cfg);

    const std::string prefix =
        opt.output_prefix.empty() ? default_prefix(opt.input) : opt.output_prefix;
    auto reports_out = open_out(prefix + "_reports.csv");
    uqkit::write_reports_csv(reports_out, reports);

    const json summary = summarize(reports, data, opt, cfg);
    auto summary_out = open_out(prefix + "_summary.json");
    summary_out << summary.dump(2) << '\n';
    std::cout << summary.dump(2) << '\n';

    if (cfg.mode == uqkit::PipelineMode::conditional &&
        summary["gate_passes"].get<std::size_t>() == 0)
        return kExitConstraintFailed;
    return kExitOk;
}

int run_compare(AnalyzeOptions opt) {
    auto in = open_in(opt.input);
    const uqkit::PairedCsv data = uqkit::read_paired_csv(in);
    const double fs = derive_sample_rate(data);

    opt.mode = "baseline";
    const uqkit::StreamConfig base_cfg = stream_config(opt, fs);
    const auto base = uqkit::process_stream(data.t_values, data.h_values, base_cfg);
    const json base_summary = summarize(base, data, opt, base_cfg);

    opt.mode = "conditional";
    const uqkit::StreamConfig cond_cfg = stream_config(opt, fs);
    const auto cond = uqkit::process_stream(data.t_values, data.h_values, cond_cfg);
    const json cond_summary = summarize(cond, data, opt, cond_cfg);

    const std::string prefix =
        opt.output_prefix.empty() ? default_prefix(opt.input) : opt.output_prefix;
    open_out(prefix + "_baseline_summary.json") << base_summary.dump(2) << '\n';
    open_out(prefix + "_conditional_summary.json") << cond_summary.dump(2) << '\n';

    json diff;
    diff["schema_version"] = kSchemaVersion;
    diff["baseline_mean_sigma_h"] = base_summary["mean_sigma_h"];
    diff["conditional_mean_sigma_hat_h"] = cond_summary["mean_sigma_hat_h"];
    diff["mean_reduction_fraction"] = cond_summary["mean_reduction_fraction"];
    diff["gate_pass_rate"] = cond_summary["gate_pass_rate"];
    std::cout << diff.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Correlated-noise uncertainty reduction for paired sensor channels"};
    app.require_subcommand(1);
    app.set_config("--config")->configurable(false);

    // --- simulate ---------------------------------------------------------
    auto* sim = app.add_subcommand("simulate", "Generate a synthetic paired series");
    uqkit::SynthConfig sim_cfg;
    sim_cfg.model = {.mu_h = 50.0, .mu_t = 25.0, .sigma_h = 0.5, .sigma_t = 0.1, .rho = 0.0};
    sim_cfg.sample_rate_hz = 128.3;
    std::string sim_mode = "constant";
    std::string sim_output = "data.csv";
    sim->add_option("--n", sim_cfg.n_samples, "Number of samples")->required();
    sim->add_option("--seed", sim_cfg.seed, "Generator seed");
    sim->add_option("--fs", sim_cfg.sample_rate_hz, "Sample rate in Hz");
    sim->add_option("--mu-t", sim_cfg.model.mu_t, "Temperature measurand, degC");
    sim->add_option("--mu-h", sim_cfg.model.mu_h, "Humidity measurand, %RH");
    sim->add_option("--sigma-t", sim_cfg.model.sigma_t, "Temperature noise std");
    sim->add_option("--sigma-h", sim_cfg.model.sigma_h, "Humidity noise std");
    sim->add_option("--rho", sim_cfg.model.rho, "Noise correlation");
    sim->add_option("--mode", sim_mode, "constant | step | trimodal")
        ->check(CLI::IsMember({"constant", "step", "trimodal"}));
    sim->add_option("--step-initial", sim_cfg.step.initial_value, "Step start, degC");
    sim->add_option("--step-final", sim_cfg.step.final_value, "Step end, degC");
    sim->add_option("--tau", sim_cfg.step.tau_s, "Lag time constant, s");
    sim->add_option("--separation", sim_cfg.trimodal.separation,
                    "Trimodal mode offset, sigma units");
    sim->add_option("--side-weight", sim_cfg.trimodal.side_weight,
                    "Weight of each side mode");
    sim->add_option("--output", sim_output, "Output CSV path");

    // --- analyze / compare -------------------------------------------------
    AnalyzeOptions an;
    auto* analyze = app.add_subcommand("analyze", "Windowed uncertainty reports");
    analyze->add_option("input", an.input, "Paired series CSV")->required();
    analyze->add_option("--window-size", an.window_size, "Samples per window");
    analyze->add_option("--max-skew", an.max_skew, "Gate |skewness| bound");
    analyze->add_option("--max-kurtosis", an.max_kurtosis, "Gate kurtosis bound");
    analyze->add_option("--mode", an.mode, "baseline | conditional")
        ->check(CLI::IsMember({"baseline", "conditional"}));
    analyze->add_option("--gate-channels", an.gate_channels,
                        "both | temperature | humidity")
        ->check(CLI::IsMember({"both", "temperature", "humidity"}));
    analyze->add_option("--output", an.output_prefix,
                        "Output prefix (default: input path without extension)");

    AnalyzeOptions cmp;
    auto* compare = app.add_subcommand(
        "compare", "Run baseline and conditional on the same file and diff");
    compare->add_option("input", cmp.input, "Paired series CSV")->required();
    compare->add_option("--window-size", cmp.window_size, "Samples per window");
    compare->add_option("--max-skew", cmp.max_skew, "Gate |skewness| bound");
    compare->add_option("--max-kurtosis", cmp.max_kurtosis, "Gate kurtosis bound");
    compare->add_option("--gate-channels", cmp.gate_channels,
                        "both | temperature | humidity")
        ->check(CLI::IsMember({"both", "temperature", "humidity"}));
    compare->add_option("--output", cmp.output_prefix, "Output prefix");

    // --- compensate ---------------------------------------------------------
    auto* comp = app.add_subcommand("compensate", "Raw ADC words to engineering units");
    std::string comp_input;
    std::string comp_calibration;
    std::string comp_output;
    comp->add_option("input", comp_input, "Raw ADC CSV (t_adc,h_adc,p_adc)")->required();
    comp->add_option("--calibration", comp_calibration, "Calibration constants file")
        ->required();
    comp->add_option("--output", comp_output, "Output CSV path");

    // --- calibrate ----------------------------------------------------------
    auto* cal = app.add_subcommand("calibrate", "Least-squares line through points");
    std::string cal_input;
    std::string cal_output;
    cal->add_option("input", cal_input, "Points CSV (sensor_value,reference_value)")
        ->required();
    cal->add_option("--output", cal_output, "Output JSON path");

    // --- step-response ------------------------------------------------------
    auto* step = app.add_subcommand("step-response", "Time constant from a trace");
    std::string step_input;
    std::string step_output;
    std::optional<double> step_initial;
    std::optional<double> step_final;
    step->add_option("input", step_input, "Trace CSV (time_s,value)")->required();
    step->add_option("--initial", step_initial, "Value before the step");
    step->add_option("--final", step_final, "Settled value after the step");
    step->add_option("--output", step_output, "Output JSON path");

    // --- check-constraint -----------------------------------------------------
    auto* chk = app.add_subcommand("check-constraint", "Oversampling margin check");
    double chk_fs = 0.0;
    double chk_tau = 0.0;
    double chk_margin = 10.0;
    chk->add_option("--fs", chk_fs, "Sample rate in Hz")->required();
    chk->add_option("--tau", chk_tau, "Time constant in seconds")->required();
    chk->add_option("--margin", chk_margin, "Required tau * fs margin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (sim->parsed()) {
            sim_cfg.mode = sim_mode == "constant"
                               ? uqkit::SynthMode::constant
                               : (sim_mode == "step" ? uqkit::SynthMode::step_response
                                                     : uqkit::SynthMode::trimodal);
            const uqkit::PairedSeries series = uqkit::generate(sim_cfg);
            auto out = open_out(sim_output);
            uqkit::write_paired_csv(out, series);
            return kExitOk;
        }
        if (analyze->parsed()) return run_analyze(an);
        if (compare->parsed()) return run_compare(cmp);
        if (comp->parsed()) {
            const uqkit::Bme680Calibration c = uqkit::load_calibration(comp_calibration);
            auto in = open_in(comp_input);
            const uqkit::RawAdcCsv raw = uqkit::read_raw_adc_csv(in);
            std::vector<double> t_out(raw.t_adc.size());
            std::vector<double> h_out(raw.t_adc.size());
            std::vector<double> p_out(raw.t_adc.size());
            for (std::size_t i = 0; i < raw.t_adc.size(); ++i) {
                t_out[i] = uqkit::compensate_temperature(c, raw.t_adc[i]);
                h_out[i] = uqkit::compensate_humidity(c, raw.h_adc[i], t_out[i]);
                p_out[i] = uqkit::compensate_pressure(c, raw.p_adc[i], t_out[i]);
            }
            const std::string path = comp_output.empty()
                                         ? default_prefix(comp_input) + "_engineering.csv"
                                         : comp_output;
            auto out = open_out(path);
            uqkit::write_compensated_csv(out, t_out, h_out, p_out);
            return kExitOk;
        }
        if (cal->parsed()) {
            auto in = open_in(cal_input);
            const uqkit::TwoColumns pts =
                uqkit::read_two_column_csv(in, "sensor_value", "reference_value");
            const uqkit::LinearFit f = uqkit::fit_linear(pts.a, pts.b);
            json j;
            j["schema_version"] = kSchemaVersion;
            j["slope"] = f.slope;
            j["intercept"] = f.intercept;
            j["rms_residual"] = f.rms_residual;
            j["n_points"] = pts.a.size();
            const std::string path =
                cal_output.empty() ? default_prefix(cal_input) + "_fit.json" : cal_output;
            open_out(path) << j.dump(2) << '\n';
            std::cout << j.dump(2) << '\n';
            return kExitOk;
        }
        if (step->parsed()) {
            auto in = open_in(step_input);
            const uqkit::TwoColumns trace =
                uqkit::read_two_column_csv(in, "time_s", "value");
            if (trace.a.size() < 10)
                throw uqkit::InsufficientData("trace needs at least 10 points");
            const double initial = step_initial ? *step_initial : trace.b.front();
            double final = 0.0;
            if (step_final) {
                final = *step_final;
            } else {
                // settled value: mean of the last tenth of the trace
                const std::size_t tail = std::max<std::size_t>(1, trace.b.size() / 10);
                const std::span<const double> tail_view(
                    trace.b.data() + trace.b.size() - tail, tail);
                final = uqkit::mean(tail_view);
            }
            const double tau =
                uqkit::estimate_time_constant(trace.a, trace.b, initial, final);
            json j;
            j["schema_version"] = kSchemaVersion;
            j["tau_s"] = tau;
            j["initial_value"] = initial;
            j["final_value"] = final;
            j["threshold_value"] =
                initial + (final - initial) * (1.0 - std::exp(-1.0));
            const std::string path =
                step_output.empty() ? default_prefix(step_input) + "_tau.json" : step_output;
            open_out(path) << j.dump(2) << '\n';
            std::cout << j.dump(2) << '\n';
            return kExitOk;
        }
        if (chk->parsed()) {
            const uqkit::ConstraintCheck r =
                uqkit::check_sampling_constraint(chk_fs, chk_tau, chk_margin);
            json j;
            j["schema_version"] = kSchemaVersion;
            j["pass"] = r.pass;
            j["ratio"] = r.ratio;
            j["margin"] = r.margin;
            j["sample_rate_hz"] = chk_fs;
            j["tau_s"] = chk_tau;
            std::cout << j.dump(2) << '\n';
            return r.pass ? kExitOk : kExitConstraintFailed;
        }
    } catch (const uqkit::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
