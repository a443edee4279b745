// Command-line surface: synth | analyze | retrieve | simulate.
// Exit codes: 0 success, 1 runtime error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "minphase/core.hpp"
#include "minphase/io.hpp"
#include "minphase/link.hpp"
#include "minphase/zeros.hpp"

namespace {

using namespace minphase;

struct LinkFlags {
    std::string constellation = "qam16s";
    double bias = 1.1;
    double beta = 0.1;
    double t_sym = 1.0;
    std::size_t n_sym = 512;
    std::size_t oversample = 16;
    std::uint64_t seed = 0;

    void attach(CLI::App& app) {
        app.add_option("--constellation", constellation, "qam16s | qam16s4 | am8s | quadrant")
            ->check(CLI::IsMember({"qam16s", "qam16s4", "am8s", "quadrant"}));
        app.add_option("--bias", bias, "constellation shift b (floor a for quadrant)")
            ->check(CLI::NonNegativeNumber);
        app.add_option("--beta", beta, "pulse roll-off in (0,1]");
        app.add_option("--tsym", t_sym, "symbol period in seconds");
        app.add_option("--nsym", n_sym, "symbols per window");
        app.add_option("--oversample", oversample, "samples per symbol (>= 8)");
        app.add_option("--seed", seed, "RNG seed");
    }

    LinkConfig config() const {
        LinkConfig cfg;
        cfg.pulse = PulseConfig(beta, t_sym);
        if (constellation == "qam16s") {
            cfg.constellation = {ConstellationKind::Shifted16QAM, bias, 8};
        } else if (constellation == "qam16s4") {
            cfg.constellation = {ConstellationKind::Shifted16QAM, bias, 4};
        } else if (constellation == "am8s") {
            cfg.constellation = {ConstellationKind::Shifted8AM, bias, 8};
        } else {
            cfg.constellation = {ConstellationKind::BiasedQuadrant, bias, 8};
        }
        cfg.n_sym = n_sym;
        cfg.oversample = oversample;
        cfg.seed = seed;
        return cfg;
    }
};

void print_summary(const ComplexSignal& field) {
    const cplx av = time_average(field);
    double lo = std::numeric_limits<double>::infinity();
    for (const cplx& v : field.samples()) lo = std::min(lo, std::abs(v));
    std::printf("E_av = %.6g%+.6gi  min|E| = %.6g\n", av.real(), av.imag(), lo);
    try {
        const WindingScan scan = winding_scan(field);
        std::printf("winding = %d (|N| = %d)\n", scan.winding, std::abs(scan.winding));
    } catch (const Error& e) {
        std::printf("winding = undefined (%s)\n", e.what());
    }
}

int cmd_synth(const LinkFlags& flags, const std::string& out,
              const std::string& intensity_out) {
    const Transmission tx = transmit(flags.config());
    write_signal_csv(out, tx.field);
    if (!intensity_out.empty()) {
        write_intensity_csv(intensity_out, detect_intensity(tx.field));
    }
    print_summary(tx.field);
    return 0;
}

int cmd_analyze(const std::string& in, bool fit_zeros_flag, const std::string& out) {
    const ComplexSignal sig = read_signal_csv(in);
    const AnalysisReport rep = analyze(sig);
    const std::vector<ZeroEstimate> oracle = zeros_oracle(sig);

    std::vector<ZeroEstimate> fit;
    const std::vector<ZeroEstimate>* fit_ptr = nullptr;
    if (fit_zeros_flag) {
        const ComplexSignal ratio = blaschke_ratio(sig, rep.phase_bias);
        fit = fit_lorentzians(ratio, rep.winding_count);
        fit_ptr = &fit;
    }
    const nlohmann::json doc = report_json(rep, oracle, fit_ptr);
    if (out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream f(out);
        if (!f) throw Error("cannot open " + out);
        f << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_retrieve(const std::string& intensity_path, double phase_bias, bool bias_given,
                 const std::string& truth_path, const std::string& out) {
    if (!bias_given) {
        std::fprintf(stderr, "warning: --phase-bias not given, defaulting to 0\n");
    }
    const RealSignal intensity = read_intensity_csv(intensity_path);
    const ComplexSignal field = minphase_signal(intensity, phase_bias);
    if (!out.empty()) {
        write_signal_csv(out, field);
    }
    if (!truth_path.empty()) {
        const ComplexSignal truth = read_signal_csv(truth_path);
        std::printf("reconstruction_error = %.6e\n", reconstruction_error(truth, field));
    }
    return 0;
}

int cmd_simulate(const LinkFlags& flags, const std::vector<std::string>& snr_list,
                 std::size_t trials, const std::string& out) {
    nlohmann::json doc;
    doc["schema"] = "minphase-simulation/1";
    doc["config"] = {{"constellation", flags.constellation}, {"bias", flags.bias},
                     {"beta", flags.beta},                   {"tsym", flags.t_sym},
                     {"nsym", flags.n_sym},                  {"oversample", flags.oversample},
                     {"seed", flags.seed},                   {"trials", trials}};
    doc["results"] = nlohmann::json::array();
    for (const std::string& snr_str : snr_list) {
        LinkConfig cfg = flags.config();
        cfg.noise_snr_db = (snr_str == "inf") ? std::numeric_limits<double>::infinity()
                                              : std::stod(snr_str);
        const LinkResult res = run_experiment(cfg, trials);
        doc["results"].push_back({{"snr_db", snr_str},
                                  {"ser", res.ser},
                                  {"field_rms_error", res.field_rms_error},
                                  {"winding_violations", res.winding_violations}});
        std::printf("snr %s dB: ser = %.6g, winding violations %zu/%zu\n", snr_str.c_str(),
                    res.ser, res.winding_violations, trials);
    }
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw Error("cannot open " + out);
        f << doc.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-phase analysis and Kramers-Kronig transmission toolbox"};
    app.require_subcommand(1);

    LinkFlags synth_flags;
    std::string synth_out, synth_intensity_out;
    CLI::App* synth = app.add_subcommand("synth", "synthesize a biased-constellation field");
    synth_flags.attach(*synth);
    synth->add_option("--out", synth_out, "output signal CSV")->required();
    synth->add_option("--intensity-out", synth_intensity_out, "also write |E|^2 CSV");

    std::string analyze_in, analyze_out;
    bool analyze_fit = false;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "winding / conditions / zeros report");
    analyze_cmd->add_option("--in", analyze_in, "input signal CSV")->required();
    analyze_cmd->add_flag("--fit-zeros", analyze_fit, "also fit Lorentzian zero estimates");
    analyze_cmd->add_option("--out", analyze_out, "report JSON path (default: stdout)");

    std::string retrieve_in, retrieve_truth, retrieve_out;
    double retrieve_bias = 0.0;
    CLI::App* retrieve = app.add_subcommand("retrieve", "field from intensity by log-Hilbert");
    retrieve->add_option("--intensity", retrieve_in, "input intensity CSV")->required();
    CLI::Option* bias_opt = retrieve->add_option("--phase-bias", retrieve_bias, "phase bias in rad");
    retrieve->add_option("--truth", retrieve_truth, "reference signal CSV for error report");
    retrieve->add_option("--out", retrieve_out, "output signal CSV");

    LinkFlags sim_flags;
    std::string sim_out;
    std::vector<std::string> sim_snr{"inf"};
    std::size_t sim_trials = 5;
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo link experiment");
    sim_flags.attach(*simulate);
    simulate->add_option("--snr", sim_snr, "per-symbol SNR list in dB, or inf")->delimiter(',');
    simulate->add_option("--trials", sim_trials, "trials per SNR point");
    simulate->add_option("--out", sim_out, "simulation JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message/usage
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (synth->parsed()) return cmd_synth(synth_flags, synth_out, synth_intensity_out);
        if (analyze_cmd->parsed()) return cmd_analyze(analyze_in, analyze_fit, analyze_out);
        if (retrieve->parsed()) {
            return cmd_retrieve(retrieve_in, retrieve_bias, bias_opt->count() > 0, retrieve_truth,
                                retrieve_out);
        }
        if (simulate->parsed()) return cmd_simulate(sim_flags, sim_snr, sim_trials, sim_out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
