#include "minphase/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace minphase {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CsvHeader {
    std::string magic;
    std::map<std::string, std::string> fields;
    std::size_t data_start = 0;  // line index of the column row
};

CsvHeader parse_header(std::ifstream& in, const std::filesystem::path& path) {
    CsvHeader h;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
        throw Error("csv: missing header magic in " + path.string());
    }
    h.magic = line.substr(2);
    while (in.peek() == '#') {
        std::getline(in, line);
        const auto eq = line.find('=');
        if (eq != std::string::npos) {
            std::string key = line.substr(2, eq - 2);
            h.fields[key] = line.substr(eq + 1);
        }
    }
    std::getline(in, line);  // column names
    return h;
}

TimeGrid grid_from_header(const CsvHeader& h, const std::filesystem::path& path) {
    try {
        const auto n = static_cast<std::size_t>(std::stoull(h.fields.at("n_samples")));
        const double dt = std::stod(h.fields.at("dt"));
        const double t0 = std::stod(h.fields.at("t0"));
        return TimeGrid(n, dt, t0);
    } catch (const std::exception& e) {
        throw Error("csv: bad header in " + path.string() + ": " + e.what());
    }
}

void write_header(std::ofstream& out, const char* magic, const TimeGrid& g,
                  const std::string& label) {
    out << "# " << magic << "\n";
    out << "# n_samples=" << g.n_samples() << "\n";
    out << "# dt=" << fmt17(g.dt()) << "\n";
    out << "# t0=" << fmt17(g.t0()) << "\n";
    out << "# label=" << label << "\n";
}

}  // namespace

void write_signal_csv(const std::filesystem::path& path, const ComplexSignal& sig) {
    std::ofstream out(path);
    if (!out) throw Error("csv: cannot open " + path.string() + " for writing");
    write_header(out, "minphase-signal v1", sig.grid(), sig.label());
    out << "t,re,im\n";
    for (std::size_t j = 0; j < sig.size(); ++j) {
        out << fmt17(sig.grid().t(j)) << ',' << fmt17(sig[j].real()) << ',' << fmt17(sig[j].imag())
            << "\n";
    }
    if (!out) throw Error("csv: write failed for " + path.string());
}

ComplexSignal read_signal_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("csv: cannot open " + path.string());
    const CsvHeader h = parse_header(in, path);
    if (h.magic != "minphase-signal v1") {
        throw Error("csv: " + path.string() + " is not a minphase-signal v1 file");
    }
    const TimeGrid grid = grid_from_header(h, path);
    std::vector<cplx> samples;
    samples.reserve(grid.n_samples());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double t, re, im;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &t, &re, &im) != 3) {
            throw Error("csv: malformed row '" + line + "' in " + path.string());
        }
        samples.emplace_back(re, im);
    }
    if (samples.size() != grid.n_samples()) {
        throw Error("csv: row count " + std::to_string(samples.size()) + " != n_samples in " +
                    path.string());
    }
    std::string label;
    if (auto it = h.fields.find("label"); it != h.fields.end()) label = it->second;
    return ComplexSignal(grid, std::move(samples), label);
}

void write_intensity_csv(const std::filesystem::path& path, const RealSignal& sig) {
    std::ofstream out(path);
    if (!out) throw Error("csv: cannot open " + path.string() + " for writing");
    write_header(out, "minphase-intensity v1", sig.grid(), sig.label());
    out << "t,i\n";
    for (std::size_t j = 0; j < sig.size(); ++j) {
        out << fmt17(sig.grid().t(j)) << ',' << fmt17(sig[j]) << "\n";
    }
    if (!out) throw Error("csv: write failed for " + path.string());
}

RealSignal read_intensity_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("csv: cannot open " + path.string());
    const CsvHeader h = parse_header(in, path);
    if (h.magic != "minphase-intensity v1") {
        throw Error("csv: " + path.string() + " is not a minphase-intensity v1 file");
    }
    const TimeGrid grid = grid_from_header(h, path);
    std::vector<double> samples;
    samples.reserve(grid.n_samples());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double t, v;
        if (std::sscanf(line.c_str(), "%lf,%lf", &t, &v) != 2) {
            throw Error("csv: malformed row '" + line + "' in " + path.string());
        }
        samples.push_back(v);
    }
    if (samples.size() != grid.n_samples()) {
        throw Error("csv: row count mismatch in " + path.string());
    }
    std::string label;
    if (auto it = h.fields.find("label"); it != h.fields.end()) label = it->second;
    return RealSignal(grid, std::move(samples), label);
}

namespace {

nlohmann::json zeros_json(const std::vector<ZeroEstimate>& zeros) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ZeroEstimate& z : zeros) {
        arr.push_back({{"t", z.t_k},
                       {"tau", z.tau_abs},
                       {"method", z.method == ZeroMethod::oracle ? "oracle" : "lorentzian_fit"},
                       {"residual", z.residual}});
    }
    return arr;
}

std::vector<ZeroEstimate> zeros_from_json(const nlohmann::json& arr) {
    std::vector<ZeroEstimate> out;
    for (const auto& z : arr) {
        out.push_back(ZeroEstimate{
            z.at("t").get<double>(), z.at("tau").get<double>(),
            z.at("method").get<std::string>() == "oracle" ? ZeroMethod::oracle
                                                          : ZeroMethod::lorentzian_fit,
            z.at("residual").get<double>()});
    }
    return out;
}

}  // namespace

nlohmann::json report_json(const AnalysisReport& report,
                           const std::vector<ZeroEstimate>& oracle_zeros,
                           const std::vector<ZeroEstimate>* fit_zeros) {
    nlohmann::json doc;
    doc["schema"] = "minphase-report/1";
    doc["winding"] = report.winding;
    doc["winding_count"] = report.winding_count;
    doc["min_phase"] = report.min_phase;
    doc["conditions"] = {{"half_plane", report.conditions.half_plane},
                         {"envelope", report.conditions.envelope},
                         {"spectral_energy", report.conditions.spectral_energy}};
    if (report.conditions.phi0) {
        doc["conditions"]["phi0"] = *report.conditions.phi0;
    }
    doc["phase_bias"] = report.phase_bias;
    doc["min_abs"] = report.min_abs;
    doc["bias"] = {report.bias.real(), report.bias.imag()};
    doc["retrieval_error"] = report.retrieval_error;
    doc["zeros_oracle"] = zeros_json(oracle_zeros);
    if (fit_zeros != nullptr) {
        doc["zeros_fit"] = zeros_json(*fit_zeros);
    }
    return doc;
}

AnalysisReport report_from_json(const nlohmann::json& doc, std::vector<ZeroEstimate>* oracle_zeros,
                                std::vector<ZeroEstimate>* fit_zeros) {
    if (doc.at("schema").get<std::string>() != "minphase-report/1") {
        throw Error("report: unknown schema");
    }
    AnalysisReport rep;
    rep.winding = doc.at("winding").get<int>();
    rep.winding_count = doc.at("winding_count").get<unsigned>();
    rep.min_phase = doc.at("min_phase").get<bool>();
    const auto& cond = doc.at("conditions");
    rep.conditions.half_plane = cond.at("half_plane").get<bool>();
    rep.conditions.envelope = cond.at("envelope").get<bool>();
    rep.conditions.spectral_energy = cond.at("spectral_energy").get<bool>();
    if (cond.contains("phi0")) rep.conditions.phi0 = cond.at("phi0").get<double>();
    rep.phase_bias = doc.at("phase_bias").get<double>();
    rep.min_abs = doc.at("min_abs").get<double>();
    rep.bias = cplx{doc.at("bias")[0].get<double>(), doc.at("bias")[1].get<double>()};
    rep.retrieval_error = doc.at("retrieval_error").get<double>();
    if (oracle_zeros != nullptr) *oracle_zeros = zeros_from_json(doc.at("zeros_oracle"));
    if (fit_zeros != nullptr && doc.contains("zeros_fit")) {
        *fit_zeros = zeros_from_json(doc.at("zeros_fit"));
    }
    return rep;
}

}  // namespace minphase
