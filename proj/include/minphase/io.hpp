#pragma once

// Deterministic file formats: CSV for sampled signals (17 significant digits,
// lossless round trip) and JSON for analysis reports.
//
//   signal CSV      header "# minphase-signal v1"   rows t,re,im
//   intensity CSV   header "# minphase-intensity v1" rows t,i

#include <filesystem>

#include "minphase/analysis.hpp"
#include "minphase/zeros.hpp"

#include <json.hpp>

namespace minphase {

void write_signal_csv(const std::filesystem::path& path, const ComplexSignal& sig);
ComplexSignal read_signal_csv(const std::filesystem::path& path);

void write_intensity_csv(const std::filesystem::path& path, const RealSignal& sig);
RealSignal read_intensity_csv(const std::filesystem::path& path);

/// Schema-versioned report document ("minphase-report/1").
nlohmann::json report_json(const AnalysisReport& report,
                           const std::vector<ZeroEstimate>& oracle_zeros,
                           const std::vector<ZeroEstimate>* fit_zeros);

AnalysisReport report_from_json(const nlohmann::json& doc,
                                std::vector<ZeroEstimate>* oracle_zeros = nullptr,
                                std::vector<ZeroEstimate>* fit_zeros = nullptr);

}  // namespace minphase
