#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "ns1d/diagnostics.hpp"

namespace ns1d {

// Frozen series schema; golden-header tested.
inline constexpr const char* series_csv_header =
    "t,eta_total,dissipation_cum,balance_residual,mass,momentum,total_energy,"
    "v_min,v_max,theta_min,theta_max,psi_min,psi_max,h3_norm,sup_perturbation";

std::string format_series_row(const DiagnosticsRecord& r);

// Writes header plus one row per record, floats at 17 significant digits
// (exact round trip). Throws on empty input or I/O failure.
void write_series(const std::vector<DiagnosticsRecord>& records, const std::string& path);

std::vector<DiagnosticsRecord> read_series(const std::string& path);

// Streaming writer used by the CLI so an interrupted run leaves a valid file.
class SeriesWriter {
public:
    // append = false writes the header; append = true continues an existing file.
    SeriesWriter(const std::string& path, bool append);
    void write(const DiagnosticsRecord& r);
    void flush();

private:
    std::ofstream out_;
    std::string path_;
};

} // namespace ns1d
