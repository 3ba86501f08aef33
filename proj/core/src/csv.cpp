#include "ns1d/csv.hpp"

#include <sstream>
#include <stdexcept>

#include "ns1d/config.hpp"

namespace ns1d {

std::string format_series_row(const DiagnosticsRecord& r) {
    std::string row;
    const double values[15] = {r.t,        r.eta_total, r.dissipation_cum,
                               r.balance_residual, r.mass,  r.momentum,
                               r.total_energy,     r.v_min, r.v_max,
                               r.theta_min,        r.theta_max, r.psi_min,
                               r.psi_max,          r.h3_norm,   r.sup_perturbation};
    for (int i = 0; i < 15; ++i) {
        if (i) {
            row += ',';
        }
        row += format_double(values[i]);
    }
    return row;
}

void write_series(const std::vector<DiagnosticsRecord>& records, const std::string& path) {
    if (records.empty()) {
        throw std::invalid_argument("write_series: empty record list");
    }
    SeriesWriter writer(path, /*append=*/false);
    for (const DiagnosticsRecord& r : records) {
        writer.write(r);
    }
    writer.flush();
}

std::vector<DiagnosticsRecord> read_series(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("read_series: cannot open " + path);
    }
    std::string line;
    if (!std::getline(in, line) || line != series_csv_header) {
        throw std::runtime_error("read_series: bad header in " + path);
    }
    std::vector<DiagnosticsRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        double values[15];
        for (int i = 0; i < 15; ++i) {
            if (!std::getline(ss, cell, ',')) {
                throw std::runtime_error("read_series: short row in " + path);
            }
            values[i] = parse_double(cell, "series column " + std::to_string(i));
        }
        if (std::getline(ss, cell, ',')) {
            throw std::runtime_error("read_series: too many columns in " + path);
        }
        DiagnosticsRecord r;
        r.t = values[0];
        r.eta_total = values[1];
        r.dissipation_cum = values[2];
        r.balance_residual = values[3];
        r.mass = values[4];
        r.momentum = values[5];
        r.total_energy = values[6];
        r.v_min = values[7];
        r.v_max = values[8];
        r.theta_min = values[9];
        r.theta_max = values[10];
        r.psi_min = values[11];
        r.psi_max = values[12];
        r.h3_norm = values[13];
        r.sup_perturbation = values[14];
        records.push_back(r);
    }
    return records;
}

SeriesWriter::SeriesWriter(const std::string& path, bool append)
    : out_(path, append ? std::ios::binary | std::ios::app : std::ios::binary),
      path_(path) {
    if (!out_) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    if (!append) {
        out_ << series_csv_header << "\n";
    }
}

void SeriesWriter::write(const DiagnosticsRecord& r) {
    out_ << format_series_row(r) << "\n";
    if (!out_) {
        throw std::runtime_error("write failure on " + path_);
    }
}

void SeriesWriter::flush() {
    out_.flush();
    if (!out_) {
        throw std::runtime_error("flush failure on " + path_);
    }
}

} // namespace ns1d
