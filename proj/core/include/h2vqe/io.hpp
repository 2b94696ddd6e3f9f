#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "h2vqe/driver.hpp"

namespace h2vqe {

/// Full VqeResult as JSON. Doubles are written with round-trip precision so
/// result_from_json(result_to_json(r)) == r.
std::string result_to_json(const VqeResult& r);
VqeResult result_from_json(const std::string& text);

std::string config_to_json(const VqeConfig& c);

/// `nfev,energy,stddev,p0,p1,...`, one row per record, 12 significant digits.
std::string trace_csv(const std::vector<IterationRecord>& trace);

/// `distance_angstrom,vqe_total_ha,reference_total_ha,nfev`.
std::string scan_csv(const std::vector<ScanPoint>& points);

/// Formats with 12 significant digits.
std::string format_sig12(double v);

/// Writes `content` to `path`; throws io with the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace h2vqe
