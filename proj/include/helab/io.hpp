#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "helab/evolution.hpp"

namespace helab {

// Full-precision (17 significant digits), locale-independent rendering of a
// double. Every number leaving the process goes through this.
std::string format_full(double v);

// Time series writers. CSV column set and order are part of the interface:
//   t,energy,chi_mag,chi_el,chi_cs,eb_integral,n_diff
extern const char* const kSeriesCsvHeader;

void write_series_csv(std::ostream& out, const std::vector<DiagnosticsRecord>& series);
nlohmann::json series_to_json(const std::vector<DiagnosticsRecord>& series);

// Write text to path, or to fallback stream when path is empty.
void write_text_output(const std::string& path, const std::string& text, std::ostream& fallback);

}  // namespace helab
