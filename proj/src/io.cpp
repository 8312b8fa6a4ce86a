#include "helab/io.hpp"

#include <array>
#include <charconv>
#include <fstream>

#include "helab/errors.hpp"

namespace helab {

std::string format_full(double v) {
    std::array<char, 64> buf;
    auto [end, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    if (ec != std::errc()) throw Error("format_full: conversion failed");
    return std::string(buf.data(), end);
}

const char* const kSeriesCsvHeader = "t,energy,chi_mag,chi_el,chi_cs,eb_integral,n_diff";

void write_series_csv(std::ostream& out, const std::vector<DiagnosticsRecord>& series) {
    out << kSeriesCsvHeader << '\n';
    for (const DiagnosticsRecord& r : series)
        out << format_full(r.t) << ',' << format_full(r.energy) << ',' << format_full(r.chi_mag)
            << ',' << format_full(r.chi_el) << ',' << format_full(r.chi_cs) << ','
            << format_full(r.eb_integral) << ',' << format_full(r.n_diff) << '\n';
}

nlohmann::json series_to_json(const std::vector<DiagnosticsRecord>& series) {
    nlohmann::json rows = nlohmann::json::array();
    for (const DiagnosticsRecord& r : series)
        rows.push_back({{"t", r.t},
                        {"energy", r.energy},
                        {"chi_mag", r.chi_mag},
                        {"chi_el", r.chi_el},
                        {"chi_cs", r.chi_cs},
                        {"eb_integral", r.eb_integral},
                        {"n_diff", r.n_diff}});
    return rows;
}

void write_text_output(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty()) {
        fallback << text;
        fallback.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << text;
    out.flush();
    if (!out) throw ConfigError("failed writing output file: " + path);
}

}  // namespace helab
