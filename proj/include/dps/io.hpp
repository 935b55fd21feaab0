// CSV/JSON serialization of grids and convergence reports.  Numeric fields
// are printed with up to 17 significant digits (round-trip exact), output
// files are written atomically (temp file + rename) so identical inputs
// give byte-identical artifacts.
#pragma once

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "dps/continuum.hpp"
#include "dps/core.hpp"
#include "dps/mapping.hpp"
#include "dps/wigner.hpp"

namespace dps {

inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline void atomic_write_text(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw input_error("cannot open output file " + tmp.string());
        out << content;
        if (!out) throw input_error("failed writing " + tmp.string());
    }
    fs::rename(tmp, target);
}

inline std::string grid_to_csv(const WignerGrid& grid) {
    std::string out = "m,n,value\n";
    for (int m = -grid.dim.h; m <= grid.dim.h; ++m)
        for (int n = -grid.dim.h; n <= grid.dim.h; ++n)
            out += std::to_string(m) + "," + std::to_string(n) + "," +
                   format_double(grid.at(m, n)) + "\n";
    return out;
}

inline std::string grid_to_csv(const PhaseSpaceFunction& f) {
    std::string out = "m,n,re,im\n";
    for (int m = -f.dim.h; m <= f.dim.h; ++m)
        for (int n = -f.dim.h; n <= f.dim.h; ++n)
            out += std::to_string(m) + "," + std::to_string(n) + "," +
                   format_double(f.at(m, n).real()) + "," + format_double(f.at(m, n).imag()) + "\n";
    return out;
}

inline std::string report_to_csv(const ConvergenceReport& report) {
    std::string out = "N,error\n";
    for (size_t i = 0; i < report.dims.size(); ++i)
        out += std::to_string(report.dims[i].N) + "," + format_double(report.errors[i]) + "\n";
    return out;
}

inline nlohmann::json grid_to_json(const WignerGrid& grid) {
    nlohmann::json values = nlohmann::json::array();
    for (int m = -grid.dim.h; m <= grid.dim.h; ++m) {
        nlohmann::json row = nlohmann::json::array();
        for (int n = -grid.dim.h; n <= grid.dim.h; ++n) row.push_back(grid.at(m, n));
        values.push_back(row);
    }
    return {{"N", grid.dim.N}, {"labels", "[-h,h]"}, {"values", values}};
}

inline nlohmann::json grid_to_json(const PhaseSpaceFunction& f) {
    nlohmann::json values = nlohmann::json::array();
    for (int m = -f.dim.h; m <= f.dim.h; ++m) {
        nlohmann::json row = nlohmann::json::array();
        for (int n = -f.dim.h; n <= f.dim.h; ++n)
            row.push_back({f.at(m, n).real(), f.at(m, n).imag()});
        values.push_back(row);
    }
    return {{"N", f.dim.N}, {"labels", "[-h,h]"}, {"values", values}};
}

inline nlohmann::json report_to_json(const ConvergenceReport& report) {
    nlohmann::json ns = nlohmann::json::array();
    nlohmann::json errs = nlohmann::json::array();
    for (size_t i = 0; i < report.dims.size(); ++i) {
        ns.push_back(report.dims[i].N);
        errs.push_back(report.errors[i]);
    }
    return {{"N", ns}, {"errors", errs}, {"norm", report.norm}};
}

} // namespace dps
