#include "kcut/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace kcut::io {

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

} // namespace

std::string samples_csv(const std::vector<double>& samples) {
    std::string out = "value\n";
    for (double v : samples) {
        out += fmt("%.17g", v);
        out += '\n';
    }
    return out;
}

std::string summary_json(const mcstats::Summary& summary) {
    nlohmann::json j;
    j["n"] = summary.n;
    j["mean"] = summary.mean;
    j["variance"] = summary.variance;
    j["se_mean"] = summary.se_mean;
    j["raw_moments"] = summary.raw_moments;
    return j.dump(2) + "\n";
}

std::string histogram_csv(const std::vector<double>& samples, int bins) {
    if (samples.empty()) throw std::invalid_argument("histogram_csv: need samples");
    if (bins < 1) throw std::invalid_argument("histogram_csv: bins must be >= 1");
    const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    double lo = *lo_it, hi = *hi_it;
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double width = (hi - lo) / bins;
    std::vector<long long> counts(bins, 0);
    for (double v : samples) {
        int b = static_cast<int>((v - lo) / width);
        if (b < 0) b = 0;
        if (b >= bins) b = bins - 1;
        ++counts[b];
    }

    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= static_cast<double>(samples.size());
    double ss = 0.0;
    for (double v : samples) ss += (v - mean) * (v - mean);
    const double sd = samples.size() > 1
                          ? std::sqrt(ss / static_cast<double>(samples.size() - 1))
                          : 0.0;

    std::string out = "bin_left,bin_right,count,normal_overlay\n";
    for (int b = 0; b < bins; ++b) {
        const double left = lo + b * width;
        const double right = lo + (b + 1) * width;
        const double centre = 0.5 * (left + right);
        double overlay = 0.0;
        if (sd > 0.0) {
            const double z = (centre - mean) / sd;
            overlay = static_cast<double>(samples.size()) * width *
                      std::exp(-0.5 * z * z) / (sd * std::sqrt(2.0 * M_PI));
        }
        out += fmt("%.10g", left) + "," + fmt("%.10g", right) + "," +
               std::to_string(counts[b]) + "," + fmt("%.10g", overlay) + "\n";
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_file: cannot open " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write_file: write failed for " + path);
}

} // namespace kcut::io
