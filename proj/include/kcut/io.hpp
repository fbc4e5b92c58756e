#pragma once

#include <string>
#include <vector>

#include "kcut/mcstats.hpp"

namespace kcut::io {

/// One "value" column, full round-trip precision.
std::string samples_csv(const std::vector<double>& samples);

/// JSON object with n, mean, variance, se_mean and the first four raw
/// moments; key order and formatting are deterministic.
std::string summary_json(const mcstats::Summary& summary);

/// "bin_left,bin_right,count,normal_overlay" rows over equal-width bins,
/// where the overlay column is the normal density fitted to the sample mean
/// and variance, scaled to counts.
std::string histogram_csv(const std::vector<double>& samples, int bins);

/// Writes the whole string, creating or truncating; throws std::runtime_error
/// on any failure.
void write_file(const std::string& path, const std::string& content);

} // namespace kcut::io
