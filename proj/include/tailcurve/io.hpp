#pragma once

#include "tailcurve/distributions.hpp"
#include "tailcurve/stats.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>

namespace tailcurve {

/// Everything needed to replay a CLI run bit-identically. Serialized as JSON
/// next to each output file; `extra` carries the command-specific flags
/// (grid, bins, mean, ...) that the fixed fields do not cover.
struct RunManifest {
    std::string command;
    std::string curve_spec;
    double sigma = 0.0;
    double alpha = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t n = 0;
    std::string algorithm_id;
    std::string tool_version;
    std::map<std::string, std::string> extra;
};

/// %.17g rendering: shortest form that round-trips a double.
std::string fmt17(double v);

void write_samples_csv(const std::filesystem::path& path, std::span<const double> values);

/// Sidecar manifest for a raw sample batch: {seed, algorithm_id, n, sigma, alpha}.
void write_sample_batch(const std::filesystem::path& csv_path,
                        const SampleBatch& batch,
                        double sigma,
                        double alpha);

/// bin_low,bin_high,count rows plus "# underflow=..., overflow=..." footer.
void write_histogram_csv(const std::filesystem::path& path, const Histogram& h);

void write_moments_json(const std::filesystem::path& path, const MomentEstimates& est);

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

/// Two-column CSV with an arbitrary header, e.g. "y,g" or "sigma,kurtosis".
void write_pairs_csv(const std::filesystem::path& path,
                     const std::string& header,
                     std::span<const double> first,
                     std::span<const double> second);

/// Three-column CSV, e.g. "x,gamma_x,residual".
void write_triples_csv(const std::filesystem::path& path,
                       const std::string& header,
                       std::span<const double> first,
                       std::span<const double> second,
                       std::span<const double> third);

}  // namespace tailcurve
