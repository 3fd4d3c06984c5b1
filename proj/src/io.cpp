#include "tailcurve/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace tailcurve {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary: no platform newline translation
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    return out;
}

}  // namespace

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_samples_csv(const std::filesystem::path& path, std::span<const double> values) {
    auto out = open_for_write(path);
    out << "value\n";
    for (const double v : values) {
        out << fmt17(v) << "\n";
    }
}

void write_sample_batch(const std::filesystem::path& csv_path,
                        const SampleBatch& batch,
                        double sigma,
                        double alpha) {
    write_samples_csv(csv_path, batch.values);
    nlohmann::ordered_json j;
    j["seed"] = batch.seed;
    j["algorithm_id"] = batch.algorithm_id;
    j["n"] = batch.values.size();
    j["sigma"] = sigma;
    j["alpha"] = alpha;
    auto out = open_for_write(std::filesystem::path(csv_path).replace_extension(".manifest.json"));
    out << j.dump(2) << "\n";
}

void write_histogram_csv(const std::filesystem::path& path, const Histogram& h) {
    auto out = open_for_write(path);
    out << "bin_low,bin_high,count\n";
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        out << fmt17(h.bin_low(i)) << "," << fmt17(h.bin_high(i)) << "," << h.counts[i] << "\n";
    }
    out << "# underflow=" << h.underflow << ", overflow=" << h.overflow << "\n";
}

void write_moments_json(const std::filesystem::path& path, const MomentEstimates& est) {
    nlohmann::ordered_json j;
    j["n"] = est.n;
    j["mean"] = est.mean;
    j["variance"] = est.variance;
    j["skewness"] = est.skewness;
    j["kurtosis"] = est.kurtosis;
    auto out = open_for_write(path);
    out << j.dump(2) << "\n";
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
    nlohmann::ordered_json j;
    j["command"] = manifest.command;
    j["curve_spec"] = manifest.curve_spec;
    j["sigma"] = manifest.sigma;
    j["alpha"] = manifest.alpha;
    j["seed"] = manifest.seed;
    j["n"] = manifest.n;
    j["algorithm_id"] = manifest.algorithm_id;
    j["tool_version"] = manifest.tool_version;
    if (!manifest.extra.empty()) {
        nlohmann::ordered_json extra;
        for (const auto& [key, value] : manifest.extra) {
            extra[key] = value;
        }
        j["extra"] = extra;
    }
    auto out = open_for_write(path);
    out << j.dump(2) << "\n";
}

void write_pairs_csv(const std::filesystem::path& path,
                     const std::string& header,
                     std::span<const double> first,
                     std::span<const double> second) {
    if (first.size() != second.size()) {
        throw std::invalid_argument("write_pairs_csv: column length mismatch");
    }
    auto out = open_for_write(path);
    out << header << "\n";
    for (std::size_t i = 0; i < first.size(); ++i) {
        out << fmt17(first[i]) << "," << fmt17(second[i]) << "\n";
    }
}

void write_triples_csv(const std::filesystem::path& path,
                       const std::string& header,
                       std::span<const double> first,
                       std::span<const double> second,
                       std::span<const double> third) {
    if (first.size() != second.size() || first.size() != third.size()) {
        throw std::invalid_argument("write_triples_csv: column length mismatch");
    }
    auto out = open_for_write(path);
    out << header << "\n";
    for (std::size_t i = 0; i < first.size(); ++i) {
        out << fmt17(first[i]) << "," << fmt17(second[i]) << "," << fmt17(third[i]) << "\n";
    }
}

}  // namespace tailcurve
