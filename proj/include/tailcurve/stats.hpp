#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tailcurve {

struct MomentEstimates {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;  // unbiased (n - 1 divisor)
    double skewness = 0.0;  // m3 / m2^(3/2), biased central moments
    double kurtosis = 0.0;  // raw m4 / m2^2, biased central moments; Gaussian = 3
};

/// One-pass central-moment accumulator (Welford updates through fourth
/// order). Accumulators merge exactly in the algebraic sense, so sharded
/// computation reproduces the concatenated stream.
class MomentAccumulator {
public:
    void push(double x);
    void merge(const MomentAccumulator& other);

    std::size_t count() const { return n_; }

    /// Requires n >= 4 and nonzero variance; throws std::domain_error otherwise.
    MomentEstimates estimates() const;

private:
    std::size_t n_ = 0;
    double m1_ = 0.0;
    double m2_ = 0.0;
    double m3_ = 0.0;
    double m4_ = 0.0;
};

MomentEstimates sample_moments(std::span<const double> values);

struct HistogramSpec {
    double lo;
    double hi;
    std::size_t bins;

    HistogramSpec(double lo_, double hi_, std::size_t bins_);
};

/// Fixed-width counts over [lo, hi); the final bin is right-closed so hi
/// itself lands in it. Out-of-range values are tallied separately and
/// counts + underflow + overflow == n always holds.
struct Histogram {
    HistogramSpec spec;
    std::vector<std::uint64_t> counts;
    std::uint64_t underflow = 0;
    std::uint64_t overflow = 0;

    double bin_low(std::size_t i) const;
    double bin_high(std::size_t i) const;
};

Histogram histogram(std::span<const double> values, const HistogramSpec& spec);

}  // namespace tailcurve
