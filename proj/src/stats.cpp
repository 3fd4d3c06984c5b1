#include "tailcurve/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace tailcurve {

void MomentAccumulator::push(double x) {
    const double n1 = static_cast<double>(n_);
    ++n_;
    const double n = static_cast<double>(n_);
    const double delta = x - m1_;
    const double delta_n = delta / n;
    const double delta_n2 = delta_n * delta_n;
    const double term1 = delta * delta_n * n1;

    m1_ += delta_n;
    m4_ += term1 * delta_n2 * (n * n - 3.0 * n + 3.0) + 6.0 * delta_n2 * m2_ -
           4.0 * delta_n * m3_;
    m3_ += term1 * delta_n * (n - 2.0) - 3.0 * delta_n * m2_;
    m2_ += term1;
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
    if (other.n_ == 0) {
        return;
    }
    if (n_ == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(n_);
    const double nb = static_cast<double>(other.n_);
    const double n = na + nb;
    const double delta = other.m1_ - m1_;
    const double delta2 = delta * delta;

    MomentAccumulator out;
    out.n_ = n_ + other.n_;
    out.m1_ = (na * m1_ + nb * other.m1_) / n;
    out.m2_ = m2_ + other.m2_ + delta2 * na * nb / n;
    out.m3_ = m3_ + other.m3_ + delta * delta2 * na * nb * (na - nb) / (n * n) +
              3.0 * delta * (na * other.m2_ - nb * m2_) / n;
    out.m4_ = m4_ + other.m4_ +
              delta2 * delta2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
              6.0 * delta2 * (na * na * other.m2_ + nb * nb * m2_) / (n * n) +
              4.0 * delta * (na * other.m3_ - nb * m3_) / n;
    *this = out;
}

MomentEstimates MomentAccumulator::estimates() const {
    if (n_ < 4) {
        throw std::domain_error("sample_moments: need at least 4 values");
    }
    const double n = static_cast<double>(n_);
    MomentEstimates est;
    est.n = n_;
    est.mean = m1_;
    est.variance = m2_ / (n - 1.0);
    const double c2 = m2_ / n;  // biased central moments
    if (!(c2 > 0.0)) {
        throw std::domain_error("sample_moments: zero variance, kurtosis undefined");
    }
    const double c3 = m3_ / n;
    const double c4 = m4_ / n;
    est.skewness = c3 / std::pow(c2, 1.5);
    est.kurtosis = c4 / (c2 * c2);
    return est;
}

MomentEstimates sample_moments(std::span<const double> values) {
    MomentAccumulator acc;
    for (const double v : values) {
        acc.push(v);
    }
    return acc.estimates();
}

HistogramSpec::HistogramSpec(double lo_, double hi_, std::size_t bins_)
    : lo(lo_), hi(hi_), bins(bins_) {
    if (!(lo < hi)) {
        throw std::invalid_argument("HistogramSpec: lo must be below hi");
    }
    if (bins < 1) {
        throw std::invalid_argument("HistogramSpec: need at least one bin");
    }
}

double Histogram::bin_low(std::size_t i) const {
    return spec.lo + (spec.hi - spec.lo) * static_cast<double>(i) / static_cast<double>(spec.bins);
}

double Histogram::bin_high(std::size_t i) const {
    return spec.lo + (spec.hi - spec.lo) * static_cast<double>(i + 1) / static_cast<double>(spec.bins);
}

Histogram histogram(std::span<const double> values, const HistogramSpec& spec) {
    Histogram h{spec, std::vector<std::uint64_t>(spec.bins, 0), 0, 0};
    const double width = (spec.hi - spec.lo) / static_cast<double>(spec.bins);
    for (const double v : values) {
        if (v < spec.lo) {
            ++h.underflow;
        } else if (v > spec.hi || std::isnan(v)) {
            ++h.overflow;
        } else {
            auto idx = static_cast<std::size_t>((v - spec.lo) / width);
            if (idx >= spec.bins) {
                idx = spec.bins - 1;  // v == hi (or rounding at the edge): last bin is closed
            }
            ++h.counts[idx];
        }
    }
    return h;
}

}  // namespace tailcurve
