#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace toolctx {

// Paired observations matched by question id; differences are b - a.
struct PairedSample {
    std::vector<std::pair<double, double>> pairs;

    std::vector<double> differences() const;
};

struct WilcoxonResult {
    double statistic = 0.0;   // W = min(W+, W-)
    double p_value = 1.0;     // two-sided
    std::int64_t n_effective = 0;
    bool exact = false;
};

// Zero differences are dropped, ties get average ranks. Exact two-sided p
// from the signed-rank distribution when the effective n is <= 25, otherwise
// a normal approximation with tie and continuity corrections.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> differences);
WilcoxonResult wilcoxon_signed_rank(const PairedSample& sample);

// mean(diff) / sample sd(diff), n-1 denominator.
double cohens_d(std::span<const double> differences);
double cohens_d(const PairedSample& sample);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Percentile interval of the resampled mean difference; bit-reproducible
// for a given (sample order, seed).
Interval bootstrap_ci(std::span<const double> differences, int resamples = 10000,
                      std::uint64_t seed = 42, double level = 0.95);
Interval bootstrap_ci(const PairedSample& sample, int resamples = 10000,
                      std::uint64_t seed = 42, double level = 0.95);

double pearson_r(std::span<const double> xs, std::span<const double> ys);

// Effect-size label per the conventional 0.2 / 0.5 / 0.8 thresholds.
const char* effect_size_label(double d);

double normal_cdf(double z);

}  // namespace toolctx
