#include "tcm/features.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tcm {

const std::array<std::string, kFeatureCount>& feature_names() {
    static const std::array<std::string, kFeatureCount> names = {
        "mean",       "median",       "mode",     "sd",           "variance",
        "kurtosis",   "skewness",     "max",      "min",          "range",
        "sum",        "rms",          "shape_factor", "k_factor", "std_error",
        "crest_factor", "impulse_factor"};
    return names;
}

double FeatureVector::operator[](const std::string& name) const {
    const auto& names = feature_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return values[i];
    throw std::invalid_argument("FeatureVector: unknown feature " + name);
}

namespace {

constexpr int kModeBins = 64;

double histogram_mode(const std::vector<double>& x, double lo, double hi) {
    if (hi <= lo) return lo;  // constant signal: the single value is the mode
    std::array<int, kModeBins> counts{};
    const double width = (hi - lo) / kModeBins;
    for (const double v : x) {
        int bin = static_cast<int>((v - lo) / width);
        bin = std::clamp(bin, 0, kModeBins - 1);
        ++counts[static_cast<std::size_t>(bin)];
    }
    int best = 0;
    for (int b = 1; b < kModeBins; ++b)
        if (counts[static_cast<std::size_t>(b)] > counts[static_cast<std::size_t>(best)]) best = b;
    return lo + (static_cast<double>(best) + 0.5) * width;
}

double median_of(std::vector<double> sorted) {
    const std::size_t n = sorted.size();
    std::sort(sorted.begin(), sorted.end());
    return n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

}  // namespace

FeatureVector extract_features(const SignalSample& sample) {
    const std::vector<double>& x = sample.amplitude;
    const std::size_t n = x.size();
    if (n < 2)
        throw std::invalid_argument("extract_features: need at least 2 points, got " +
                                    std::to_string(n));

    const double dn = static_cast<double>(n);
    const double sum = std::accumulate(x.begin(), x.end(), 0.0);
    const double mean = sum / dn;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0, sum_sq = 0.0, sum_abs = 0.0;
    double max_v = x[0], min_v = x[0], max_abs = std::abs(x[0]);
    for (const double v : x) {
        const double d = v - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
        sum_sq += v * v;
        sum_abs += std::abs(v);
        max_v = std::max(max_v, v);
        min_v = std::min(min_v, v);
        max_abs = std::max(max_abs, std::abs(v));
    }
    const double variance = m2 / (dn - 1.0);  // sample variance, n-1 denominator
    const double sd = std::sqrt(variance);
    m2 /= dn;
    m3 /= dn;
    m4 /= dn;
    const double rms = std::sqrt(sum_sq / dn);
    const double mean_abs = sum_abs / dn;

    FeatureVector fv;
    fv.label = sample.label;

    double kurtosis = 0.0, skewness = 0.0;
    if (m2 > 0.0) {
        kurtosis = m4 / (m2 * m2);
        skewness = m3 / std::pow(m2, 1.5);
    } else {
        fv.warnings.push_back("zero spread: kurtosis/skewness set to 0");
    }

    double shape_factor = 0.0, impulse_factor = 0.0;
    if (mean_abs > 0.0) {
        shape_factor = rms / mean_abs;
        impulse_factor = max_abs / mean_abs;
    } else {
        fv.warnings.push_back("zero rectified mean: shape/impulse factor set to 0");
    }
    double crest_factor = 0.0;
    if (rms > 0.0) {
        crest_factor = max_abs / rms;
    } else if (mean_abs == 0.0) {
        fv.warnings.push_back("zero rms: crest factor set to 0");
    }

    fv.values = {mean,
                 median_of(x),
                 histogram_mode(x, min_v, max_v),
                 sd,
                 variance,
                 kurtosis,
                 skewness,
                 max_v,
                 min_v,
                 max_v - min_v,
                 sum,
                 rms,
                 shape_factor,
                 max_abs * rms,  // k-factor
                 sd / std::sqrt(dn),
                 crest_factor,
                 impulse_factor};
    return fv;
}

FeatureTable build_feature_table(const RawDataset& dataset) {
    if (dataset.samples.empty())
        throw std::invalid_argument("build_feature_table: empty dataset");
    FeatureTable table;
    table.feature_names.assign(feature_names().begin(), feature_names().end());
    table.rows.resize(dataset.samples.size());
    table.labels.resize(dataset.samples.size());
    std::vector<std::string> errors(dataset.samples.size());
    parallel_for(dataset.samples.size(), [&](std::size_t i) {
        try {
            const FeatureVector fv = extract_features(dataset.samples[i]);
            table.rows[i].assign(fv.values.begin(), fv.values.end());
            table.labels[i] = fv.label;
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty())
            throw std::runtime_error("build_feature_table: sample " + std::to_string(i) + ": " +
                                     errors[i]);
    table.validate();
    return table;
}

}  // namespace tcm
