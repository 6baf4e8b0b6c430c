#ifndef TCM_FEATURES_HPP
#define TCM_FEATURES_HPP

#include <array>
#include <string>
#include <vector>

#include "tcm/feature_table.hpp"
#include "tcm/signal.hpp"

namespace tcm {

inline constexpr std::size_t kFeatureCount = 17;

// Canonical feature order; every feature table produced by this module uses
// exactly these names in exactly this order.
const std::array<std::string, kFeatureCount>& feature_names();

struct FeatureVector {
    std::array<double, kFeatureCount> values{};
    int label = 0;
    std::vector<std::string> warnings;  // degenerate-moment notes, empty normally

    double operator[](const std::string& name) const;
};

// The 17 time-domain statistics of one signal. Requires at least 2 points
// (sample variance is undefined below that). Degenerate inputs (zero spread,
// zero mean rectified amplitude) yield 0 for the affected ratio features and
// a warning entry instead of NaN.
FeatureVector extract_features(const SignalSample& sample);

// One row per sample, canonical column order, labels preserved. Errors from
// extract_features are rethrown with the sample index attached.
FeatureTable build_feature_table(const RawDataset& dataset);

}  // namespace tcm

#endif
