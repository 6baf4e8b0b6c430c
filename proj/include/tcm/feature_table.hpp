#ifndef TCM_FEATURE_TABLE_HPP
#define TCM_FEATURE_TABLE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tcm/common.hpp"

namespace tcm {

// The unit flowing through selection, scaling, and training: a rectangular
// matrix of named feature columns plus one class label per row.
struct FeatureTable {
    std::vector<std::string> feature_names;
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_features() const { return feature_names.size(); }

    int feature_index(const std::string& name) const;
    std::vector<double> column(std::size_t j) const;

    // Projection onto a subset of columns, in the order given.
    FeatureTable select_features(const std::vector<std::string>& names) const;
    FeatureTable select_rows(const std::vector<std::size_t>& indices) const;

    // Rectangular, finite, labels in [0, kNumClasses). Throws on violation.
    void validate() const;
};

// CSV layout: optional `# key=value` comment lines, then a header row of
// feature names plus `label`, then one data row per sample.
void save_feature_table_csv(const FeatureTable& table, const std::filesystem::path& path,
                            const std::optional<std::string>& manifest_hash = std::nullopt);
FeatureTable load_feature_table_csv(const std::filesystem::path& path);

}  // namespace tcm

#endif
