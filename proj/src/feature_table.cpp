#include "tcm/feature_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>

namespace tcm {

int FeatureTable::feature_index(const std::string& name) const {
    const auto it = std::find(feature_names.begin(), feature_names.end(), name);
    return it == feature_names.end() ? -1
                                     : static_cast<int>(it - feature_names.begin());
}

std::vector<double> FeatureTable::column(std::size_t j) const {
    std::vector<double> values(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) values[i] = rows[i][j];
    return values;
}

FeatureTable FeatureTable::select_features(const std::vector<std::string>& names) const {
    FeatureTable out;
    out.feature_names = names;
    out.labels = labels;
    std::vector<std::size_t> indices;
    indices.reserve(names.size());
    for (const std::string& name : names) {
        const int idx = feature_index(name);
        if (idx < 0) throw std::invalid_argument("select_features: unknown feature " + name);
        indices.push_back(static_cast<std::size_t>(idx));
    }
    out.rows.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<double> projected(indices.size());
        for (std::size_t j = 0; j < indices.size(); ++j) projected[j] = row[indices[j]];
        out.rows.push_back(std::move(projected));
    }
    return out;
}

FeatureTable FeatureTable::select_rows(const std::vector<std::size_t>& indices) const {
    FeatureTable out;
    out.feature_names = feature_names;
    out.rows.reserve(indices.size());
    out.labels.reserve(indices.size());
    for (const std::size_t i : indices) {
        out.rows.push_back(rows[i]);
        out.labels.push_back(labels[i]);
    }
    return out;
}

void FeatureTable::validate() const {
    if (rows.size() != labels.size())
        throw std::invalid_argument("FeatureTable: row/label count mismatch");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != feature_names.size())
            throw std::invalid_argument("FeatureTable: row " + std::to_string(i) +
                                        " has wrong width");
        for (const double v : rows[i])
            if (!std::isfinite(v))
                throw std::invalid_argument("FeatureTable: non-finite value in row " +
                                            std::to_string(i));
        if (labels[i] < 0 || labels[i] >= kNumClasses)
            throw std::invalid_argument("FeatureTable: label out of range in row " +
                                        std::to_string(i));
    }
}

void save_feature_table_csv(const FeatureTable& table, const std::filesystem::path& path,
                            const std::optional<std::string>& manifest_hash) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_feature_table_csv: cannot open " + path.string());
    if (manifest_hash) out << "# manifest_hash=" << *manifest_hash << '\n';
    for (std::size_t j = 0; j < table.feature_names.size(); ++j)
        out << table.feature_names[j] << ',';
    out << "label\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        for (const double v : table.rows[i]) out << format_double(v) << ',';
        out << table.labels[i] << '\n';
    }
}

FeatureTable load_feature_table_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_feature_table_csv: cannot open " + path.string());
    FeatureTable table;
    std::string line;
    bool have_header = false;
    std::size_t row_number = 0;
    while (std::getline(in, line)) {
        ++row_number;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> tokens;
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) comma = line.size();
            tokens.push_back(line.substr(start, comma - start));
            start = comma + 1;
            if (comma == line.size()) break;
        }
        if (!have_header) {
            if (tokens.empty() || tokens.back() != "label")
                throw std::runtime_error("load_feature_table_csv: header must end with 'label'");
            table.feature_names.assign(tokens.begin(), tokens.end() - 1);
            have_header = true;
            continue;
        }
        if (tokens.size() != table.feature_names.size() + 1)
            throw std::runtime_error("load_feature_table_csv: row " + std::to_string(row_number) +
                                     " has wrong width");
        std::vector<double> row(table.feature_names.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            char* end = nullptr;
            row[j] = std::strtod(tokens[j].c_str(), &end);
            if (end == tokens[j].c_str() || *end != '\0')
                throw std::runtime_error("load_feature_table_csv: bad value at row " +
                                         std::to_string(row_number));
        }
        table.rows.push_back(std::move(row));
        table.labels.push_back(std::atoi(tokens.back().c_str()));
    }
    if (!have_header) throw std::runtime_error("load_feature_table_csv: empty file");
    table.validate();
    return table;
}

}  // namespace tcm
