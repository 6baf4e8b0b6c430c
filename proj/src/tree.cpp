#include "tcm/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace tcm {

namespace {

double entropy(const std::vector<double>& counts, double total) {
    if (total <= 0.0) return 0.0;
    double h = 0.0;
    for (const double c : counts) {
        if (c <= 0.0) continue;
        const double p = c / total;
        h -= p * std::log2(p);
    }
    return h;
}

struct SplitCandidate {
    bool found = false;
    int feature = -1;
    double threshold = 0.0;
    double gain = 0.0;
};

class TreeBuilder {
  public:
    TreeBuilder(const FeatureTable& table, const TreeParams& params, int n_classes)
        : table_(table), params_(params), n_classes_(n_classes), rng_(params.seed) {}

    DecisionTreeModel build() {
        DecisionTreeModel model;
        model.feature_names = table_.feature_names;
        model.n_classes = n_classes_;
        model.n_train = table_.n_rows();
        std::vector<std::size_t> all(table_.n_rows());
        std::iota(all.begin(), all.end(), 0);
        grow(model, all, 0);
        return model;
    }

  private:
    int grow(DecisionTreeModel& model, const std::vector<std::size_t>& indices, int depth) {
        const int node_id = static_cast<int>(model.nodes.size());
        model.nodes.emplace_back();
        model.nodes.back().counts = class_counts(indices);

        const bool pure = is_pure(model.nodes.back().counts);
        if (pure || depth >= params_.max_depth ||
            indices.size() < static_cast<std::size_t>(params_.min_samples_split))
            return node_id;

        const SplitCandidate split = best_split(indices, model.nodes.back().counts);
        if (!split.found) return node_id;

        std::vector<std::size_t> left, right;
        for (const std::size_t i : indices) {
            if (table_.rows[i][static_cast<std::size_t>(split.feature)] <= split.threshold)
                left.push_back(i);
            else
                right.push_back(i);
        }
        model.nodes[static_cast<std::size_t>(node_id)].feature = split.feature;
        model.nodes[static_cast<std::size_t>(node_id)].threshold = split.threshold;
        model.nodes[static_cast<std::size_t>(node_id)].gain = split.gain;
        const int left_id = grow(model, left, depth + 1);
        model.nodes[static_cast<std::size_t>(node_id)].left = left_id;
        const int right_id = grow(model, right, depth + 1);
        model.nodes[static_cast<std::size_t>(node_id)].right = right_id;
        return node_id;
    }

    std::vector<double> class_counts(const std::vector<std::size_t>& indices) const {
        std::vector<double> counts(static_cast<std::size_t>(n_classes_), 0.0);
        for (const std::size_t i : indices)
            counts[static_cast<std::size_t>(table_.labels[i])] += 1.0;
        return counts;
    }

    static bool is_pure(const std::vector<double>& counts) {
        int nonzero = 0;
        for (const double c : counts)
            if (c > 0.0) ++nonzero;
        return nonzero <= 1;
    }

    SplitCandidate best_split(const std::vector<std::size_t>& indices,
                              const std::vector<double>& parent_counts) {
        const double total = static_cast<double>(indices.size());
        const double parent_entropy = entropy(parent_counts, total);

        std::vector<int> feature_order(table_.n_features());
        std::iota(feature_order.begin(), feature_order.end(), 0);
        std::shuffle(feature_order.begin(), feature_order.end(), rng_);

        SplitCandidate best;
        std::vector<std::size_t> sorted(indices);
        for (const int f : feature_order) {
            std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
                return table_.rows[a][static_cast<std::size_t>(f)] <
                       table_.rows[b][static_cast<std::size_t>(f)];
            });
            std::vector<double> left_counts(static_cast<std::size_t>(n_classes_), 0.0);
            std::vector<double> right_counts = parent_counts;
            for (std::size_t pos = 0; pos + 1 < sorted.size(); ++pos) {
                const std::size_t row = sorted[pos];
                const double value = table_.rows[row][static_cast<std::size_t>(f)];
                const double next = table_.rows[sorted[pos + 1]][static_cast<std::size_t>(f)];
                left_counts[static_cast<std::size_t>(table_.labels[row])] += 1.0;
                right_counts[static_cast<std::size_t>(table_.labels[row])] -= 1.0;
                if (value == next) continue;
                const double n_left = static_cast<double>(pos + 1);
                const double n_right = total - n_left;
                const double gain = parent_entropy -
                                    (n_left / total) * entropy(left_counts, n_left) -
                                    (n_right / total) * entropy(right_counts, n_right);
                if (gain > best.gain || (!best.found && gain > 0.0)) {
                    best.found = true;
                    best.feature = f;
                    best.threshold = 0.5 * (value + next);
                    best.gain = gain;
                }
            }
        }
        return best;
    }

    const FeatureTable& table_;
    const TreeParams& params_;
    int n_classes_;
    std::mt19937_64 rng_;
};

int leaf_for(const DecisionTreeModel& model, const std::vector<double>& x) {
    if (x.size() != model.feature_names.size())
        throw std::invalid_argument("predict_tree: expected " +
                                    std::to_string(model.feature_names.size()) +
                                    " features, got " + std::to_string(x.size()));
    int node = 0;
    while (!model.is_leaf(node)) {
        const TreeNode& n = model.nodes[static_cast<std::size_t>(node)];
        node = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
    }
    return node;
}

}  // namespace

void TreeParams::validate() const {
    if (max_depth < 1) throw std::invalid_argument("TreeParams: max_depth must be >= 1");
    if (min_samples_split < 2)
        throw std::invalid_argument("TreeParams: min_samples_split must be >= 2");
}

std::vector<double> DecisionTreeModel::class_priors() const { return node_probabilities(0); }

std::vector<double> DecisionTreeModel::node_probabilities(int node) const {
    const std::vector<double>& counts = nodes[static_cast<std::size_t>(node)].counts;
    const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    std::vector<double> probs(counts.size(), 0.0);
    if (total > 0.0)
        for (std::size_t c = 0; c < counts.size(); ++c) probs[c] = counts[c] / total;
    return probs;
}

DecisionTreeModel fit_tree(const FeatureTable& table, const TreeParams& params, int n_classes) {
    params.validate();
    if (table.n_rows() == 0) throw std::invalid_argument("fit_tree: empty table");
    if (table.n_features() == 0) throw std::invalid_argument("fit_tree: no features");
    if (n_classes == 0)
        n_classes = *std::max_element(table.labels.begin(), table.labels.end()) + 1;
    return TreeBuilder(table, params, n_classes).build();
}

TreePrediction predict_tree(const DecisionTreeModel& model, const std::vector<double>& x) {
    const int leaf = leaf_for(model, x);
    TreePrediction pred;
    pred.probabilities = model.node_probabilities(leaf);
    pred.label = static_cast<int>(std::max_element(pred.probabilities.begin(),
                                                   pred.probabilities.end()) -
                                  pred.probabilities.begin());
    return pred;
}

std::vector<int> decision_path(const DecisionTreeModel& model, const std::vector<double>& x) {
    if (x.size() != model.feature_names.size())
        throw std::invalid_argument("decision_path: feature count mismatch");
    std::vector<int> path{0};
    int node = 0;
    while (!model.is_leaf(node)) {
        const TreeNode& n = model.nodes[static_cast<std::size_t>(node)];
        node = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
        path.push_back(node);
    }
    return path;
}

std::vector<double> feature_importances(const DecisionTreeModel& model) {
    std::vector<double> importances(model.feature_names.size(), 0.0);
    const double n_total = static_cast<double>(model.n_train);
    for (const TreeNode& node : model.nodes) {
        if (node.feature < 0) continue;
        const double n_node = std::accumulate(node.counts.begin(), node.counts.end(), 0.0);
        importances[static_cast<std::size_t>(node.feature)] += (n_node / n_total) * node.gain;
    }
    const double total = std::accumulate(importances.begin(), importances.end(), 0.0);
    if (total > 0.0)
        for (double& v : importances) v /= total;
    return importances;
}

double tree_accuracy(const DecisionTreeModel& model, const FeatureTable& table) {
    if (table.n_rows() == 0) throw std::invalid_argument("tree_accuracy: empty table");
    std::size_t correct = 0;
    for (std::size_t i = 0; i < table.n_rows(); ++i)
        if (predict_tree(model, table.rows[i]).label == table.labels[i]) ++correct;
    return static_cast<double>(correct) / static_cast<double>(table.n_rows());
}

nlohmann::json tree_to_json(const DecisionTreeModel& model) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const TreeNode& node : model.nodes) {
        nodes.push_back({{"feature", node.feature},
                         {"threshold", node.threshold},
                         {"left", node.left},
                         {"right", node.right},
                         {"gain", node.gain},
                         {"counts", node.counts}});
    }
    return {{"nodes", nodes},
            {"feature_names", model.feature_names},
            {"n_classes", model.n_classes},
            {"n_train", model.n_train}};
}

DecisionTreeModel tree_from_json(const nlohmann::json& j) {
    DecisionTreeModel model;
    model.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    model.n_classes = j.at("n_classes").get<int>();
    model.n_train = j.at("n_train").get<std::size_t>();
    for (const auto& n : j.at("nodes")) {
        TreeNode node;
        node.feature = n.at("feature").get<int>();
        node.threshold = n.at("threshold").get<double>();
        node.left = n.at("left").get<int>();
        node.right = n.at("right").get<int>();
        node.gain = n.at("gain").get<double>();
        node.counts = n.at("counts").get<std::vector<double>>();
        model.nodes.push_back(std::move(node));
    }
    return model;
}

namespace {

void render_node(const DecisionTreeModel& model, int node, int indent,
                 const std::vector<std::string>& class_names, std::ostringstream& out) {
    const TreeNode& n = model.nodes[static_cast<std::size_t>(node)];
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (n.feature < 0) {
        const std::vector<double> probs = model.node_probabilities(node);
        const int label = static_cast<int>(std::max_element(probs.begin(), probs.end()) -
                                           probs.begin());
        out << pad << "class: "
            << (label < static_cast<int>(class_names.size())
                    ? class_names[static_cast<std::size_t>(label)]
                    : std::to_string(label));
        out << " (p=";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f", probs[static_cast<std::size_t>(label)]);
        out << buf << ", n=" << std::accumulate(n.counts.begin(), n.counts.end(), 0.0) << ")\n";
        return;
    }
    out << pad << "if " << model.feature_names[static_cast<std::size_t>(n.feature)]
        << " <= " << format_double(n.threshold) << ":\n";
    render_node(model, n.left, indent + 1, class_names, out);
    out << pad << "else:\n";
    render_node(model, n.right, indent + 1, class_names, out);
}

}  // namespace

std::string render_tree_rules(const DecisionTreeModel& model,
                              const std::vector<std::string>& class_names) {
    std::ostringstream out;
    render_node(model, 0, 0, class_names, out);
    return out.str();
}

}  // namespace tcm
