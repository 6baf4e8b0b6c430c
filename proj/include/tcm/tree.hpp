#ifndef TCM_TREE_HPP
#define TCM_TREE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcm/feature_table.hpp"

namespace tcm {

struct TreeParams {
    int max_depth = 8;
    int min_samples_split = 2;
    std::uint64_t seed = 0;

    void validate() const;
};

struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double gain = 0.0;           // information gain of the split, 0 for leaves
    std::vector<double> counts;  // per-class training sample counts at this node
};

// Axis-aligned binary classification tree, split on entropy information gain.
struct DecisionTreeModel {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    std::vector<std::string> feature_names;
    int n_classes = 0;
    std::size_t n_train = 0;

    bool is_leaf(int node) const { return nodes[static_cast<std::size_t>(node)].feature < 0; }
    std::vector<double> class_priors() const;  // root distribution, sums to 1
    std::vector<double> node_probabilities(int node) const;
};

struct TreePrediction {
    int label = 0;
    std::vector<double> probabilities;
};

// Greedy top-down induction. Candidate thresholds are midpoints between
// consecutive distinct sorted values; features are evaluated in a freshly
// seeded random order at every split, and only a strictly larger gain
// displaces the incumbent, so ties resolve to the earlier feature in that
// order and to the lower threshold within a feature.
// n_classes = 0 infers max(label)+1 from the table.
DecisionTreeModel fit_tree(const FeatureTable& table, const TreeParams& params,
                           int n_classes = 0);

TreePrediction predict_tree(const DecisionTreeModel& model, const std::vector<double>& x);

// Node indices visited from root to leaf, inclusive.
std::vector<int> decision_path(const DecisionTreeModel& model, const std::vector<double>& x);

// Impurity-decrease importances normalised to sum 1; all zeros when the tree
// never split.
std::vector<double> feature_importances(const DecisionTreeModel& model);

double tree_accuracy(const DecisionTreeModel& model, const FeatureTable& table);

nlohmann::json tree_to_json(const DecisionTreeModel& model);
DecisionTreeModel tree_from_json(const nlohmann::json& j);

// Indented if/else rule listing for the white-box reports.
std::string render_tree_rules(const DecisionTreeModel& model,
                              const std::vector<std::string>& class_names);

}  // namespace tcm

#endif
