#include "tcm/common.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>

namespace tcm {

std::size_t worker_count() {
    static const std::size_t count = [] {
        if (const char* env = std::getenv("TCM_THREADS")) {
            const long parsed = std::strtol(env, nullptr, 10);
            if (parsed >= 1) return static_cast<std::size_t>(parsed);
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return static_cast<std::size_t>(hw == 0 ? 1 : hw);
    }();
    return count;
}

std::vector<std::vector<std::size_t>> stratified_kfold(const std::vector<int>& labels,
                                                       int k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("stratified_kfold: k must be >= 2");
    std::vector<std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const int label = labels[i];
        if (label < 0) throw std::invalid_argument("stratified_kfold: negative label");
        if (static_cast<std::size_t>(label) >= by_class.size())
            by_class.resize(static_cast<std::size_t>(label) + 1);
        by_class[static_cast<std::size_t>(label)].push_back(i);
    }
    for (std::size_t c = 0; c < by_class.size(); ++c) {
        if (!by_class[c].empty() && by_class[c].size() < static_cast<std::size_t>(k))
            throw std::invalid_argument("stratified_kfold: class " + std::to_string(c) +
                                        " has fewer samples than folds");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::size_t>> folds(static_cast<std::size_t>(k));
    for (auto& members : by_class) {
        std::shuffle(members.begin(), members.end(), rng);
        for (std::size_t j = 0; j < members.size(); ++j)
            folds[j % static_cast<std::size_t>(k)].push_back(members[j]);
    }
    for (auto& fold : folds) std::sort(fold.begin(), fold.end());
    return folds;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : bytes) {
        hash ^= ch;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string to_hex(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return std::string(buf);
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return std::string(buf);
}

}  // namespace tcm
