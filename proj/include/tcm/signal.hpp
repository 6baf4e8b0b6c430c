#ifndef TCM_SIGNAL_HPP
#define TCM_SIGNAL_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcm/common.hpp"

namespace tcm {

struct SignalSample {
    int label = 0;
    std::vector<double> amplitude;
};

// Time-domain signature of one tool-health class: a base sinusoid plus an
// optional periodic burst train. modulation_depth = 0 disables the bursts,
// which is how the healthy class is modelled.
struct ClassSignature {
    double amplitude = 1.0;
    double burst_period = 0.0;      // samples between burst onsets
    double burst_width = 0.0;       // samples per burst
    double modulation_depth = 0.0;  // burst amplitude relative to the base signal

    bool operator==(const ClassSignature&) const = default;
};

struct GeneratorConfig {
    std::size_t samples_per_class = 50;
    std::size_t sample_length = 2048;
    std::uint64_t seed = 0;
    double sampling_frequency_hz = 20000.0;
    double base_frequency_hz = 120.0;
    double noise_sigma = 0.3;
    std::array<ClassSignature, kNumClasses> class_params{};

    // Throws std::invalid_argument on non-positive counts, sample_length < 64,
    // or duplicated class signatures.
    void validate() const;
};

GeneratorConfig default_generator_config();

struct RawDataset {
    std::vector<SignalSample> samples;
    std::size_t sample_length = 0;
    double sampling_frequency_hz = 0.0;
    std::array<std::string, kNumClasses> class_names = kClassNames;
};

// Deterministic in the config (including the seed). Samples are produced from
// independent per-sample RNG streams, so parallel generation matches the
// sequential result bit for bit.
RawDataset generate_synthetic_dataset(const GeneratorConfig& config);

// CSV rows are `label,a_0,...,a_{L-1}` with no header. Errors carry the
// offending 1-based row number.
RawDataset load_signals(const std::filesystem::path& path, std::size_t sample_length);
void save_signals(const RawDataset& dataset, const std::filesystem::path& path);

nlohmann::json generator_config_to_json(const GeneratorConfig& config);
GeneratorConfig generator_config_from_json(const nlohmann::json& j);

}  // namespace tcm

#endif
