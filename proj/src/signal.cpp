#include "tcm/signal.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

namespace tcm {

namespace {

constexpr double kBurstCarrierMultiple = 6.0;  // burst ringing sits well above the base tone

double burst_envelope(double phase_samples, double width) {
    if (phase_samples < 0.0 || phase_samples >= width) return 0.0;
    const double u = phase_samples / width;
    const double s = std::sin(std::numbers::pi * u);
    return s * s;  // Hann-shaped burst
}

SignalSample synthesize_sample(const GeneratorConfig& config, int label,
                               std::uint64_t sample_index) {
    std::mt19937_64 rng(mix_seed(config.seed, sample_index));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const ClassSignature& sig = config.class_params[static_cast<std::size_t>(label)];
    const double dt = 1.0 / config.sampling_frequency_hz;
    const double omega_base = 2.0 * std::numbers::pi * config.base_frequency_hz;
    const double omega_burst = omega_base * kBurstCarrierMultiple;

    // Burst-train offset is drawn first so every sample stream consumes the
    // same draw sequence; when modulation_depth is zero it has no effect.
    double offset = 0.0;
    if (sig.burst_period >= 1.0) offset = uniform(rng) * sig.burst_period;

    SignalSample sample;
    sample.label = label;
    sample.amplitude.resize(config.sample_length);
    for (std::size_t t = 0; t < config.sample_length; ++t) {
        const double time = static_cast<double>(t) * dt;
        double value = sig.amplitude * std::sin(omega_base * time);
        if (sig.modulation_depth != 0.0 && sig.burst_period >= 1.0 && sig.burst_width > 0.0) {
            const double phase =
                std::fmod(static_cast<double>(t) + offset, sig.burst_period);
            const double envelope = burst_envelope(phase, sig.burst_width);
            if (envelope > 0.0)
                value += sig.modulation_depth * envelope * std::sin(omega_burst * time);
        }
        value += config.noise_sigma * gauss(rng);
        sample.amplitude[t] = value;
    }
    return sample;
}

int parse_label(const std::string& token, std::size_t row) {
    std::size_t pos = 0;
    int label = 0;
    try {
        label = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("load_signals: row " + std::to_string(row) +
                                 ": unknown label '" + token + "'");
    }
    if (pos != token.size() || label < 0 || label >= kNumClasses)
        throw std::runtime_error("load_signals: row " + std::to_string(row) +
                                 ": unknown label '" + token + "'");
    return label;
}

}  // namespace

void GeneratorConfig::validate() const {
    if (samples_per_class < 1)
        throw std::invalid_argument("GeneratorConfig: samples_per_class must be >= 1");
    if (sample_length < 64)
        throw std::invalid_argument("GeneratorConfig: sample_length must be >= 64");
    if (sampling_frequency_hz <= 0.0)
        throw std::invalid_argument("GeneratorConfig: sampling_frequency_hz must be positive");
    if (base_frequency_hz <= 0.0)
        throw std::invalid_argument("GeneratorConfig: base_frequency_hz must be positive");
    if (noise_sigma < 0.0)
        throw std::invalid_argument("GeneratorConfig: noise_sigma must be non-negative");
    for (int a = 0; a < kNumClasses; ++a)
        for (int b = a + 1; b < kNumClasses; ++b)
            if (class_params[a] == class_params[b])
                throw std::invalid_argument("GeneratorConfig: class signatures " +
                                            std::to_string(a) + " and " + std::to_string(b) +
                                            " are identical");
}

GeneratorConfig default_generator_config() {
    GeneratorConfig config;
    config.class_params = {{
        {1.00, 0.0, 0.0, 0.0},     // NRML: low-amplitude uniform tone
        {1.00, 256.0, 32.0, 2.0},  // WNR
        {1.10, 192.0, 48.0, 2.5},  // WNT
        {0.95, 320.0, 64.0, 3.0},  // WFF
        {1.20, 160.0, 24.0, 2.2},  // WCRT
        {0.90, 384.0, 20.0, 4.0},  // WEGF
    }};
    return config;
}

RawDataset generate_synthetic_dataset(const GeneratorConfig& config) {
    config.validate();
    RawDataset dataset;
    dataset.sample_length = config.sample_length;
    dataset.sampling_frequency_hz = config.sampling_frequency_hz;
    const std::size_t total = config.samples_per_class * kNumClasses;
    dataset.samples.resize(total);
    parallel_for(total, [&](std::size_t k) {
        const int label = static_cast<int>(k / config.samples_per_class);
        dataset.samples[k] = synthesize_sample(config, label, k);
    });
    return dataset;
}

RawDataset load_signals(const std::filesystem::path& path, std::size_t sample_length) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_signals: cannot open " + path.string());

    RawDataset dataset;
    dataset.sample_length = sample_length;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        SignalSample sample;
        sample.amplitude.reserve(sample_length);
        std::size_t start = 0;
        bool first = true;
        while (start <= line.size()) {
            std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) comma = line.size();
            const std::string token = line.substr(start, comma - start);
            if (first) {
                sample.label = parse_label(token, row);
                first = false;
            } else {
                char* end = nullptr;
                const double value = std::strtod(token.c_str(), &end);
                if (end == token.c_str() || *end != '\0')
                    throw std::runtime_error("load_signals: row " + std::to_string(row) +
                                             ": bad value '" + token + "'");
                sample.amplitude.push_back(value);
            }
            start = comma + 1;
            if (comma == line.size()) break;
        }
        if (sample.amplitude.size() != sample_length)
            throw std::runtime_error("load_signals: row " + std::to_string(row) + ": expected " +
                                     std::to_string(sample_length) + " values, got " +
                                     std::to_string(sample.amplitude.size()));
        dataset.samples.push_back(std::move(sample));
    }
    return dataset;
}

void save_signals(const RawDataset& dataset, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_signals: cannot open " + path.string());
    for (const SignalSample& sample : dataset.samples) {
        out << sample.label;
        for (const double value : sample.amplitude) out << ',' << format_double(value);
        out << '\n';
    }
}

nlohmann::json generator_config_to_json(const GeneratorConfig& config) {
    nlohmann::json params = nlohmann::json::array();
    for (const ClassSignature& sig : config.class_params) {
        params.push_back({{"amplitude", sig.amplitude},
                          {"burst_period", sig.burst_period},
                          {"burst_width", sig.burst_width},
                          {"modulation_depth", sig.modulation_depth}});
    }
    return {{"samples_per_class", config.samples_per_class},
            {"sample_length", config.sample_length},
            {"seed", config.seed},
            {"sampling_frequency_hz", config.sampling_frequency_hz},
            {"base_frequency_hz", config.base_frequency_hz},
            {"noise_sigma", config.noise_sigma},
            {"class_params", params}};
}

GeneratorConfig generator_config_from_json(const nlohmann::json& j) {
    GeneratorConfig config = default_generator_config();
    config.samples_per_class = j.value("samples_per_class", config.samples_per_class);
    config.sample_length = j.value("sample_length", config.sample_length);
    config.seed = j.value("seed", config.seed);
    config.sampling_frequency_hz = j.value("sampling_frequency_hz", config.sampling_frequency_hz);
    config.base_frequency_hz = j.value("base_frequency_hz", config.base_frequency_hz);
    config.noise_sigma = j.value("noise_sigma", config.noise_sigma);
    if (j.contains("class_params")) {
        const auto& params = j.at("class_params");
        if (params.size() != kNumClasses)
            throw std::invalid_argument("generator config: class_params needs 6 entries");
        for (int c = 0; c < kNumClasses; ++c) {
            const auto& p = params[static_cast<std::size_t>(c)];
            ClassSignature& sig = config.class_params[static_cast<std::size_t>(c)];
            sig.amplitude = p.value("amplitude", sig.amplitude);
            sig.burst_period = p.value("burst_period", sig.burst_period);
            sig.burst_width = p.value("burst_width", sig.burst_width);
            sig.modulation_depth = p.value("modulation_depth", sig.modulation_depth);
        }
    }
    return config;
}

}  // namespace tcm
