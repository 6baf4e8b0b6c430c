#ifndef TCM_COMMON_HPP
#define TCM_COMMON_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tcm {

inline constexpr int kNumClasses = 6;

// Tool-health class names, fixed order: normal, nose wear, notch wear,
// flank-face wear, crater wear, edge fracture.
inline const std::array<std::string, kNumClasses> kClassNames = {
    "NRML", "WNR", "WNT", "WFF", "WCRT", "WEGF"};

// splitmix64 finalizer; used to derive independent child seeds so that
// per-sample / per-stage RNG streams are reproducible regardless of
// execution order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x517cc1b727220a95ULL));
}

// Deterministic parallel map over [0, n): each index writes only its own
// slot, so results are identical to a sequential loop for any thread count.
// Thread count comes from TCM_THREADS, defaulting to hardware concurrency;
// TCM_THREADS=1 forces sequential execution.
std::size_t worker_count();

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&fn, w, workers, n] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        }));
    }
    for (auto& f : futures) f.get();
}

// Stratified k-fold assignment: returns for each fold the row indices it
// holds out. Per class, indices are shuffled with the seeded generator and
// dealt round-robin. Throws if any class has fewer than k samples.
std::vector<std::vector<std::size_t>> stratified_kfold(const std::vector<int>& labels,
                                                       int k, std::uint64_t seed);

// FNV-1a 64-bit over a byte string; used for artifact provenance hashes.
std::uint64_t fnv1a64(const std::string& bytes);
std::string to_hex(std::uint64_t value);

// Round-trip-exact decimal rendering of a double ("%.17g").
std::string format_double(double value);

}  // namespace tcm

#endif
