#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>

namespace rdmlab {

// Error taxonomy shared across modules. Each maps to one contract
// violation mode; everything else is a plain std::invalid_argument.

struct SingularConfiguration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StencilOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StepTooCoarse : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FactorialBudget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateWindow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  return fnv1a(&v, sizeof(v), h);
}

// Gaussian sampler with a fixed uniform-draw count per variate (two draws,
// Box-Muller, sine partner discarded). The fixed consumption keeps draws
// aligned per node when a probe field is restricted to a subset of nodes.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

  double next() {
    constexpr double two_pi = 6.283185307179586476925286766559;
    double u1 = uniform_();
    double u2 = uniform_();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

 private:
  double uniform_() {
    // (0, 1]; never 0 so the log above is finite.
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }
  std::mt19937_64 engine_;
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace rdmlab
