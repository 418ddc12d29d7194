#pragma once

// Counter-based random streams. Every deviate is a pure function of
// (seed, stream id, substream id, position), so Monte Carlo results do not
// depend on how trials are scheduled across threads.

#include <array>
#include <cstdint>
#include <limits>

namespace spharea {

/// Philox4x32-10 block function (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) noexcept;

/// SplitMix64 finalizer; used to derive stream ids from structured keys.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Sequential generator over one (seed, stream, substream) triple.
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint32_t substream) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform deviate in [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_{};
  int used_ = 4;
};

/// Handle naming one independent stream; trial j of the stream draws from
/// `trial(j)`.
class RngStream {
 public:
  constexpr RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t id() const noexcept { return stream_id_; }

  CounterRng trial(std::uint32_t j) const noexcept {
    return CounterRng(seed_, stream_id_, j);
  }

  /// Derived stream whose id is a hash of this id and `key`.
  RngStream child(std::uint64_t key) const noexcept {
    return RngStream(seed_, mix64(mix64(stream_id_) ^ key));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
};

}  // namespace spharea
