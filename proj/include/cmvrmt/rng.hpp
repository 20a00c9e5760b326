#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace cmvrmt {

/// Philox4x32-10 counter-based generator. The key is the 64-bit seed; the high
/// half of the 128-bit counter holds the stream (job) index, the low half the
/// block position. Distinct (seed, stream) pairs give independent streams.
class Philox4x32 {
 public:
  using result_type = std::uint32_t;

  Philox4x32(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// Raw block function, exposed for known-answer tests.
  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key);

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> ctr_;
  std::array<std::uint32_t, 4> buf_{};
  int idx_ = 4;
};

using Rng = Philox4x32;

/// Independent stream for job `job` under `seed`.
inline Rng make_stream(std::uint64_t seed, std::uint64_t job) { return Rng(seed, job); }

}  // namespace cmvrmt
