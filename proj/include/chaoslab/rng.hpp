#pragma once

#include <cstdint>

namespace chaoslab {

// Counter-based generator. The k-th output (k = 1, 2, ...) is
//
//     out_k = mix64(key + k * 0x9e3779b97f4a7c15)
//
// where mix64 is the splitmix64 finalizer
//
//     z ^= z >> 30;  z *= 0xbf58476d1ce4e5b9;
//     z ^= z >> 27;  z *= 0x94d049bb133111eb;
//     z ^= z >> 31;
//
// These constants are the whole contract: any language can reproduce the
// streams from them. Worker streams are derived with seed_split below.

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// seed_split(m, i) != seed_split(m, j) for i != j: mix64 is a bijection and
// the inputs m + (i+1)*kGolden are distinct for i < 2^63.
inline std::uint64_t seed_split(std::uint64_t master, std::uint64_t index) {
  return mix64(master + (index + 1) * kGolden);
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

  // uniform on [0, 1), 53 random bits
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform on [-1, 1)
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace chaoslab
