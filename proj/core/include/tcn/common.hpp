#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace tcn {

inline constexpr int kGlyphSize = 128;   // canvas edge, pixels
inline constexpr int kInnerBox = 112;    // glyph bbox fits this box, 8 px margin
inline constexpr int kLatentDim = 256;

// ink is 0.0, background is 1.0 (black-on-white)
inline constexpr float kInk = 0.0f;
inline constexpr float kBackground = 1.0f;

enum class ErrorCategory {
  kConfigParse,
  kData,
  kMissingGlyph,
  kCheckpoint,
  kMismatch,
  kDiverged,
  kIo,
  kInternal,
};

const char* to_string(ErrorCategory c);

class TcnError : public std::runtime_error {
 public:
  TcnError(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}
  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

// Seeded RNG used by all sampling code; torch has its own generator.
using Rng = std::mt19937_64;

inline Rng make_rng(uint64_t seed) { return Rng(seed); }

// Derive an independent stream from a base seed (workers, sub-stages).
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
  uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL + stream * 0xbf58476d1ce4e5b9ULL);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// FNV-1a, used for trace digests.
inline uint64_t fnv1a(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline uint64_t fnv1a(const std::string& s, uint64_t h = 0xcbf29ce484222325ULL) {
  return fnv1a(s.data(), s.size(), h);
}

// Pins interop threads once; safe to call repeatedly.
void runtime_init();

}  // namespace tcn
