#ifndef CFDIS_COMMON_HPP
#define CFDIS_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cfdis {

// ---------------------------------------------------------------------------
// Error types. Every failure mode carries its own type so callers can react
// to (and tests can assert on) the precise condition.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define CFDIS_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                            \
    explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
  }

CFDIS_DEFINE_ERROR(DimensionMismatch);
CFDIS_DEFINE_ERROR(DegenerateMasks);
CFDIS_DEFINE_ERROR(InvalidPolicy);
CFDIS_DEFINE_ERROR(InvalidTarget);
CFDIS_DEFINE_ERROR(EmptyBlock);
CFDIS_DEFINE_ERROR(ArchitectureMismatch);
CFDIS_DEFINE_ERROR(MissingClassifierHead);
CFDIS_DEFINE_ERROR(TooFewBlocks);
CFDIS_DEFINE_ERROR(DegenerateGroundTruth);
CFDIS_DEFINE_ERROR(EmptySampleSet);
CFDIS_DEFINE_ERROR(InvalidDescriptor);
CFDIS_DEFINE_ERROR(DuplicateToken);
CFDIS_DEFINE_ERROR(CorruptSnapshot);
CFDIS_DEFINE_ERROR(LengthMismatch);
CFDIS_DEFINE_ERROR(NonDistribution);
CFDIS_DEFINE_ERROR(ShapeMismatch);
CFDIS_DEFINE_ERROR(InvalidBlock);
CFDIS_DEFINE_ERROR(InvalidF);
CFDIS_DEFINE_ERROR(EmptyTask);
CFDIS_DEFINE_ERROR(DivergedTraining);
CFDIS_DEFINE_ERROR(ManifestParseError);
CFDIS_DEFINE_ERROR(MissingImage);
CFDIS_DEFINE_ERROR(UnknownShape);
CFDIS_DEFINE_ERROR(OverlappingClasses);
CFDIS_DEFINE_ERROR(MissingClass);
CFDIS_DEFINE_ERROR(EmptyCorpus);
CFDIS_DEFINE_ERROR(CorpusTooSmall);
CFDIS_DEFINE_ERROR(IoError);
CFDIS_DEFINE_ERROR(ConfigError);

#undef CFDIS_DEFINE_ERROR

// ---------------------------------------------------------------------------
// Deterministic RNG. All stochastic choices in the project derive from a
// root seed plus a string tag, so repeated runs with the same seed are
// bit-identical and independent subsystems never share a stream.
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Derive an independent stream seed from (seed, tag).
inline std::uint64_t seed_for(std::uint64_t seed, std::string_view tag) {
  return splitmix64(seed ^ splitmix64(fnv1a(tag)));
}

// Small PRNG wrapper. Gaussian sampling is hand-rolled (Box-Muller) so the
// sequence does not depend on the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(splitmix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

  std::uint64_t next_u64() {
    state_ = splitmix64(state_ + 0x9e3779b97f4a7c15ULL);
    return state_;
  }

  // Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    // Modulo bias is negligible for the small n used here, but reject anyway.
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = std::size_t(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// ---------------------------------------------------------------------------
// Misc small helpers shared across modules.
// ---------------------------------------------------------------------------

std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

// Shortest round-trip decimal rendering of a double (std::to_chars).
std::string format_double(double v);

// Read / write an entire file. Throws IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// Hex digest (FNV-1a-64 over bytes) used for content addressing.
std::string content_digest(std::string_view bytes);

}  // namespace cfdis

#endif  // CFDIS_COMMON_HPP
