#pragma once

#include <cstdint>
#include <cmath>

#include "chipbkg/vec3.hpp"

namespace chipbkg {

/// splitmix64 finalizer; bijective 64-bit mix.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based random stream keyed by (seed, source id, event index).
///
/// Each event owns an independent stream, so results do not depend on how
/// events are distributed over workers. Draw n of a stream is a pure
/// function of (key, n).
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t source_id,
            std::uint64_t event_index)
      : key_(mix64(mix64(seed ^ 0x43776f726b657221ULL) ^
                   (source_id * 0x9e3779b97f4a7c15ULL)) ^
             mix64(event_index + 0x2545f4914f6cdd1dULL)),
        ctr_(0) {}

  std::uint64_t u64() { return mix64(key_ ^ (ctr_++ * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL)); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform direction on the unit sphere.
  Vec3 isotropic() {
    const double cz = 2.0 * uniform() - 1.0;
    const double sz = std::sqrt(std::fmax(0.0, 1.0 - cz * cz));
    const double phi = 2.0 * M_PI * uniform();
    return {sz * std::cos(phi), sz * std::sin(phi), cz};
  }

  /// Cosine-law polar angle about +z (pdf 2 cos t sin t), uniform azimuth.
  Vec3 cosine_hemisphere() {
    const double ct = std::sqrt(uniform());
    const double st = std::sqrt(std::fmax(0.0, 1.0 - ct * ct));
    const double phi = 2.0 * M_PI * uniform();
    return {st * std::cos(phi), st * std::sin(phi), ct};
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_;
};

}  // namespace chipbkg
