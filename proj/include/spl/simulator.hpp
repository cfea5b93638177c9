#pragma once

#include <cstdint>
#include <random>

#include "spl/core.hpp"

namespace spl {

/// Requested per-pixel photon budget, e.g. {2, 50} for the 2:50 condition.
/// signal_photons is the scene mean of expected detected signal counts;
/// background_photons is the expected background total over all T bins.
struct SbrTarget {
  double signal_photons = 1.0;
  double background_photons = 0.0;

  void validate() const;
};

struct Calibration {
  double gain = 1.0;             // scalar absorbing source energy
  double background_rate = 0.0;  // n_b, counts per second
};

/// Per-bin signal fractions for a pulse return at the given depth.
///
/// Integrates the unit-area truncated Gaussian over each bin interval, with
/// the pulse centered at continuous bin position 2*depth/(c*delta). Entries
/// are nonnegative and sum to 1 up to mass falling outside [0, T).
Eigen::ArrayXd discretize_pulse(const PulseModel& pulse, const DetectorConfig& cfg,
                                double depth_m);

/// Expected-count cube: gain*eta*alpha*(bin mass)*N + N*n_b*delta per bin.
Cube build_rate_cube(const Scene& scene, const DetectorConfig& cfg, const PulseModel& pulse,
                     double gain);

/// Solves for (gain, n_b) so the scene-mean expected signal total equals
/// target.signal_photons and every pixel's expected background total equals
/// target.background_photons exactly.
Calibration calibrate(const Scene& scene, const DetectorConfig& cfg, const PulseModel& pulse,
                      const SbrTarget& target);

/// Draws each count independently from Poisson(expected). Every pixel gets
/// its own RNG stream keyed by (seed, i, j), so results do not depend on
/// traversal or scheduling order.
PhotonCube sample_cube(const Cube& rates, const DetectorConfig& meta, std::uint64_t seed);

namespace rng {

std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic per-pixel stream. mt19937_64 output is fully specified by
/// the standard, and uniforms are built from raw bits, so sampled cubes are
/// identical across platforms.
class PixelStream {
 public:
  PixelStream(std::uint64_t seed, std::uint64_t pixel_index);

  double uniform();               // [0, 1)
  std::int64_t poisson(double lambda);

 private:
  std::mt19937_64 engine_;
};

}  // namespace rng

}  // namespace spl
