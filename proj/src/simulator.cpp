#include "spl/simulator.hpp"

#include <cmath>
#include <stdexcept>

namespace spl {

void SbrTarget::validate() const {
  if (!(signal_photons > 0.0)) throw std::invalid_argument("SbrTarget: signal_photons must be > 0");
  if (background_photons < 0.0)
    throw std::invalid_argument("SbrTarget: background_photons must be >= 0");
}

namespace {

double gaussian_cdf(double x, double sigma) {
  return 0.5 * (1.0 + std::erf(x / (sigma * std::sqrt(2.0))));
}

}  // namespace

Eigen::ArrayXd discretize_pulse(const PulseModel& pulse, const DetectorConfig& cfg,
                                double depth_m) {
  cfg.validate();
  if (!(depth_m > 0.0) || !(depth_m < unambiguous_range(cfg)))
    throw std::invalid_argument("discretize_pulse: depth outside the unambiguous range");

  Eigen::ArrayXd mass = Eigen::ArrayXd::Zero(cfg.bins);
  const double center_s = 2.0 * depth_m / kSpeedOfLight;  // arrival time
  const double sigma = pulse.sigma();
  const double cut = pulse.truncation();
  // Unit area over the +-3 sigma support.
  const double norm = gaussian_cdf(cut, sigma) - gaussian_cdf(-cut, sigma);

  if (sigma <= 0.0) {
    // Degenerate pulse: all mass in the bin containing the arrival time.
    const auto k = static_cast<Eigen::Index>(std::floor(center_s / cfg.bin_seconds));
    if (k >= 0 && k < cfg.bins) mass[k] = 1.0;
    return mass;
  }

  const auto first =
      static_cast<Eigen::Index>(std::floor((center_s - cut) / cfg.bin_seconds));
  const auto last = static_cast<Eigen::Index>(std::floor((center_s + cut) / cfg.bin_seconds));
  for (Eigen::Index k = std::max<Eigen::Index>(first, 0);
       k <= std::min<Eigen::Index>(last, cfg.bins - 1); ++k) {
    const double lo = std::max(static_cast<double>(k) * cfg.bin_seconds - center_s, -cut);
    const double hi =
        std::min(static_cast<double>(k + 1) * cfg.bin_seconds - center_s, cut);
    if (hi > lo) mass[k] = (gaussian_cdf(hi, sigma) - gaussian_cdf(lo, sigma)) / norm;
  }
  return mass;
}

Cube build_rate_cube(const Scene& scene, const DetectorConfig& cfg, const PulseModel& pulse,
                     double gain) {
  if (!(gain >= 0.0)) throw std::invalid_argument("build_rate_cube: gain must be >= 0");
  scene.validate(cfg);
  const double background = cfg.illuminations * cfg.background_rate * cfg.bin_seconds;
  Cube rates = Cube::zeros(cfg.bins, scene.rows(), scene.cols());
  for (Eigen::Index i = 0; i < scene.rows(); ++i) {
    for (Eigen::Index j = 0; j < scene.cols(); ++j) {
      auto px = rates.pixel(i, j);
      px = background;
      const double a = scene.reflectivity(i, j);
      if (gain > 0.0 && a > 0.0) {
        const Eigen::ArrayXd mass = discretize_pulse(pulse, cfg, scene.depth(i, j));
        px += gain * cfg.quantum_efficiency * a * cfg.illuminations * mass;
      }
    }
  }
  return rates;
}

Calibration calibrate(const Scene& scene, const DetectorConfig& cfg, const PulseModel& pulse,
                      const SbrTarget& target) {
  target.validate();
  scene.validate(cfg);

  // Exact per-pixel background total: N * n_b * delta * T == background_photons.
  Calibration cal;
  cal.background_rate = target.background_photons /
                        (cfg.illuminations * static_cast<double>(cfg.bins) * cfg.bin_seconds);

  // Scene mean of eta * alpha * (in-window pulse mass) per unit gain.
  double mean_per_gain = 0.0;
  for (Eigen::Index i = 0; i < scene.rows(); ++i)
    for (Eigen::Index j = 0; j < scene.cols(); ++j) {
      const double a = scene.reflectivity(i, j);
      if (a > 0.0)
        mean_per_gain += cfg.quantum_efficiency * a * cfg.illuminations *
                         discretize_pulse(pulse, cfg, scene.depth(i, j)).sum();
    }
  mean_per_gain /= static_cast<double>(scene.rows() * scene.cols());
  if (!(mean_per_gain > 0.0))
    throw std::invalid_argument("calibrate: scene has no pixel with reflectivity > 0");

  cal.gain = target.signal_photons / mean_per_gain;
  return cal;
}

PhotonCube sample_cube(const Cube& rates, const DetectorConfig& meta, std::uint64_t seed) {
  if (rates.bins != meta.bins)
    throw std::invalid_argument("sample_cube: rates bins do not match meta");
  if ((rates.data < 0.0).any() || !rates.all_finite())
    throw std::invalid_argument("sample_cube: rates must be nonnegative and finite");

  PhotonCube cube = PhotonCube::zeros(meta, rates.rows, rates.cols);
  for (Eigen::Index i = 0; i < rates.rows; ++i) {
    for (Eigen::Index j = 0; j < rates.cols; ++j) {
      rng::PixelStream stream(seed, static_cast<std::uint64_t>(i * rates.cols + j));
      for (Eigen::Index t = 0; t < rates.bins; ++t)
        cube.at(t, i, j) = stream.poisson(rates.at(t, i, j));
    }
  }
  return cube;
}

namespace rng {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PixelStream::PixelStream(std::uint64_t seed, std::uint64_t pixel_index) {
  std::uint64_t s = seed;
  (void)splitmix64(s);
  s ^= 0x632BE59BD9B4E019ULL + pixel_index;
  engine_.seed(splitmix64(s));
}

double PixelStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::int64_t PixelStream::poisson(double lambda) {
  if (lambda < 0.0 || !std::isfinite(lambda))
    throw std::invalid_argument("poisson: lambda must be finite and >= 0");
  std::int64_t total = 0;
  // Split large rates so the product method never underflows; Poisson
  // variables are additive in the rate.
  while (lambda > 10.0) {
    total += poisson(10.0);
    lambda -= 10.0;
  }
  if (lambda == 0.0) return total;
  const double limit = std::exp(-lambda);
  double prod = 1.0;
  std::int64_t k = -1;
  do {
    prod *= uniform();
    ++k;
  } while (prod > limit);
  return total + k;
}

}  // namespace rng

}  // namespace spl
