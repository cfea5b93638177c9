#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace spl {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// Detector and acquisition parameters shared by the simulator, the
/// estimators, and the network decode path.
struct DetectorConfig {
  Eigen::Index bins = 1024;            // T, number of time bins
  double bin_seconds = 80e-12;         // bin duration (s)
  double quantum_efficiency = 1.0;     // eta in (0, 1]
  double background_rate = 0.0;        // n_b, counts per second
  double illuminations = 1.0;          // pulse repetitions N

  /// Throws std::invalid_argument on the first violated invariant.
  void validate() const;
};

/// Depth spanned by one time bin: bin_seconds * c / 2.
double bin_depth_width(const DetectorConfig& cfg);

/// Largest depth representable without range aliasing: T * bin_seconds * c / 2.
double unambiguous_range(const DetectorConfig& cfg);

/// Laser pulse model: truncated Gaussian with unit area over +-3 sigma.
struct PulseModel {
  double fwhm_seconds = 400e-12;

  double sigma() const;       // fwhm / (2 sqrt(2 ln 2))
  double truncation() const;  // 3 * sigma
};

/// Ground truth used by the simulator: per-pixel depth (m) and reflectivity.
struct Scene {
  Eigen::ArrayXXd depth;         // M x N, meters
  Eigen::ArrayXXd reflectivity;  // M x N, in [0, 1]

  Eigen::Index rows() const { return depth.rows(); }
  Eigen::Index cols() const { return depth.cols(); }

  /// Checks range aliasing and reflectivity bounds against cfg.
  void validate(const DetectorConfig& cfg) const;
};

/// Integer photon-count histogram cube, T x M x N.
///
/// Storage is pixel-major so each pixel's time series is contiguous:
/// index = ((i * N) + j) * T + t.
struct PhotonCube {
  DetectorConfig meta;
  Eigen::Index rows = 0;  // M
  Eigen::Index cols = 0;  // N
  std::vector<std::int64_t> counts;

  static PhotonCube zeros(const DetectorConfig& meta, Eigen::Index rows, Eigen::Index cols);

  Eigen::Index bins() const { return meta.bins; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(counts.size()); }

  std::int64_t& at(Eigen::Index t, Eigen::Index i, Eigen::Index j) {
    return counts[static_cast<std::size_t>((i * cols + j) * meta.bins + t)];
  }
  std::int64_t at(Eigen::Index t, Eigen::Index i, Eigen::Index j) const {
    return counts[static_cast<std::size_t>((i * cols + j) * meta.bins + t)];
  }

  /// Contiguous view of one pixel's histogram (length T).
  Eigen::Map<const Eigen::Array<std::int64_t, Eigen::Dynamic, 1>> pixel(Eigen::Index i,
                                                                        Eigen::Index j) const {
    return {counts.data() + (i * cols + j) * meta.bins, meta.bins};
  }
};

struct ValidationReport {
  bool ok = true;
  std::string message;
};

/// Reports the first invariant violation of a cube, or ok.
ValidationReport validate_cube(const PhotonCube& cube);

/// Real-valued T x M x N cube (expected rates, windowed counts, probability
/// volumes). Same pixel-major layout as PhotonCube.
struct Cube {
  Eigen::Index bins = 0;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  Eigen::ArrayXd data;

  static Cube zeros(Eigen::Index bins, Eigen::Index rows, Eigen::Index cols);

  double& at(Eigen::Index t, Eigen::Index i, Eigen::Index j) {
    return data[(i * cols + j) * bins + t];
  }
  double at(Eigen::Index t, Eigen::Index i, Eigen::Index j) const {
    return data[(i * cols + j) * bins + t];
  }

  Eigen::Map<Eigen::ArrayXd> pixel(Eigen::Index i, Eigen::Index j) {
    return {data.data() + (i * cols + j) * bins, bins};
  }
  Eigen::Map<const Eigen::ArrayXd> pixel(Eigen::Index i, Eigen::Index j) const {
    return {data.data() + (i * cols + j) * bins, bins};
  }

  bool all_finite() const { return data.isFinite().all(); }
};

/// Copies integer counts into a real cube.
Cube to_real(const PhotonCube& cube);

/// Real-valued rank-5 tensor (batch, channel, time, row, col) flowing through
/// the network. Time is innermost so per-pixel series stay contiguous:
/// index = (((b * C + c) * M + i) * N + j) * T + t.
struct FeatureTensor {
  Eigen::Index batch = 0;
  Eigen::Index channels = 0;
  Eigen::Index bins = 0;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  Eigen::ArrayXd data;

  static FeatureTensor zeros(Eigen::Index b, Eigen::Index c, Eigen::Index t, Eigen::Index m,
                             Eigen::Index n);

  Eigen::Index size() const { return data.size(); }

  Eigen::Index offset(Eigen::Index b, Eigen::Index c, Eigen::Index t, Eigen::Index i,
                      Eigen::Index j) const {
    return (((b * channels + c) * rows + i) * cols + j) * bins + t;
  }
  double& at(Eigen::Index b, Eigen::Index c, Eigen::Index t, Eigen::Index i, Eigen::Index j) {
    return data[offset(b, c, t, i, j)];
  }
  double at(Eigen::Index b, Eigen::Index c, Eigen::Index t, Eigen::Index i,
            Eigen::Index j) const {
    return data[offset(b, c, t, i, j)];
  }

  /// Contiguous time series of one (batch, channel, pixel).
  Eigen::Map<Eigen::ArrayXd> series(Eigen::Index b, Eigen::Index c, Eigen::Index i,
                                    Eigen::Index j) {
    return {data.data() + offset(b, c, 0, i, j), bins};
  }
  Eigen::Map<const Eigen::ArrayXd> series(Eigen::Index b, Eigen::Index c, Eigen::Index i,
                                          Eigen::Index j) const {
    return {data.data() + offset(b, c, 0, i, j), bins};
  }

  bool same_shape(const FeatureTensor& o) const {
    return batch == o.batch && channels == o.channels && bins == o.bins && rows == o.rows &&
           cols == o.cols;
  }
  bool all_finite() const { return data.isFinite().all(); }
};

/// Wraps a single-pixel-channel real cube as a (1, 1, T, M, N) tensor.
FeatureTensor to_tensor(const Cube& cube);

/// Extracts channel (b, c) of a tensor back into a cube.
Cube to_cube(const FeatureTensor& x, Eigen::Index b = 0, Eigen::Index c = 0);

/// Per-pixel depth estimate in meters.
using DepthImage = Eigen::ArrayXXd;

/// Network output bundle: per-pixel time-bin distributions plus decode.
struct Prediction {
  Cube p_hat;                // per-pixel probability over T bins
  DepthImage z_hat;          // decoded depth, meters
  Eigen::ArrayXXd mean_bin;  // per-pixel expected bin index (1-based)
  double avg_variance = 0.0; // dispersion of p_hat, bins^2
};

}  // namespace spl
