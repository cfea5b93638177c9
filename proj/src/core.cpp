#include "spl/core.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spl {

void DetectorConfig::validate() const {
  if (bins < 1) throw std::invalid_argument("DetectorConfig: bins must be >= 1");
  if (!(bin_seconds > 0.0)) throw std::invalid_argument("DetectorConfig: bin_seconds must be > 0");
  if (!(quantum_efficiency > 0.0) || quantum_efficiency > 1.0)
    throw std::invalid_argument("DetectorConfig: quantum_efficiency must be in (0, 1]");
  if (background_rate < 0.0)
    throw std::invalid_argument("DetectorConfig: background_rate must be >= 0");
  if (illuminations < 1.0)
    throw std::invalid_argument("DetectorConfig: illuminations must be >= 1");
}

double bin_depth_width(const DetectorConfig& cfg) {
  cfg.validate();
  return cfg.bin_seconds * kSpeedOfLight / 2.0;
}

double unambiguous_range(const DetectorConfig& cfg) {
  return static_cast<double>(cfg.bins) * bin_depth_width(cfg);
}

double PulseModel::sigma() const { return fwhm_seconds / (2.0 * std::sqrt(2.0 * std::log(2.0))); }

double PulseModel::truncation() const { return 3.0 * sigma(); }

void Scene::validate(const DetectorConfig& cfg) const {
  if (depth.rows() != reflectivity.rows() || depth.cols() != reflectivity.cols())
    throw std::invalid_argument("Scene: depth and reflectivity dims differ");
  const double range = unambiguous_range(cfg);
  if (!(depth > 0.0).all() || !(depth < range).all())
    throw std::invalid_argument("Scene: depth outside the unambiguous range (0, T*delta*c/2)");
  if ((reflectivity < 0.0).any() || (reflectivity > 1.0).any())
    throw std::invalid_argument("Scene: reflectivity outside [0, 1]");
}

PhotonCube PhotonCube::zeros(const DetectorConfig& meta, Eigen::Index rows, Eigen::Index cols) {
  meta.validate();
  PhotonCube cube;
  cube.meta = meta;
  cube.rows = rows;
  cube.cols = cols;
  cube.counts.assign(static_cast<std::size_t>(meta.bins * rows * cols), 0);
  return cube;
}

ValidationReport validate_cube(const PhotonCube& cube) {
  const Eigen::Index expected = cube.meta.bins * cube.rows * cube.cols;
  if (cube.size() != expected) {
    std::ostringstream os;
    os << "counts size " << cube.size() << " does not match meta dims T*M*N = " << expected;
    return {false, os.str()};
  }
  for (Eigen::Index i = 0; i < cube.rows; ++i)
    for (Eigen::Index j = 0; j < cube.cols; ++j)
      for (Eigen::Index t = 0; t < cube.meta.bins; ++t)
        if (cube.at(t, i, j) < 0) {
          std::ostringstream os;
          os << "negative count at (t=" << t << ", i=" << i << ", j=" << j << ")";
          return {false, os.str()};
        }
  return {true, "ok"};
}

Cube Cube::zeros(Eigen::Index bins, Eigen::Index rows, Eigen::Index cols) {
  Cube c;
  c.bins = bins;
  c.rows = rows;
  c.cols = cols;
  c.data = Eigen::ArrayXd::Zero(bins * rows * cols);
  return c;
}

Cube to_real(const PhotonCube& cube) {
  Cube out = Cube::zeros(cube.meta.bins, cube.rows, cube.cols);
  for (Eigen::Index k = 0; k < out.data.size(); ++k)
    out.data[k] = static_cast<double>(cube.counts[static_cast<std::size_t>(k)]);
  return out;
}

FeatureTensor FeatureTensor::zeros(Eigen::Index b, Eigen::Index c, Eigen::Index t, Eigen::Index m,
                                   Eigen::Index n) {
  FeatureTensor x;
  x.batch = b;
  x.channels = c;
  x.bins = t;
  x.rows = m;
  x.cols = n;
  x.data = Eigen::ArrayXd::Zero(b * c * t * m * n);
  return x;
}

FeatureTensor to_tensor(const Cube& cube) {
  FeatureTensor x = FeatureTensor::zeros(1, 1, cube.bins, cube.rows, cube.cols);
  x.data = cube.data;  // identical layout
  return x;
}

Cube to_cube(const FeatureTensor& x, Eigen::Index b, Eigen::Index c) {
  Cube out = Cube::zeros(x.bins, x.rows, x.cols);
  const Eigen::Index plane = x.bins * x.rows * x.cols;
  out.data = x.data.segment((b * x.channels + c) * plane, plane);
  return out;
}

}  // namespace spl
