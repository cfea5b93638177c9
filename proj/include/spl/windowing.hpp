#pragma once

#include <cmath>
#include <stdexcept>

#include "spl/core.hpp"

namespace spl {

/// Fixed all-ones temporal window (moving sum along time).
struct WindowConfig {
  int length = 1;  // T_wind, odd and >= 1

  int radius() const { return length / 2; }
  void validate() const {
    if (length < 1 || length % 2 == 0)
      throw std::invalid_argument("WindowConfig: length must be odd and >= 1");
  }
};

/// Window length closest to the pulse FWHM, in bins (nearest odd integer).
inline WindowConfig default_window(const DetectorConfig& cfg, const PulseModel& pulse) {
  cfg.validate();
  const double ratio = pulse.fwhm_seconds / cfg.bin_seconds;
  const auto half = static_cast<long>(std::llround((ratio - 1.0) / 2.0));
  WindowConfig w{static_cast<int>(2 * std::max(half, 0L) + 1)};
  return w;
}

/// Moving sum with zero boundary: out[k] = sum_{l=-u..u} in[k+l].
inline Eigen::ArrayXd temporal_window(const Eigen::Ref<const Eigen::ArrayXd>& in,
                                      const WindowConfig& w) {
  w.validate();
  const Eigen::Index n = in.size();
  const Eigen::Index u = w.radius();
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(n);
  for (Eigen::Index l = -u; l <= u; ++l) {
    const Eigen::Index lo = std::max<Eigen::Index>(0, -l);
    const Eigen::Index hi = std::min<Eigen::Index>(n, n - l);
    if (hi > lo) out.segment(lo, hi - lo) += in.segment(lo + l, hi - lo);
  }
  return out;
}

inline Cube temporal_window(const Cube& in, const WindowConfig& w) {
  w.validate();
  Cube out = Cube::zeros(in.bins, in.rows, in.cols);
  for (Eigen::Index i = 0; i < in.rows; ++i)
    for (Eigen::Index j = 0; j < in.cols; ++j)
      out.pixel(i, j) = temporal_window(in.pixel(i, j), w);
  return out;
}

inline FeatureTensor temporal_window(const FeatureTensor& in, const WindowConfig& w) {
  w.validate();
  FeatureTensor out = FeatureTensor::zeros(in.batch, in.channels, in.bins, in.rows, in.cols);
  for (Eigen::Index b = 0; b < in.batch; ++b)
    for (Eigen::Index c = 0; c < in.channels; ++c)
      for (Eigen::Index i = 0; i < in.rows; ++i)
        for (Eigen::Index j = 0; j < in.cols; ++j)
          out.series(b, c, i, j) = temporal_window(in.series(b, c, i, j), w);
  return out;
}

}  // namespace spl
