#pragma once

#include "spl/core.hpp"
#include "spl/windowing.hpp"

namespace spl {

/// Per-pixel scaling and thresholds for soft shrinkage. One plane per
/// flattened (batch * channel); plane-major layout (p * M + i) * N + j.
struct ThresholdMap {
  Eigen::Index planes = 0;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  Eigen::ArrayXd scaling;  // S in [0, 1]
  Eigen::ArrayXd tau;      // thresholds >= 0

  double tau_at(Eigen::Index p, Eigen::Index i, Eigen::Index j) const {
    return tau[(p * rows + i) * cols + j];
  }
};

/// tau[p,i,j] = S[p,i,j] * mean_t |x[p,t,i,j]|. The tensor is interpreted as
/// (planes = batch*channels, T, M, N); scaling is plane-major of size
/// planes*M*N with entries in [0, 1].
ThresholdMap pixel_thresholds(const FeatureTensor& x, const Eigen::ArrayXd& scaling);

/// Soft thresholding: shrinks |x| by tau, zeroing the dead zone [-tau, tau].
double soft_threshold(double x, double tau);

struct SoftThresholdGrad {
  double d_x = 0.0;
  double d_tau = 0.0;
};

/// Derivatives of soft_threshold scaled by upstream. At |x| == tau exactly
/// the dead-zone (zero) branch applies.
SoftThresholdGrad soft_threshold_backward(double x, double tau, double upstream);

/// Elementwise residual combination: x + denoised.
FeatureTensor residual_denoise(const FeatureTensor& x, const FeatureTensor& denoised);

/// Non-learned shrinkage denoiser: temporal window, then soft thresholding
/// against per-pixel thresholds built with a uniform scaling s0.
Cube classic_denoise(const PhotonCube& cube, const WindowConfig& w, double s0);

}  // namespace spl
