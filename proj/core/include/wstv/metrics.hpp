#pragma once

#include "wstv/image.hpp"

namespace wstv {

struct MetricReport {
  double psnr = 0.0;  // dB; +infinity when the images are identical
  double ssim = 0.0;
};

/// 10*log10(1/MSE) with peak 1, MSE averaged jointly over all elements of all
/// channels. Returns +infinity when MSE is exactly zero.
double psnr(const Image& ref, const Image& test);

/// Mean local SSIM with the standard 11x11 Gaussian window (sigma 1.5),
/// K1=0.01, K2=0.03, dynamic range 1. Windows are fully interior (no padding).
/// Multichannel images score each channel and average.
/// Throws ShapeError if the image is smaller than the window.
double ssim(const Image& ref, const Image& test);

MetricReport compute_metrics(const Image& ref, const Image& test);

}  // namespace wstv
