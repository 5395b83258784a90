#pragma once

#include "hmc/exponent.hpp"
#include "hmc/image.hpp"
#include "hmc/kernel.hpp"

namespace hmc {

// Amplitudes below this are lifted before powering when p < 0; real images
// contain exact zeros and a negative power would pole on them.
inline constexpr double kFilterEpsLift = 1e-6;

// Generalized convolution: per pixel and channel,
//   c' = (sum w_ij^p c_ij^p / sum w_ij^p)^{1/p}
// over the strictly positive taps, sampling clamp-to-edge, complex samples
// taken as amplitude*e^{i*phase}. p = 1 on a zero-phase image is classical
// normalized convolution.
PhasedImage hm_filter(const PhasedImage& img, const Kernel& k, double p);

// The p -> +/-inf limits: max(w*c)/max(w) and min(w*c)/max(w) over the
// positive taps. The winning tap's phase is carried; ties go to the first
// tap in row-major order.
PhasedImage dilate(const PhasedImage& img, const Kernel& k);
PhasedImage erode(const PhasedImage& img, const Kernel& k);

struct FilterStage {
    Kernel kernel;
    Exponent p;
};

// Left-to-right application; symbolic infinities dispatch to dilate/erode.
PhasedImage pipeline(const PhasedImage& img, const std::vector<FilterStage>& stages);

} // namespace hmc
