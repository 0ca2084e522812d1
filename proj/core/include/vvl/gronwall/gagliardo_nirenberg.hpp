#pragma once

#include "vvl/spectral/spectral_field.hpp"

namespace vvl {

/// |grad w|^2 |w|_p^(2p/(2-p)) / (|w|_2^2)^(2/(2-p)) for a mean-zero field w,
/// the ratio bounded below by the interpolation constant. Requires p in (1, 2)
/// and w nonzero.
double gagliardo_nirenberg_quotient(const SpectralField& w, double p);

/// Conservative interpolation constant for exponent p: half the smallest
/// quotient found over periodized mean-zero Gaussians of every width the grid
/// resolves and over the single modes sin x and sin x sin y.
double estimate_gagliardo_nirenberg(double p, int n = 128);

}  // namespace vvl
