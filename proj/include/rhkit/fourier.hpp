#pragma once

#include <complex>
#include <vector>

namespace rhkit {

using cd = std::complex<double>;

// Discrete Fourier analysis on the uniform theta grid, used for mode
// projections and spectral differentiation.  Coefficients are stored in
// wrap-around order: slot (m mod n) holds the coefficient of e^{i m theta},
// m = -n/2 .. n/2-1 for even n.

// Forward transform with 1/n normalization:
//   samples[k] = sum_m modes[(m+n)%n] * e^{i m theta_k}.
std::vector<cd> forward_modes(const std::vector<cd>& samples);

// Inverse of forward_modes.
std::vector<cd> inverse_samples(const std::vector<cd>& modes);

// Coefficient of e^{i m theta}, m in [-n/2, n/2).
cd mode_at(const std::vector<cd>& modes, int m);

// Samples of du/dtheta obtained by multiplying mode m by i*m.  The Nyquist
// slot (m = -n/2) uses that same rule; band-limited data never populates it.
std::vector<cd> spectral_derivative(const std::vector<cd>& samples);

}  // namespace rhkit
