#include "rhkit/fourier.hpp"

#include <stdexcept>
#include <utility>

#include "rhkit/curve.hpp"

namespace rhkit {

namespace {

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 transform with sign convention
//   out[j] = sum_k in[k] * exp(sign * 2 pi i jk / n).
void fft_pow2(std::vector<cd>& a, int sign) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * pi / static_cast<double>(len);
    const cd wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      cd w(1.0);
      for (size_t k = 0; k < len / 2; ++k) {
        cd u = a[i + k];
        cd v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

// O(n^2) fallback for even non-power-of-two grids.
std::vector<cd> dft_direct(const std::vector<cd>& a, int sign) {
  const size_t n = a.size();
  std::vector<cd> out(n);
  for (size_t j = 0; j < n; ++j) {
    cd acc(0.0);
    for (size_t k = 0; k < n; ++k) {
      const double ang = sign * 2.0 * pi * static_cast<double>(j * k % n) / static_cast<double>(n);
      acc += a[k] * cd(std::cos(ang), std::sin(ang));
    }
    out[j] = acc;
  }
  return out;
}

std::vector<cd> transform(std::vector<cd> a, int sign) {
  if (is_pow2(a.size())) {
    fft_pow2(a, sign);
    return a;
  }
  return dft_direct(a, sign);
}

}  // namespace

std::vector<cd> forward_modes(const std::vector<cd>& samples) {
  if (samples.empty()) throw std::invalid_argument("forward_modes: empty input");
  std::vector<cd> modes = transform(samples, -1);
  const double inv = 1.0 / static_cast<double>(samples.size());
  for (cd& c : modes) c *= inv;
  return modes;
}

std::vector<cd> inverse_samples(const std::vector<cd>& modes) {
  if (modes.empty()) throw std::invalid_argument("inverse_samples: empty input");
  return transform(modes, +1);
}

cd mode_at(const std::vector<cd>& modes, int m) {
  const int n = static_cast<int>(modes.size());
  int idx = m % n;
  if (idx < 0) idx += n;
  return modes[static_cast<size_t>(idx)];
}

std::vector<cd> spectral_derivative(const std::vector<cd>& samples) {
  const int n = static_cast<int>(samples.size());
  std::vector<cd> modes = forward_modes(samples);
  for (int s = 0; s < n; ++s) {
    const int m = (s <= (n - 1) / 2) ? s : s - n;
    modes[static_cast<size_t>(s)] *= cd(0.0, static_cast<double>(m));
  }
  return inverse_samples(modes);
}

}  // namespace rhkit
