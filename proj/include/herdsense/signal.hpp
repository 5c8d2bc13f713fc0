// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "herdsense/types.hpp"

namespace herdsense::signal {

// Projection matrix of the least-squares polynomial fit over a centered
// window: row r evaluates the fitted polynomial at window position r.
// Row window_len/2 gives the classic interior smoothing coefficients.
Mat savitzky_golay_projection(int window_len, int polyorder);

// Savitzky-Golay smoothing. Output has the same length as the input; the
// first and last half-windows are filled by evaluating the polynomial
// fitted to the nearest full window at the edge positions.
Vec savitzky_golay(const Vec& series, int window_len, int polyorder);

// Orthonormal analysis filter pair; highpass is the quadrature mirror of
// the lowpass taps.
struct Wavelet {
  std::string name;
  Vec lowpass;
  Vec highpass;
};

// Supported names: "haar", "db4" (4-tap Daubechies).
const Wavelet& wavelet_by_name(const std::string& name);

struct WaveletCoeffs {
  Vec approximation;        // level-L band (A)
  std::vector<Vec> details; // details[0] = D1 (finest) .. details[L-1] = DL
  std::string wavelet_name;
  int levels = 0;
  Index input_length = 0;

  // Length of the signal entering level `level` (1-based).
  Index level_input_length(int level) const;
};

// Multi-level DWT with periodic boundary extension. A level of odd length
// transforms its even prefix cyclically and carries the trailing sample
// into the approximation band unchanged, which keeps the whole transform
// orthogonal for every input length: total coefficient energy equals input
// energy and the inverse is exact.
WaveletCoeffs dwt_decompose(const Vec& series, int levels,
                            const std::string& wavelet_name = "db4");

Vec dwt_reconstruct(const WaveletCoeffs& coeffs);

// Histogram entropy over `bins` equal-width bins spanning [min, max],
// natural log over non-empty bins. A constant series has zero entropy.
double shannon_entropy(const Vec& series, int bins = 10);

// Mean squared amplitude, (sum of squares) / N.
double signal_energy(const Vec& series);

}  // namespace herdsense::signal
