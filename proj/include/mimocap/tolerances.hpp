#pragma once

// Every numeric threshold used by the library lives here so tests can cite
// the exact values.

namespace mimocap::tol {

// matrix kernel
inline constexpr double kHermSymmetry = 1e-10;     // max |A - A^H| elementwise
inline constexpr double kCholPivotRel = 1e-12;     // pivot <= this * (trace/n) fails
inline constexpr double kCholReconstruct = 1e-9;   // ||L L^H - A||_F / ||A||_F
inline constexpr double kInvResidual = 1e-8;       // max |A inv(A) - I|
inline constexpr double kDiagImag = 1e-10;         // tolerated imaginary residue

// channel
inline constexpr double kRhoMax = 0.999;           // coloring needs R positive definite

// receivers
inline constexpr double kSinrClampNeg = -1e-12;    // MMSE SINR above this clamps to 0
inline constexpr double kHighSnrMinRho = 10.0;     // per-stream SNR floor for the expansion

// monte carlo
inline constexpr double kRejectCond1 = 1e12;       // Gram 1-norm condition limit
inline constexpr int kMaxRedraws = 200;            // redraw attempts before giving up

}  // namespace mimocap::tol
