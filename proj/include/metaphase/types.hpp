// Core scalar/matrix aliases shared across the library.

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace metaphase {

using Mat  = Eigen::MatrixXd;
using Vec  = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Kills roundoff asymmetry on theoretically-symmetric outputs.
inline Mat symmetrized(const Mat& a) { return 0.5 * (a + a.transpose()); }

inline double max_abs(const Mat& a) { return a.cwiseAbs().maxCoeff(); }

// i^nu on the exact unit circle (nu any integer).
inline cplx ipow(int nu) {
    switch (((nu % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

inline int mod4(int v) { return ((v % 4) + 4) % 4; }
inline int mod2(int v) { return ((v % 2) + 2) % 2; }

}  // namespace metaphase
