#pragma once

#include <Eigen/Dense>
#include <complex>

namespace sta {

using Complex = std::complex<double>;
using CVec2 = Eigen::Vector2cd;
using CVec4 = Eigen::Vector4cd;
using CMat2 = Eigen::Matrix2cd;
using CMat4 = Eigen::Matrix4cd;

// Reference matrices of the standard Dirac representation, hard coded.
// Used as the comparison target for the bridge-computed matrices and as the
// independent matrix-side route in cross checks.
namespace dirac_rep {

inline const Complex kI{0.0, 1.0};

inline CMat2 sigma(int j) {
  CMat2 m;
  switch (j) {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("sigma index must be 1..3");
  }
  return m;
}

// gamma_mu with the index DOWN; gamma_0 == gamma^0, gamma_i == -gamma^i.
inline CMat4 gamma_lower(int mu) {
  CMat4 m = CMat4::Zero();
  switch (mu) {
    case 0:
      m(0, 0) = 1; m(1, 1) = 1; m(2, 2) = -1; m(3, 3) = -1;
      break;
    case 1:
      m(0, 3) = -1; m(1, 2) = -1; m(2, 1) = 1; m(3, 0) = 1;
      break;
    case 2:
      m(0, 3) = kI; m(1, 2) = -kI; m(2, 1) = -kI; m(3, 0) = kI;
      break;
    case 3:
      m(0, 2) = -1; m(1, 3) = 1; m(2, 0) = 1; m(3, 1) = -1;
      break;
    default:
      throw std::invalid_argument("gamma index must be 0..3");
  }
  return m;
}

inline CMat4 gamma_upper(int mu) {
  return mu == 0 ? gamma_lower(0) : CMat4(-gamma_lower(mu));
}

// gamma5 = i gamma^0 gamma^1 gamma^2 gamma^3
inline CMat4 gamma5() {
  return kI * gamma_upper(0) * gamma_upper(1) * gamma_upper(2) * gamma_upper(3);
}

}  // namespace dirac_rep

}  // namespace sta
