#pragma once

#include <complex>

#include <Eigen/Dense>

namespace tact {

inline constexpr const char* kVersion = "0.1.0";

using Complex = std::complex<double>;

using Eigen::Matrix2d;
using Eigen::Matrix3d;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::Vector2d;
using Eigen::Vector3d;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

}  // namespace tact
