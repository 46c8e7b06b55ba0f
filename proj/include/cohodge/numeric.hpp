#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <span>
#include <vector>

#include "cohodge/intmat.hpp"

namespace cohodge {

Eigen::MatrixXd toEigen(const IntMatrix& m);
Eigen::MatrixXd toEigen(const RatMatrix& m);

/// Natural log of |z| for arbitrary-precision z != 0 (no overflow).
double logAbs(const Int& z);

/// log(sum(exp(v))) computed stably; -inf for an empty list.
double logSumExp(std::span<const double> v);

/// exp(v[i] - logSumExp(v)): normalized weights that are safe at large beta.
std::vector<double> softmaxFromLogs(std::span<const double> v);

inline double relativeError(double got, double want)
{
    double scale = std::max(std::abs(got), std::abs(want));
    if (scale == 0.0)
        return 0.0;
    return std::abs(got - want) / scale;
}

double maxAbs(const Eigen::MatrixXd& m);
double relativeMatrixError(const Eigen::MatrixXd& got, const Eigen::MatrixXd& want);

}  // namespace cohodge
