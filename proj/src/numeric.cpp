#include "cohodge/numeric.hpp"

#include <algorithm>

#include "cohodge/error.hpp"

namespace cohodge {

Eigen::MatrixXd toEigen(const IntMatrix& m)
{
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).get_d();
    return out;
}

Eigen::MatrixXd toEigen(const RatMatrix& m)
{
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).get_d();
    return out;
}

double logAbs(const Int& z)
{
    if (z == 0)
        fail(Errc::Internal, "logAbs of zero");
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::abs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

double logSumExp(std::span<const double> v)
{
    if (v.empty())
        return -std::numeric_limits<double>::infinity();
    double m = *std::max_element(v.begin(), v.end());
    if (!std::isfinite(m))
        return m;
    double s = 0.0;
    for (double x : v)
        s += std::exp(x - m);
    return m + std::log(s);
}

std::vector<double> softmaxFromLogs(std::span<const double> v)
{
    std::vector<double> out(v.size());
    double lse = logSumExp(v);
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = std::exp(v[i] - lse);
    return out;
}

double maxAbs(const Eigen::MatrixXd& m)
{
    if (m.size() == 0)
        return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double relativeMatrixError(const Eigen::MatrixXd& got, const Eigen::MatrixXd& want)
{
    if (got.rows() != want.rows() || got.cols() != want.cols())
        fail(Errc::Internal, "relativeMatrixError shape mismatch");
    double scale = std::max(maxAbs(got), maxAbs(want));
    if (scale == 0.0)
        return 0.0;
    return maxAbs(got - want) / scale;
}

}  // namespace cohodge
