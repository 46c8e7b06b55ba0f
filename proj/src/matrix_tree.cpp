#include "cohodge/matrix_tree.hpp"

#include <cmath>

#include "cohodge/error.hpp"
#include "cohodge/forests.hpp"
#include "cohodge/numeric.hpp"

namespace cohodge {

namespace {

struct DualLattice {
    IntMatrix basis;   // image-lattice basis of B^d = im(∂^T), columns
    IntMatrix coords;  // ∂^T = basis * coords
};

DualLattice dualLatticeData(const IntMatrix& del)
{
    IntMatrix delT = del.transpose();
    SmithForm snf = smithNormalForm(delT);
    DualLattice out;
    out.basis = IntMatrix(delT.rows(), snf.rank);
    for (int t = 0; t < snf.rank; ++t)
        for (int i = 0; i < delT.rows(); ++i)
            out.basis(i, t) = snf.diag[t] * snf.leftInverse(i, t);
    std::vector<int> headRows(snf.rank);
    for (int t = 0; t < snf.rank; ++t)
        headRows[t] = t;
    out.coords = snf.rightInverse.selectRows(headRows);
    return out;
}

}  // namespace

BiasedLaplacian biasedLaplacian(const ChainComplex& c, int d, const ScalarStructure& s, ArithmeticMode mode)
{
    DegreeContext ctx = makeDegreeContext(c, d);
    s.require(c, {d - 1, d});
    const bool exact = useExactArithmetic(mode, s.isZeroOn({d - 1, d}));

    BiasedLaplacian lap;
    lap.rank = ctx.rankB;
    DualLattice dual = dualLatticeData(ctx.del);

    if (exact)
    {
        IntMatrix onB = ctx.coordsP * ctx.del.transpose() * ctx.imageBasisG;
        IntMatrix onDual = dual.coords * ctx.del * dual.basis;
        lap.exactMatrixOnB = RatMatrix::fromInt(onB);
        lap.exactDualMatrix = RatMatrix::fromInt(onDual);
        lap.exactDet = Rat(determinant(onB));
        lap.exactDualDet = Rat(determinant(onDual));
        lap.matrixOnB = toEigen(onB);
        lap.dualMatrix = toEigen(onDual);
        lap.det = lap.exactDet->get_d();
        lap.dualDet = lap.exactDualDet->get_d();
        return lap;
    }

    Eigen::VectorXd eE = Eigen::Map<const Eigen::VectorXd>(modifiedInnerProduct(c, s, d - 1).data(), ctx.nCellsDm1);
    std::vector<double> wRaw = modifiedInnerProduct(c, s, d);
    Eigen::VectorXd eWInv(ctx.nCellsD);
    for (int i = 0; i < ctx.nCellsD; ++i)
        eWInv(i) = 1.0 / wRaw[i];

    Eigen::MatrixXd delD = toEigen(ctx.del);
    Eigen::MatrixXd gD = toEigen(ctx.imageBasisG);
    Eigen::MatrixXd pD = toEigen(ctx.coordsP);
    Eigen::MatrixXd gStar = toEigen(dual.basis);
    Eigen::MatrixXd pStar = toEigen(dual.coords);

    lap.matrixOnB = pD * eWInv.asDiagonal() * delD.transpose() * eE.asDiagonal() * gD;
    lap.dualMatrix = pStar * eE.asDiagonal() * delD * eWInv.asDiagonal() * gStar;
    lap.det = ctx.rankB == 0 ? 1.0 : lap.matrixOnB.determinant();
    lap.dualDet = ctx.rankB == 0 ? 1.0 : lap.dualMatrix.determinant();
    return lap;
}

MatrixTreeReport verifyMatrixTree(const ChainComplex& c, int d, const ScalarStructure& s, const HodgeOptions& opts,
                                  double tolerance)
{
    BiasedLaplacian lap = biasedLaplacian(c, d, s, opts.mode);
    DegreeContext ctx = makeDegreeContext(c, d);
    std::vector<SpanningTree> trees = enumerateTrees(ctx, opts.enumeration);
    std::vector<SpanningCoTree> cotrees = enumerateCoTrees(ctx, opts.enumeration);
    ForestWeights w = forestWeights(c, d, trees, cotrees, s);

    MatrixTreeReport rep;
    rep.treeCount = trees.size();
    rep.cotreeCount = cotrees.size();
    rep.exactMode = lap.exactDet.has_value() && w.exact;
    rep.detValue = lap.det;

    rep.energyFactorLog = 0.0;
    for (int b = 0; b < ctx.nCellsDm1; ++b)
        rep.energyFactorLog += s.beta * s.value(d - 1, b);

    const double logTheta = logAbs(ctx.thetaX);
    double logForest = rep.energyFactorLog + w.cotreeSumLog + w.treeSumLog - 2.0 * logTheta;
    rep.forestValue = std::exp(logForest);
    rep.relativeError = relativeError(rep.detValue, rep.forestValue);

    if (rep.exactMode)
    {
        Rat forest = Rat(w.cotreeSumExact * w.treeSumExact) / Rat(ctx.thetaX * ctx.thetaX);
        rep.exactEqual = *lap.exactDet == forest;
        rep.pass = rep.exactEqual;
    }
    else
    {
        rep.pass = rep.relativeError <= tolerance;
    }
    return rep;
}

Eigen::MatrixXd pseudoInverseA(const ChainComplex& c, int d, const ScalarStructure& s)
{
    DegreeContext ctx = makeDegreeContext(c, d);
    BiasedLaplacian lap = biasedLaplacian(c, d, s, ArithmeticMode::Float);

    Eigen::VectorXd eE = Eigen::Map<const Eigen::VectorXd>(modifiedInnerProduct(c, s, d - 1).data(), ctx.nCellsDm1);
    std::vector<double> wRaw = modifiedInnerProduct(c, s, d);
    Eigen::VectorXd eWInv(ctx.nCellsD);
    for (int i = 0; i < ctx.nCellsD; ++i)
        eWInv(i) = 1.0 / wRaw[i];

    Eigen::MatrixXd delD = toEigen(ctx.del);
    Eigen::MatrixXd gD = toEigen(ctx.imageBasisG);
    if (ctx.rankB == 0)
        return Eigen::MatrixXd::Zero(ctx.nCellsD, 0);
    return eWInv.asDiagonal() * delD.transpose() * eE.asDiagonal() * gD * lap.matrixOnB.inverse();
}

LemmaFinalReport verifyLemmaFinal(const ChainComplex& c, int d, const EnumerationOptions& opts)
{
    ChainComplex reduced = reduceTwoStage(c, d);
    DegreeContext ctx = makeDegreeContext(reduced, d);
    if (rationalRank(ctx.del) != ctx.nCellsD)
        fail(Errc::NotATreeComplex, "the full d-cell set is not a spanning tree (boundary not injective over Q)");

    LemmaFinalReport rep;
    ScalarStructure zeros = ScalarStructure::zero(reduced);
    BiasedLaplacian lap = biasedLaplacian(reduced, d, zeros, ArithmeticMode::Exact);
    rep.detL = *lap.exactDet;

    rep.covolumeSq = ctx.rankB == 0 ? Int(1) : gramCovolumeSq(ctx.imageBasisG);
    rep.theta = ctx.thetaX;
    rep.dualTheta = torsionOrder(ctx.del.transpose());
    IntMatrix dualImage = imageBasis(ctx.del.transpose());
    rep.dualCovolumeSq = dualImage.cols() == 0 ? Int(1) : gramCovolumeSq(dualImage);

    DualityReport duality = dualize(reduced, d, opts);
    rep.sumSquaredOrders = 0;
    for (const SpanningCoTree& L : duality.cotrees)
        rep.sumSquaredOrders += L.relOrder * L.relOrder;

    rep.detEqualsCovolume = rep.detL == Rat(rep.covolumeSq);
    rep.thetasEqual = rep.theta == rep.dualTheta;
    rep.dualCovolumeIsThetaSq = rep.dualCovolumeSq == rep.dualTheta * rep.dualTheta;
    rep.ordersMatchDualTorsions = duality.invariantsMatch;
    rep.covolumeIsSumOfSquares = rep.covolumeSq == rep.sumSquaredOrders;
    rep.pass = rep.detEqualsCovolume && rep.thetasEqual && rep.dualCovolumeIsThetaSq &&
               rep.ordersMatchDualTorsions && rep.covolumeIsSumOfSquares;
    return rep;
}

VariationReport checkDeterminantVariation(const ChainComplex& c, int d, const ScalarStructure& s, int cell,
                                          double h)
{
    DegreeContext ctx = makeDegreeContext(c, d);
    if (cell < 0 || cell >= ctx.nCellsD)
        fail(Errc::DegreeOutOfRange, "cell index out of range");

    BiasedLaplacian base = biasedLaplacian(c, d, s, ArithmeticMode::Float);
    ScalarStructure bumped = s;
    bumped.energy[d][cell] += h;
    BiasedLaplacian shifted = biasedLaplacian(c, d, bumped, ArithmeticMode::Float);

    Eigen::MatrixXd a = pseudoInverseA(c, d, s);
    Eigen::MatrixXd ap = a * toEigen(ctx.coordsP);

    VariationReport rep;
    rep.cell = cell;
    rep.finiteDifference = (std::log(shifted.det) - std::log(base.det)) / h;
    rep.traceTerm = -s.beta * ap(cell, cell);
    rep.absoluteError = std::abs(rep.finiteDifference - rep.traceTerm);
    return rep;
}

}  // namespace cohodge
