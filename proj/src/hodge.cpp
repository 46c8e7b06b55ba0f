#include "cohodge/hodge.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cohodge/error.hpp"
#include "cohodge/numeric.hpp"

namespace cohodge {

namespace {

double logAbsRat(const Rat& q)
{
    return logAbs(Int(q.get_num())) - logAbs(Int(q.get_den()));
}

}  // namespace

bool useExactArithmetic(ArithmeticMode mode, bool energiesVanish)
{
    switch (mode)
    {
        case ArithmeticMode::Auto:
            return energiesVanish;
        case ArithmeticMode::Exact:
            if (!energiesVanish)
                fail(Errc::Unsupported, "exact mode requires all relevant energies to vanish");
            return true;
        case ArithmeticMode::Float:
            return false;
    }
    return false;
}

namespace {

bool resolveExact(ArithmeticMode mode, bool energiesVanish)
{
    return useExactArithmetic(mode, energiesVanish);
}

/// Assembles sum_F exp(logW_F - logNorm) * summand_F with a fixed (forest
/// lexicographic) reduction order, plus the exact counterpart when requested.
SplittingOperator assembleOperator(std::string source, std::string target, int rows, int cols,
                                   std::vector<ForestTerm> terms, bool exact, bool keepCertificate)
{
    SplittingOperator op;
    op.sourceSpace = std::move(source);
    op.targetSpace = std::move(target);

    std::vector<double> logs(terms.size());
    for (size_t i = 0; i < terms.size(); ++i)
        logs[i] = terms[i].logWeight;
    op.logNormalizer = logSumExp(logs);

    op.matrix = Eigen::MatrixXd::Zero(rows, cols);
    for (const ForestTerm& t : terms)
    {
        const double coeff = std::exp(t.logWeight - op.logNormalizer);
        op.matrix += coeff * toEigen(t.summand);
    }

    if (exact)
    {
        Rat norm = 0;
        for (const ForestTerm& t : terms)
        {
            if (!t.exactWeight)
                fail(Errc::Internal, "exact assembly without exact weights");
            norm += *t.exactWeight;
        }
        op.exactNormalizer = norm;
        RatMatrix acc(rows, cols);
        for (const ForestTerm& t : terms)
            acc = acc + t.summand * (*t.exactWeight / norm);
        op.exactMatrix = std::move(acc);
    }

    if (keepCertificate)
        op.certificate = std::move(terms);
    return op;
}

}  // namespace

Eigen::MatrixXd SplittingOperator::assembleFromCertificate() const
{
    if (certificate.empty() && matrix.size() != 0)
        fail(Errc::Internal, "certificate was not retained");
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(matrix.rows(), matrix.cols());
    for (const ForestTerm& t : certificate)
    {
        if (t.summand.rows() != matrix.rows())
            fail(Errc::Internal, "certificate summand missing");
        acc += std::exp(t.logWeight - logNormalizer) * toEigen(t.summand);
    }
    return acc;
}

std::optional<RatMatrix> SplittingOperator::assembleExactFromCertificate() const
{
    if (!exactNormalizer)
        return std::nullopt;
    RatMatrix acc(static_cast<int>(matrix.rows()), static_cast<int>(matrix.cols()));
    for (const ForestTerm& t : certificate)
        acc = acc + t.summand * (*t.exactWeight / *exactNormalizer);
    return acc;
}

// ---------------------------------------------------------------------------
// Oracles

Eigen::MatrixXd mpPseudoInverseOracle(const Eigen::MatrixXd& a, const Eigen::VectorXd& sourceWeights,
                                      const Eigen::VectorXd& targetWeights)
{
    const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
    if (sourceWeights.size() != n || targetWeights.size() != m)
        fail(Errc::Internal, "oracle weight dimensions");
    for (int i = 0; i < n; ++i)
        if (!(sourceWeights(i) > 0))
            fail(Errc::Internal, "source weights must be positive");
    for (int i = 0; i < m; ++i)
        if (!(targetWeights(i) > 0))
            fail(Errc::Internal, "target weights must be positive");

    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    const int rank = static_cast<int>(lu.rank());
    // Weighted adjoint A# = mu^{-1} A^T nu.
    Eigen::MatrixXd adjoint = sourceWeights.cwiseInverse().asDiagonal() * a.transpose() * targetWeights.asDiagonal();
    if (rank == m)
        return adjoint * (a * adjoint).inverse();
    if (rank == n)
        return (adjoint * a).inverse() * adjoint;
    fail(Errc::RankDeficientBothWays, "matrix has neither full row nor full column rank");
}

RatMatrix mpPseudoInverseOracleExact(const RatMatrix& a, const std::vector<Rat>& sourceWeights,
                                     const std::vector<Rat>& targetWeights)
{
    const int m = a.rows(), n = a.cols();
    if (!sourceWeights.empty() && static_cast<int>(sourceWeights.size()) != n)
        fail(Errc::Internal, "oracle source weight count");
    if (!targetWeights.empty() && static_cast<int>(targetWeights.size()) != m)
        fail(Errc::Internal, "oracle target weight count");

    // Weighted adjoint mu^{-1} A^T nu.
    RatMatrix adjoint = a.transpose();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
        {
            if (!targetWeights.empty())
                adjoint(i, j) *= targetWeights[j];
            if (!sourceWeights.empty())
                adjoint(i, j) /= sourceWeights[i];
        }

    // Try the surjective route first, falling back to the injective one.
    if (m <= n)
    {
        RatMatrix gram = a * adjoint;
        if (determinant(gram) != 0)
            return adjoint * solveExact(gram, RatMatrix::identity(m));
    }
    RatMatrix gram = adjoint * a;
    if (determinant(gram) != 0)
        return solveExact(gram, RatMatrix::identity(n)) * adjoint;
    fail(Errc::RankDeficientBothWays, "matrix has neither full row nor full column rank");
}

SplittingOperator mpSummationSurjective(const RatMatrix& a, const std::vector<double>& sourceWeights,
                                        const HodgeOptions& opts)
{
    const int m = a.rows(), n = a.cols();
    if (static_cast<int>(sourceWeights.size()) != n)
        fail(Errc::Internal, "source weight count");

    // Full row rank check, exact.
    {
        RatMatrix gram = a * a.transpose();
        if (m > 0 && determinant(gram) == 0)
            fail(Errc::NotSurjective, "matrix does not have full row rank");
        if (m > n)
            fail(Errc::NotSurjective, "more rows than columns");
    }

    bool unitWeights = std::all_of(sourceWeights.begin(), sourceWeights.end(), [](double w) { return w == 1.0; });
    bool exact = resolveExact(opts.mode, unitWeights);

    std::vector<ForestTerm> terms;
    if (m == 0)
    {
        ForestTerm t;
        t.logWeight = 0.0;
        if (exact)
            t.exactWeight = Rat(1);
        t.summand = RatMatrix(n, 0);
        terms.push_back(std::move(t));
    }
    else
    {
        std::vector<int> comb(m);
        for (int i = 0; i < m; ++i)
            comb[i] = i;
        long long visits = 0;
        RatMatrix eye = RatMatrix::identity(m);
        do
        {
            if (++visits > opts.enumeration.budget)
                fail(Errc::BudgetExceeded, "column-subset sum exceeded budget");
            RatMatrix sub = a.selectColumns(comb);
            Rat det = determinant(sub);
            if (det == 0)
                continue;
            ForestTerm t;
            t.treeCells = comb;
            double logMu = 0.0;
            for (int i : comb)
                logMu += std::log(sourceWeights[i]);
            t.logWeight = 2.0 * logAbsRat(det) - logMu;
            if (exact)
                t.exactWeight = det * det;
            RatMatrix inv = solveExact(sub, eye);
            RatMatrix summand(n, m);
            for (int j = 0; j < m; ++j)
                for (int col = 0; col < m; ++col)
                    summand(comb[j], col) = inv(j, col);
            t.summand = std::move(summand);
            terms.push_back(std::move(t));
        } while (nextCombination(comb, n));
        if (terms.empty())
            fail(Errc::NotSurjective, "no invertible column subset found");
    }
    return assembleOperator("target lattice coords", "source", n, m, std::move(terms), exact, opts.keepCertificate);
}

// ---------------------------------------------------------------------------
// Per-forest maps

RatMatrix cotreeSplittingMap(const DegreeContext& ctx, const SpanningCoTree& L)
{
    const int h = ctx.homologyRank();
    RatMatrix sub = RatMatrix::fromInt(ctx.freeMapF.selectColumns(L.cells));
    RatMatrix inv = solveExact(sub, RatMatrix::identity(h));
    RatMatrix out(ctx.nCellsDm1, h);
    for (size_t j = 0; j < L.cells.size(); ++j)
        for (int col = 0; col < h; ++col)
            out(L.cells[j], col) = inv(static_cast<int>(j), col);
    return out;
}

RatMatrix treeProjectionMap(const DegreeContext& ctx, const SpanningTree& T)
{
    const int r = ctx.rankB;
    RatMatrix sub = RatMatrix::fromInt(ctx.coordsP.selectColumns(T.cells));
    RatMatrix inv = solveExact(sub, RatMatrix::identity(r));
    RatMatrix out(ctx.nCellsD, r);
    for (size_t j = 0; j < T.cells.size(); ++j)
        for (int col = 0; col < r; ++col)
            out(T.cells[j], col) = inv(static_cast<int>(j), col);
    return out;
}

RatMatrix cotreeProjectionMap(const DegreeContext& ctx, const SpanningCoTree& L)
{
    const int r = ctx.rankB;
    std::vector<int> kept = complementIndices(ctx.nCellsDm1, L.cells);
    RatMatrix sub = RatMatrix::fromInt(ctx.imageBasisG.selectRows(kept));
    RatMatrix inv = solveExact(sub, RatMatrix::identity(r));
    RatMatrix out(r, ctx.nCellsDm1);
    for (size_t j = 0; j < kept.size(); ++j)
        for (int row = 0; row < r; ++row)
            out(row, kept[j]) = inv(row, static_cast<int>(j));
    return out;
}

// ---------------------------------------------------------------------------
// Forest-summation operators

namespace {

struct CoTreeWeighting {
    std::vector<double> logWeights;
    std::vector<Rat> exactWeights;  // relOrder^2, exact mode only
    bool exact = false;
};

CoTreeWeighting cotreeWeights(const ChainComplex& c, int d, const ScalarStructure& s,
                              const std::vector<SpanningCoTree>& cotrees, ArithmeticMode mode)
{
    s.require(c, {d - 1});
    CoTreeWeighting w;
    w.exact = resolveExact(mode, s.isZeroOn({d - 1}));
    for (const SpanningCoTree& L : cotrees)
    {
        double exponent = 0.0;
        for (int b : L.cells)
            exponent += s.value(d - 1, b);
        w.logWeights.push_back(2.0 * logAbs(L.relOrder) - s.beta * exponent);
        if (w.exact)
            w.exactWeights.push_back(Rat(L.relOrder * L.relOrder));
    }
    return w;
}

struct TreeWeighting {
    std::vector<double> logWeights;
    std::vector<Rat> exactWeights;
    bool exact = false;
};

TreeWeighting treeWeights(const ChainComplex& c, int d, const ScalarStructure& s,
                          const std::vector<SpanningTree>& trees, ArithmeticMode mode)
{
    s.require(c, {d});
    TreeWeighting w;
    w.exact = resolveExact(mode, s.isZeroOn({d}));
    for (const SpanningTree& T : trees)
    {
        double exponent = 0.0;
        for (int b : T.cells)
            exponent += s.value(d, b);
        w.logWeights.push_back(2.0 * logAbs(T.torsion) - s.beta * exponent);
        if (w.exact)
            w.exactWeights.push_back(Rat(T.torsion * T.torsion));
    }
    return w;
}

}  // namespace

SplittingOperator boltzmannSplitting(const ChainComplex& c, int d, const ScalarStructure& s,
                                     const HodgeOptions& opts)
{
    DegreeContext ctx = makeDegreeContext(c, d);
    std::vector<SpanningCoTree> cotrees = enumerateCoTrees(ctx, opts.enumeration);
    CoTreeWeighting w = cotreeWeights(c, d, s, cotrees, opts.mode);

    std::vector<ForestTerm> terms(cotrees.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.enumeration.parallel)
#endif
    for (size_t i = 0; i < cotrees.size(); ++i)
    {
        terms[i].cotreeCells = cotrees[i].cells;
        terms[i].invariant = cotrees[i].relOrder;
        terms[i].logWeight = w.logWeights[i];
        if (w.exact)
            terms[i].exactWeight = w.exactWeights[i];
        terms[i].summand = cotreeSplittingMap(ctx, cotrees[i]);
    }
    return assembleOperator("H (free lattice coords of C/B)", "C[d-1]", ctx.nCellsDm1, ctx.homologyRank(),
                            std::move(terms), w.exact, opts.keepCertificate);
}

BoltzmannDistribution boltzmannDistribution(const ChainComplex& c, int d, const ScalarStructure& s,
                                            const std::vector<Int>& xhat, const HodgeOptions& opts)
{
    DegreeContext ctx = makeDegreeContext(c, d);
    if (static_cast<int>(xhat.size()) != ctx.nCellsDm1)
        fail(Errc::WrongDimension, "cycle vector has wrong length");

    // xhat must be a (d-1)-cycle.
    IntMatrix lower = c.boundary(d - 1);
    for (int i = 0; i < lower.rows(); ++i)
    {
        Int acc = 0;
        for (int j = 0; j < lower.cols(); ++j)
            acc += lower(i, j) * xhat[j];
        if (acc != 0)
            fail(Errc::NotACycle, "input chain has nonzero boundary");
    }

    SplittingOperator psi = boltzmannSplitting(c, d, s, opts);

    // Free coordinates of the class of xhat.
    const int h = ctx.homologyRank();
    RatMatrix coords(h, 1);
    for (int i = 0; i < h; ++i)
    {
        Int acc = 0;
        for (int j = 0; j < ctx.nCellsDm1; ++j)
            acc += ctx.freeMapF(i, j) * xhat[j];
        coords(i, 0) = Rat(acc);
    }

    BoltzmannDistribution out;
    out.classInput = xhat;
    out.betaUsed = s.beta;
    out.degenerate = ctx.bettiDm1 == 0;
    Eigen::VectorXd freeCoords(h);
    for (int i = 0; i < h; ++i)
        freeCoords(i) = coords(i, 0).get_d();
    Eigen::VectorXd rho = psi.matrix * freeCoords;
    out.cycle.assign(rho.data(), rho.data() + rho.size());
    if (psi.exactMatrix)
        out.cycleExact = *psi.exactMatrix * coords;
    return out;
}

SplittingOperator kirchhoffProjection(const ChainComplex& c, int d, const ScalarStructure& s,
                                      const HodgeOptions& opts)
{
    DegreeContext ctx = makeDegreeContext(c, d);
    std::vector<SpanningTree> trees = enumerateTrees(ctx, opts.enumeration);
    TreeWeighting w = treeWeights(c, d, s, trees, opts.mode);

    std::vector<ForestTerm> terms(trees.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.enumeration.parallel)
#endif
    for (size_t i = 0; i < trees.size(); ++i)
    {
        terms[i].treeCells = trees[i].cells;
        terms[i].invariant = trees[i].torsion;
        terms[i].logWeight = w.logWeights[i];
        if (w.exact)
            terms[i].exactWeight = w.exactWeights[i];
        terms[i].summand = treeProjectionMap(ctx, trees[i]);
    }
    return assembleOperator("B[d-1] (image-lattice coords)", "C[d]", ctx.nCellsD, ctx.rankB, std::move(terms),
                            w.exact, opts.keepCertificate);
}

SplittingOperator cotreeProjection(const ChainComplex& c, int d, const ScalarStructure& s,
                                   const HodgeOptions& opts)
{
    DegreeContext ctx = makeDegreeContext(c, d);
    std::vector<SpanningCoTree> cotrees = enumerateCoTrees(ctx, opts.enumeration);
    CoTreeWeighting w = cotreeWeights(c, d, s, cotrees, opts.mode);

    std::vector<ForestTerm> terms(cotrees.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.enumeration.parallel)
#endif
    for (size_t i = 0; i < cotrees.size(); ++i)
    {
        terms[i].cotreeCells = cotrees[i].cells;
        terms[i].invariant = cotrees[i].relOrder;
        terms[i].logWeight = w.logWeights[i];
        if (w.exact)
            terms[i].exactWeight = w.exactWeights[i];
        terms[i].summand = cotreeProjectionMap(ctx, cotrees[i]);
    }
    return assembleOperator("C[d-1]", "B[d-1] (image-lattice coords)", ctx.rankB, ctx.nCellsDm1, std::move(terms),
                            w.exact, opts.keepCertificate);
}

SplittingOperator kirchhoffBoltzmann(const ChainComplex& c, int d, const ScalarStructure& s,
                                     const HodgeOptions& opts)
{
    DegreeContext ctx = makeDegreeContext(c, d);
    std::vector<SpanningCoTree> cotrees = enumerateCoTrees(ctx, opts.enumeration);
    std::vector<SpanningTree> trees = enumerateTrees(ctx, opts.enumeration);
    CoTreeWeighting wl = cotreeWeights(c, d, s, cotrees, opts.mode);
    TreeWeighting wt = treeWeights(c, d, s, trees, opts.mode);
    const bool exact = wl.exact && wt.exact;

    const size_t pairCount = cotrees.size() * trees.size();
    std::vector<ForestTerm> terms(pairCount);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.enumeration.parallel)
#endif
    for (size_t k = 0; k < pairCount; ++k)
    {
        const size_t i = k / trees.size();  // co-tree index (outer, lexicographic)
        const size_t j = k % trees.size();
        ForestTerm& t = terms[k];
        t.cotreeCells = cotrees[i].cells;
        t.treeCells = trees[j].cells;
        t.invariant = cotrees[i].relOrder * trees[j].torsion;
        t.logWeight = wl.logWeights[i] + wt.logWeights[j];
        if (exact)
            t.exactWeight = wl.exactWeights[i] * wt.exactWeights[j];
        t.summand = treeProjectionMap(ctx, trees[j]) * cotreeProjectionMap(ctx, cotrees[i]);
    }
    return assembleOperator("C[d-1]", "C[d]", ctx.nCellsD, ctx.nCellsDm1, std::move(terms), exact,
                            opts.keepCertificate);
}

// ---------------------------------------------------------------------------
// Low-temperature asymptotics

LowTemperatureReport lowTemperatureLimit(const ChainComplex& c, int d, const ScalarStructure& s,
                                         const std::vector<double>& betaGrid, const std::vector<Int>* xhat,
                                         const HodgeOptions& opts)
{
    DegreeContext ctx = makeDegreeContext(c, d);
    s.require(c, {d - 1});
    const std::vector<double>& energy = s.energy.at(d - 1);
    {
        std::set<double> distinct(energy.begin(), energy.end());
        if (static_cast<int>(distinct.size()) != ctx.nCellsDm1)
            fail(Errc::DegenerateEnergy, "low-temperature analysis needs injective E");
    }

    LowTemperatureReport rep;
    rep.cotrees = enumerateCoTrees(ctx, opts.enumeration);
    const size_t n = rep.cotrees.size();

    std::vector<double> energySum(n, 0.0);
    for (size_t i = 0; i < n; ++i)
        for (int b : rep.cotrees[i].cells)
            energySum[i] += energy[b];

    rep.minimizerIndex = static_cast<int>(std::min_element(energySum.begin(), energySum.end()) - energySum.begin());
    SpanningCoTree greedy = greedyCoTree(ctx, &energy);
    rep.greedyAgrees = greedy.cells == rep.cotrees[rep.minimizerIndex].cells;

    // Quantization threshold from the energy gap: beyond betaThreshold the
    // total weight of the non-minimal co-trees is below exp(-beta*gap/2).
    rep.energyGap = std::numeric_limits<double>::infinity();
    double maxLogRatio = 0.0;
    const double logAMin = logAbs(rep.cotrees[rep.minimizerIndex].relOrder);
    for (size_t i = 0; i < n; ++i)
    {
        if (static_cast<int>(i) == rep.minimizerIndex)
            continue;
        rep.energyGap = std::min(rep.energyGap, energySum[i] - energySum[rep.minimizerIndex]);
        maxLogRatio = std::max(maxLogRatio, logAbs(rep.cotrees[i].relOrder) - logAMin);
    }
    if (n <= 1)
    {
        rep.energyGap = std::numeric_limits<double>::infinity();
        rep.betaThreshold = 0.0;
    }
    else
    {
        double numer = std::log(static_cast<double>(n - 1)) + 2.0 * maxLogRatio;
        rep.betaThreshold = std::max(0.0, 2.0 * numer / rep.energyGap);
    }

    for (double beta : betaGrid)
    {
        LowTemperatureRow row;
        row.beta = beta;
        std::vector<double> logs(n);
        for (size_t i = 0; i < n; ++i)
            logs[i] = 2.0 * logAbs(rep.cotrees[i].relOrder) - beta * energySum[i];
        row.normalizedWeights = softmaxFromLogs(logs);
        row.argmax = static_cast<int>(
            std::max_element(row.normalizedWeights.begin(), row.normalizedWeights.end()) -
            row.normalizedWeights.begin());
        rep.table.push_back(std::move(row));
    }

    if (!rep.table.empty())
    {
        size_t largest = 0;
        for (size_t i = 1; i < rep.table.size(); ++i)
            if (rep.table[i].beta > rep.table[largest].beta)
                largest = i;
        rep.dominantAtLargestBeta = rep.table[largest].argmax == rep.minimizerIndex;

        std::vector<size_t> order(rep.table.size());
        for (size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return rep.table[a].beta < rep.table[b].beta; });
        rep.trendsToOne = true;
        double prev = -1.0;
        for (size_t i : order)
        {
            double cur = rep.table[i].normalizedWeights[rep.minimizerIndex];
            if (cur + 1e-12 < prev)
                rep.trendsToOne = false;
            prev = cur;
        }
    }

    if (xhat)
    {
        if (static_cast<int>(xhat->size()) != ctx.nCellsDm1)
            fail(Errc::WrongDimension, "cycle vector has wrong length");
        const int h = ctx.homologyRank();
        RatMatrix coords(h, 1);
        for (int i = 0; i < h; ++i)
        {
            Int acc = 0;
            for (int j = 0; j < ctx.nCellsDm1; ++j)
                acc += ctx.freeMapF(i, j) * (*xhat)[j];
            coords(i, 0) = Rat(acc);
        }
        rep.limitCycle = cotreeSplittingMap(ctx, rep.cotrees[rep.minimizerIndex]) * coords;
    }
    return rep;
}

}  // namespace cohodge
