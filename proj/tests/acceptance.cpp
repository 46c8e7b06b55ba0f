// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.  Exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cohodge/corpus.hpp"
#include "cohodge/error.hpp"
#include "cohodge/forests.hpp"
#include "cohodge/generators.hpp"
#include "cohodge/hodge.hpp"
#include "cohodge/matrix_tree.hpp"
#include "cohodge/numeric.hpp"
#include "cohodge/process.hpp"

using namespace cohodge;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<std::string()>& run)
{
    std::string detail;
    bool pass = true;
    auto start = std::chrono::steady_clock::now();
    try
    {
        detail = run();
    }
    catch (const std::exception& e)
    {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!pass)
        ++failures;
    std::printf("%s  %2d. %s  [%s; %.2fs]\n", pass ? "PASS" : "FAIL", number, name.c_str(), detail.c_str(),
                elapsed);
    std::fflush(stdout);
}

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& what)
{
    if (!ok)
        throw CheckFailure(what);
}

Eigen::VectorXd expWeights(const ChainComplex& c, const ScalarStructure& s, int degree)
{
    std::vector<double> w = modifiedInnerProduct(c, s, degree);
    return Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<long>(w.size()));
}

std::vector<Int> randomIntegerCycle(SeededRng& rng, const DegreeContext& ctx)
{
    std::vector<Int> xhat(ctx.nCellsDm1, Int(0));
    for (int j = 0; j < ctx.cycleBasisZ.cols(); ++j)
    {
        long coeff = rng.nextInRange(-2, 2);
        for (int i = 0; i < ctx.nCellsDm1; ++i)
            xhat[i] += coeff * ctx.cycleBasisZ(i, j);
    }
    return xhat;
}

// --------------------------------------------------------------------------

std::string classicalBoltzmannRecovery()
{
    auto start = std::chrono::steady_clock::now();
    SeededRng rng(1001);
    int graphs = 0;
    for (int trial = 0; trial < 20; ++trial)
    {
        int n = 2 + static_cast<int>(rng.nextInRange(0, 8));  // up to 10 vertices
        ChainComplex g = randomConnectedGraph(rng, n, static_cast<int>(rng.nextInRange(0, 2 * n)));
        std::vector<double> energies(n);
        for (double& e : energies)
            e = rng.nextReal(-2.0, 2.0);
        for (double beta : {0.5, 1.0, 5.0})
        {
            ScalarStructure s = ScalarStructure::zero(g, beta);
            s.energy[0] = energies;

            std::vector<Int> xhat(n, Int(0));
            xhat[static_cast<int>(rng.nextInRange(0, n - 1))] = 1;
            BoltzmannDistribution rho = boltzmannDistribution(g, 1, s, xhat);

            double z = 0.0;
            for (double e : energies)
                z += std::exp(-beta * e);
            check(static_cast<int>(rho.cycle.size()) == n, "distribution has one entry per vertex");
            for (int j = 0; j < n; ++j)
            {
                double expected = std::exp(-beta * energies[j]) / z;
                check(relativeError(rho.cycle[j], expected) <= 1e-12, "vertex weight within 1e-12 relative");
            }
        }
        ++graphs;
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check(elapsed < 1.0, "runtime under one second");
    std::ostringstream os;
    os << graphs << " graphs x 3 betas, " << std::fixed << elapsed << "s";
    return os.str();
}

std::string weightedMatrixTree()
{
    auto start = std::chrono::steady_clock::now();
    int exactChecks = 0, floatChecks = 0;

    for (const ComplexDocument& doc : corpus::all())
        for (int d = 1; d <= doc.complex.topDegree(); ++d)
        {
            MatrixTreeReport rep = verifyMatrixTree(doc.complex, d, ScalarStructure::zero(doc.complex));
            check(rep.exactMode, doc.name + ": zero energies run in the rational mode");
            check(rep.pass, doc.name + " degree " + std::to_string(d) + ": exact identity");
            ++exactChecks;
        }

    SeededRng rng(1002);
    const double betas[] = {0.5, 1.0, 2.0};
    for (int i = 0; i < 50; ++i)
    {
        ChainComplex c = randomComplex(rng, {3, 5, 5, 3}, 2);
        int d = 1 + i % 3;
        ScalarStructure s = randomScalars(rng, c, betas[i % 3], -2.0, 2.0);
        MatrixTreeReport rep = verifyMatrixTree(c, d, s);
        check(rep.relativeError <= 1e-9, "random complex " + std::to_string(i) + ": relative error " +
                                             std::to_string(rep.relativeError));
        ++floatChecks;
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check(elapsed < 30.0, "runtime under thirty seconds");
    std::ostringstream os;
    os << exactChecks << " exact corpus checks + " << floatChecks << " random weighted checks, " << std::fixed
       << elapsed << "s";
    return os.str();
}

std::string deskIdentities()
{
    {
        const ChainComplex& c = corpus::thetaGraph().complex;
        BiasedLaplacian lap = biasedLaplacian(c, 1, ScalarStructure::zero(c), ArithmeticMode::Exact);
        auto trees = enumerateTrees(c, 1);
        auto cotrees = enumerateCoTrees(c, 1);
        ForestWeights w = forestWeights(c, 1, trees, cotrees, ScalarStructure::zero(c));
        check(*lap.exactDet == 6, "theta determinant is 6");
        check(w.cotreeSumExact == 2 && w.treeSumExact == 3, "theta factors 2 x 3");
    }
    {
        const ChainComplex& c = corpus::twoVertexEdge().complex;
        BiasedLaplacian lap = biasedLaplacian(c, 1, ScalarStructure::zero(c), ArithmeticMode::Exact);
        check(*lap.exactDet == 2, "two-vertex edge determinant is 2");
    }
    {
        const ChainComplex& c = corpus::mooreMod2().complex;
        BiasedLaplacian lap = biasedLaplacian(c, 1, ScalarStructure::zero(c), ArithmeticMode::Exact);
        auto trees = enumerateTrees(c, 1);
        auto cotrees = enumerateCoTrees(c, 1);
        ForestWeights w = forestWeights(c, 1, trees, cotrees, ScalarStructure::zero(c));
        DegreeContext ctx = makeDegreeContext(c, 1);
        check(*lap.exactDet == 4, "Moore determinant is 4");
        check(ctx.thetaX == 2 && w.cotreeSumExact == 4 && w.treeSumExact == 4, "Moore factors (1/4) x 4 x 4");
    }
    return "theta 6 = 2*3, edge 2, Moore 4 = (1/4)*4*4, all exact";
}

std::string oracleEquivalence()
{
    SeededRng rng(1004);
    int instances = 0;
    while (instances < 30)
    {
        int rows = 2 + static_cast<int>(rng.nextInRange(0, 3));
        int cols = rows + static_cast<int>(rng.nextInRange(0, 3));
        IntMatrix m = randomIntMatrix(rng, rows, cols, -2, 2);
        ChainComplex c = twoStageComplex(m);
        DegreeContext ctx = makeDegreeContext(c, 1);
        if (ctx.rankB == 0)
            continue;
        ScalarStructure s = randomScalars(rng, c, 1.0, -1.5, 1.5);
        Eigen::VectorXd muW = expWeights(c, s, 1), muE = expWeights(c, s, 0);

        // Normal-equation oracles, evaluated in exact rational arithmetic so
        // ill-conditioned instances do not pollute the comparison (the double
        // weights convert to rationals exactly).
        std::vector<Rat> muWExact(ctx.nCellsD), muEExact(ctx.nCellsDm1);
        for (int i = 0; i < ctx.nCellsD; ++i)
            muWExact[i] = Rat(muW(i));
        for (int i = 0; i < ctx.nCellsDm1; ++i)
            muEExact[i] = Rat(muE(i));
        Eigen::MatrixXd pOracle =
            toEigen(mpPseudoInverseOracleExact(RatMatrix::fromInt(ctx.coordsP), muWExact, {}));
        Eigen::MatrixXd iOracle =
            toEigen(mpPseudoInverseOracleExact(RatMatrix::fromInt(ctx.imageBasisG), {}, muEExact));

        // The double-precision oracle agrees with the exact one on its own
        // conditioning scale.
        {
            Eigen::MatrixXd pDouble =
                mpPseudoInverseOracle(toEigen(ctx.coordsP), muW, Eigen::VectorXd::Ones(ctx.rankB));
            check(relativeMatrixError(pDouble, pOracle) <= 1e-6, "double and exact oracles agree");
        }

        // Generic summation formula against the oracle.
        {
            std::vector<double> weights(ctx.nCellsD);
            for (int i = 0; i < ctx.nCellsD; ++i)
                weights[i] = muW(i);
            SplittingOperator sum = mpSummationSurjective(RatMatrix::fromInt(ctx.coordsP), weights);
            check(relativeMatrixError(sum.matrix, pOracle) <= 1e-10, "summation formula matches the oracle");
        }

        SplittingOperator p = kirchhoffProjection(c, 1, s);
        check(relativeMatrixError(p.matrix, pOracle) <= 1e-10, "tree projection matches the oracle");

        SplittingOperator i = cotreeProjection(c, 1, s);
        check(relativeMatrixError(i.matrix, iOracle) <= 1e-10, "co-tree projection matches the oracle");

        SplittingOperator dPlus = kirchhoffBoltzmann(c, 1, s);
        check(relativeMatrixError(dPlus.matrix, pOracle * iOracle) <= 1e-10,
              "boundary pseudo-inverse matches the oracle composition");

        Eigen::MatrixXd del = toEigen(ctx.del);
        check(relativeMatrixError(del * dPlus.matrix * del, del) <= 1e-10, "identity d A d = d");
        check(relativeMatrixError(dPlus.matrix * del * dPlus.matrix, dPlus.matrix) <= 1e-10,
              "identity A d A = A");
        ++instances;
    }
    return std::to_string(instances) + " weighted instances, all four operators within 1e-10";
}

std::string hodgePostconditions()
{
    SeededRng rng(1005);
    std::vector<ChainComplex> cases;
    for (const ComplexDocument& doc : corpus::all())
        cases.push_back(doc.complex);
    for (int i = 0; i < 10; ++i)
        cases.push_back(randomComplex(rng, {3, 5, 4}, 2));

    int checksRun = 0;
    for (const ChainComplex& c : cases)
        for (int d = 1; d <= c.topDegree(); ++d)
        {
            DegreeContext ctx = makeDegreeContext(c, d);
            ScalarStructure s = randomScalars(rng, c, 1.0, -1.5, 1.5);
            std::vector<Int> xhat = randomIntegerCycle(rng, ctx);

            HodgeOptions opts;
            BoltzmannDistribution rho = boltzmannDistribution(c, d, s, xhat, opts);
            SplittingOperator psi = boltzmannSplitting(c, d, s, opts);

            // Exact cycle condition: applied to the class of xhat, every
            // certificate summand is a cycle over Q, hence the assembled
            // distribution is one exactly (the float weights only rescale
            // exact cycles).
            RatMatrix lower = RatMatrix::fromInt(c.boundary(d - 1));
            RatMatrix classCoords(ctx.homologyRank(), 1);
            for (int i = 0; i < ctx.homologyRank(); ++i)
            {
                Int acc = 0;
                for (int j = 0; j < ctx.nCellsDm1; ++j)
                    acc += ctx.freeMapF(i, j) * xhat[j];
                classCoords(i, 0) = Rat(acc);
            }
            for (const ForestTerm& t : psi.certificate)
                check((lower * (t.summand * classCoords)).isZero(),
                      "each co-tree summand applied to the class is exactly a cycle");

            Eigen::Map<const Eigen::VectorXd> rhoVec(rho.cycle.data(), static_cast<long>(rho.cycle.size()));
            Eigen::MatrixXd lowerD = toEigen(c.boundary(d - 1));
            if (lowerD.rows() > 0)
                check(maxAbs(lowerD * rhoVec) <=
                          1e-12 * std::max(1.0, maxAbs(lowerD) * std::max(1.0, maxAbs(rhoVec))),
                      "numeric boundary of the representative vanishes");

            // Co-closedness in the modified inner product.
            Eigen::VectorXd mu = expWeights(c, s, d - 1);
            Eigen::MatrixXd del = toEigen(ctx.del);
            double scale = std::max(1.0, maxAbs(del) * std::max(1.0, maxAbs(rhoVec)));
            check(maxAbs(del.transpose() * (mu.asDiagonal() * rhoVec)) <= 1e-10 * scale,
                  "co-closed against every d-cell");

            // Class preservation, exactly in the rational regime.
            ScalarStructure zero = ScalarStructure::zero(c);
            BoltzmannDistribution rhoExact = boltzmannDistribution(c, d, zero, xhat);
            check(rhoExact.cycleExact.has_value(), "zero energies give the exact mode");
            RatMatrix freeMap = RatMatrix::fromInt(ctx.freeMapF);
            RatMatrix xr(ctx.nCellsDm1, 1);
            for (int i = 0; i < ctx.nCellsDm1; ++i)
                xr(i, 0) = Rat(xhat[i]);
            check(freeMap * *rhoExact.cycleExact == freeMap * xr, "class preserved exactly");
            ++checksRun;
        }
    return std::to_string(checksRun) + " (complex, degree) cases";
}

std::string treeCoTreeDuality()
{
    SeededRng rng(1006);
    int done = 0;
    while (done < 30)
    {
        int rows = 1 + static_cast<int>(rng.nextInRange(0, 4));
        int cols = 1 + static_cast<int>(rng.nextInRange(0, 5));
        ChainComplex c = twoStageComplex(randomIntMatrix(rng, rows, cols, -3, 3));
        DualityReport rep = dualize(c, 1);
        check(rep.bijective, "complementation is a bijection");
        check(rep.invariantsMatch, "torsion orders match across the bijection");

        std::multiset<std::string> thetas, orders;
        for (const SpanningTree& t : rep.trees)
            thetas.insert(t.torsion.get_str());
        for (const SpanningCoTree& l : rep.dualCoTrees)
            orders.insert(l.relOrder.get_str());
        check(thetas == orders, "multisets agree exactly");
        ++done;
    }
    return "30 random two-stage complexes";
}

std::string lowTemperatureQuantization()
{
    int covered = 0;
    for (const ComplexDocument& doc : corpus::all())
        for (int d = 1; d <= doc.complex.topDegree(); ++d)
        {
            DegreeContext ctx = makeDegreeContext(doc.complex, d);
            // Injective energies with distinct subset sums: scaled powers of two.
            ScalarStructure s = ScalarStructure::zero(doc.complex, 1.0);
            std::vector<double> energy(ctx.nCellsDm1);
            for (int i = 0; i < ctx.nCellsDm1; ++i)
                energy[i] = 0.5 * std::ldexp(1.0, i);
            s.energy[d - 1] = energy;

            const std::vector<double> grid{10.0, 50.0, 100.0};
            LowTemperatureReport rep = lowTemperatureLimit(doc.complex, d, s, grid);
            check(rep.greedyAgrees, doc.name + ": greedy minimizer equals the exhaustive argmin");

            bool any = false;
            for (const LowTemperatureRow& row : rep.table)
            {
                if (row.beta < rep.betaThreshold)
                    continue;
                any = true;
                double bound = rep.cotrees.size() <= 1
                                   ? 0.0
                                   : 1.0 - std::exp(-row.beta * rep.energyGap / 2.0);
                check(row.normalizedWeights[rep.minimizerIndex] >= bound,
                      doc.name + ": minimizer weight beats 1 - exp(-beta*gap/2) at beta " +
                          std::to_string(row.beta));
            }
            check(any, doc.name + ": at least one grid beta lies beyond the threshold");
            check(rep.dominantAtLargestBeta, doc.name + ": minimizer dominates at the largest beta");
            check(rep.trendsToOne, doc.name + ": minimizer weight is non-decreasing in beta");
            ++covered;
        }
    return std::to_string(covered) + " corpus (complex, degree) cases at beta in {10, 50, 100}";
}

std::string torusExplorer()
{
    const ComplexDocument doc = corpus::torus();
    const ChainComplex& t = doc.complex;
    const std::vector<Int>& meridian = doc.cycles.at("meridian").coefficients;
    ScalarStructure s = ScalarStructure::zero(t);

    CycleGraph graph = explore(t, 2, s, meridian, 200000, 23);
    std::set<std::vector<Int>> seen;
    for (const CycleVertex& v : graph.vertices)
        seen.insert(v.chain);

    IntMatrix del = t.boundary(2);
    const int e1 = t.cellIndex(2, "e1"), e2 = t.cellIndex(2, "e2");
    auto member = [&](long a, long b) {
        std::vector<Int> z = meridian;
        for (int i = 0; i < 8; ++i)
            z[i] += a * del(i, e1) + b * del(i, e2);
        return seen.count(z) == 1;
    };
    for (long k = 0; k <= 5; ++k)
    {
        check(member(2 * k + 1, -2 * k), "odd family at k=" + std::to_string(k));
        check(member(2 * k, -2 * k), "even family at k=" + std::to_string(k));
    }

    CycleGraph capped = explore(t, 2, s, meridian, 50, 1000);
    check(capped.vertices.size() == 50 && capped.truncatedByCap, "at least 50 distinct vertices under a cap");
    std::ostringstream os;
    os << graph.vertices.size() << " cycles at depth 23; both jump families for k <= 5";
    return os.str();
}

std::string stationaryMatchesBoltzmann()
{
    SeededRng rng(1009);
    for (int trial = 0; trial < 10; ++trial)
    {
        int n = 2 + static_cast<int>(rng.nextInRange(0, 7));
        ChainComplex g = randomConnectedGraph(rng, n, static_cast<int>(rng.nextInRange(0, n)));
        ScalarStructure s = randomScalars(rng, g, rng.nextReal(0.5, 2.0), -2.0, 2.0);
        StationaryReport rep = compareStationaryD1(g, s);
        check(rep.maxAbsDifference <= 1e-10,
              "kernel of the master operator matches the distribution (diff " +
                  std::to_string(rep.maxAbsDifference) + ")");
    }
    return "10 random graphs, random energies, arbitrary barriers";
}

std::string treeComplexIdentitySuite()
{
    SeededRng rng(1010);
    int done = 0;
    while (done < 20)
    {
        int cols = 1 + static_cast<int>(rng.nextInRange(0, 3));
        int rows = cols + static_cast<int>(rng.nextInRange(0, 3));
        IntMatrix m = randomIntMatrix(rng, rows, cols, -3, 3);
        if (rationalRank(m) != cols)
            continue;
        LemmaFinalReport rep = verifyLemmaFinal(twoStageComplex(m), 1);
        check(rep.detEqualsCovolume, "determinant equals the squared covolume");
        check(rep.thetasEqual, "dual torsion matches");
        check(rep.dualCovolumeIsThetaSq, "dual covolume is the torsion squared");
        check(rep.ordersMatchDualTorsions, "co-tree orders match dual tree torsions");
        check(rep.covolumeIsSumOfSquares, "covolume decomposes as the sum of squared orders");
        ++done;
    }
    return "20 random rationally injective integer matrices, entries in [-3, 3], all exact";
}

}  // namespace

int main()
{
    std::printf("acceptance suite\n================\n");
    criterion(1, "classical Boltzmann recovery on random graphs", classicalBoltzmannRecovery);
    criterion(2, "improved weighted matrix-tree identity", weightedMatrixTree);
    criterion(3, "desk-scale hand-checked identities", deskIdentities);
    criterion(4, "pseudo-inverse oracle equivalence", oracleEquivalence);
    criterion(5, "Hodge-problem postconditions", hodgePostconditions);
    criterion(6, "tree-co-tree duality", treeCoTreeDuality);
    criterion(7, "low-temperature quantization", lowTemperatureQuantization);
    criterion(8, "torus cycle-incidence explorer", torusExplorer);
    criterion(9, "degree-1 stationarity", stationaryMatchesBoltzmann);
    criterion(10, "tree-complex identity suite", treeComplexIdentitySuite);

    if (failures == 0)
        std::printf("================\nall criteria passed\n");
    else
        std::printf("================\n%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
