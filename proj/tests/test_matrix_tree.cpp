#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>

#include "cohodge/corpus.hpp"
#include "cohodge/error.hpp"
#include "cohodge/generators.hpp"
#include "cohodge/hodge.hpp"
#include "cohodge/matrix_tree.hpp"
#include "cohodge/numeric.hpp"

using namespace cohodge;

namespace {

bool failsWith(Errc code, const std::function<void()>& fn)
{
    try
    {
        fn();
    }
    catch (const Error& e)
    {
        return e.code() == code;
    }
    return false;
}

}  // namespace

TEST_CASE("biased laplacian on pinned complexes")
{
    SECTION("two-vertex edge: 1x1 matrix [2]")
    {
        const ChainComplex& c = corpus::twoVertexEdge().complex;
        BiasedLaplacian lap = biasedLaplacian(c, 1, ScalarStructure::zero(c));
        REQUIRE(lap.rank == 1);
        REQUIRE(lap.exactDet.has_value());
        REQUIRE(*lap.exactDet == 2);
        REQUIRE(*lap.exactDualDet == 2);
    }
    SECTION("theta graph: determinant 6")
    {
        const ChainComplex& c = corpus::thetaGraph().complex;
        BiasedLaplacian lap = biasedLaplacian(c, 1, ScalarStructure::zero(c));
        REQUIRE(*lap.exactDet == 6);
    }
    SECTION("mod-2 Moore complex: determinant 4")
    {
        const ChainComplex& c = corpus::mooreMod2().complex;
        BiasedLaplacian lap = biasedLaplacian(c, 1, ScalarStructure::zero(c));
        REQUIRE(*lap.exactDet == 4);
    }
    SECTION("primal and dual determinants agree with random energies")
    {
        SeededRng rng(121);
        for (int trial = 0; trial < 10; ++trial)
        {
            ChainComplex c = randomComplex(rng, {3, 5, 4}, 2);
            for (double beta : {0.5, 2.0})
            {
                ScalarStructure s = randomScalars(rng, c, beta, -2.0, 2.0);
                BiasedLaplacian lap = biasedLaplacian(c, 2, s);
                REQUIRE(relativeError(lap.det, lap.dualDet) <= 1e-10);
            }
        }
    }
    SECTION("primal and dual determinants agree across the corpus")
    {
        SeededRng rng(131);
        for (const ComplexDocument& doc : corpus::all())
            for (int d = 1; d <= doc.complex.topDegree(); ++d)
            {
                ScalarStructure s = randomScalars(rng, doc.complex, 1.0, -1.0, 1.0);
                BiasedLaplacian lap = biasedLaplacian(doc.complex, d, s);
                REQUIRE(relativeError(lap.det, lap.dualDet) <= 1e-10);
            }
    }
}

TEST_CASE("matrix-tree identity on the desk examples")
{
    SECTION("two-vertex edge: 2 = (1/1) * (1+1) * 1")
    {
        const ChainComplex& c = corpus::twoVertexEdge().complex;
        MatrixTreeReport rep = verifyMatrixTree(c, 1, ScalarStructure::zero(c));
        REQUIRE(rep.exactMode);
        REQUIRE(rep.exactEqual);
        REQUIRE(rep.cotreeCount == 2);
        REQUIRE(rep.treeCount == 1);
        REQUIRE(rep.detValue == Catch::Approx(2.0));
    }
    SECTION("theta graph: 6 = (1/1) * 2 * 3")
    {
        MatrixTreeReport rep =
            verifyMatrixTree(corpus::thetaGraph().complex, 1, ScalarStructure::zero(corpus::thetaGraph().complex));
        REQUIRE(rep.exactEqual);
        REQUIRE(rep.detValue == Catch::Approx(6.0));
        REQUIRE(rep.cotreeCount == 2);
        REQUIRE(rep.treeCount == 3);
    }
    SECTION("mod-2 Moore complex: 4 = (1/4) * 4 * 4")
    {
        const ChainComplex& c = corpus::mooreMod2().complex;
        MatrixTreeReport rep = verifyMatrixTree(c, 1, ScalarStructure::zero(c));
        REQUIRE(rep.exactEqual);
        REQUIRE(rep.detValue == Catch::Approx(4.0));
    }
    SECTION("empty boundary space: both sides are one")
    {
        const ChainComplex& c = corpus::circleGraph().complex;
        MatrixTreeReport rep = verifyMatrixTree(c, 1, ScalarStructure::zero(c));
        REQUIRE(rep.pass);
        REQUIRE(rep.detValue == Catch::Approx(1.0));
        REQUIRE(rep.forestValue == Catch::Approx(1.0));
    }
}

TEST_CASE("weighted matrix-tree identity on random complexes")
{
    SeededRng rng(232);
    for (int done = 0; done < 25; ++done)
    {
        ChainComplex c = randomComplex(rng, {3, 5, 5, 3}, 2);
        for (double beta : {0.5, 1.0, 2.0})
        {
            ScalarStructure s = randomScalars(rng, c, beta, -2.0, 2.0);
            for (int d = 1; d <= 3; ++d)
            {
                MatrixTreeReport rep = verifyMatrixTree(c, d, s);
                REQUIRE(rep.relativeError <= 1e-9);
                REQUIRE(rep.pass);
            }
        }
    }
}

TEST_CASE("pseudo-inverse of the boundary restricted to B")
{
    SECTION("theta graph splits equally")
    {
        const ChainComplex& c = corpus::thetaGraph().complex;
        Eigen::MatrixXd a = pseudoInverseA(c, 1, ScalarStructure::zero(c));
        for (int i = 0; i < 3; ++i)
            REQUIRE(std::abs(a(i, 0)) == Catch::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    SECTION("invertible boundary: A inverts the lattice coordinates")
    {
        IntMatrix del{{2, 1}, {1, 1}};  // determinant 1
        ChainComplex c = twoStageComplex(del);
        Eigen::MatrixXd a = pseudoInverseA(c, 1, ScalarStructure::zero(c));
        DegreeContext ctx = makeDegreeContext(c, 1);
        Eigen::MatrixXd composed = toEigen(ctx.coordsP) * a;
        REQUIRE(relativeMatrixError(composed, Eigen::MatrixXd::Identity(2, 2)) <= 1e-12);
    }
    SECTION("matches the kirchhoff projection and the oracle")
    {
        const ChainComplex& t = corpus::torus().complex;
        SeededRng rng(343);
        for (int trial = 0; trial < 4; ++trial)
        {
            ScalarStructure s = randomScalars(rng, t, 1.0, -1.0, 1.0);
            Eigen::MatrixXd a = pseudoInverseA(t, 2, s);
            SplittingOperator p = kirchhoffProjection(t, 2, s);
            REQUIRE(relativeMatrixError(a, p.matrix) <= 1e-10);

            DegreeContext ctx = makeDegreeContext(t, 2);
            std::vector<double> muRaw = modifiedInnerProduct(t, s, 2);
            Eigen::VectorXd mu = Eigen::Map<const Eigen::VectorXd>(muRaw.data(), ctx.nCellsD);
            Eigen::MatrixXd oracle =
                mpPseudoInverseOracle(toEigen(ctx.coordsP), mu, Eigen::VectorXd::Ones(ctx.rankB));
            REQUIRE(relativeMatrixError(a, oracle) <= 1e-10);

            Eigen::MatrixXd composed = toEigen(ctx.coordsP) * a;
            REQUIRE(relativeMatrixError(composed, Eigen::MatrixXd::Identity(ctx.rankB, ctx.rankB)) <= 1e-10);
        }
    }
}

TEST_CASE("two-stage tree-complex identities")
{
    SECTION("doubling map")
    {
        LemmaFinalReport rep = verifyLemmaFinal(corpus::mooreMod2().complex, 1);
        REQUIRE(rep.pass);
        REQUIRE(rep.detL == 4);
        REQUIRE(rep.covolumeSq == 4);
        REQUIRE(rep.theta == 2);
        REQUIRE(rep.dualTheta == 2);
        REQUIRE(rep.dualCovolumeSq == 4);
        REQUIRE(rep.sumSquaredOrders == 4);
    }
    SECTION("identity boundary: everything is one")
    {
        ChainComplex c = twoStageComplex(IntMatrix::identity(3));
        LemmaFinalReport rep = verifyLemmaFinal(c, 1);
        REQUIRE(rep.pass);
        REQUIRE(rep.detL == 1);
        REQUIRE(rep.covolumeSq == 1);
        REQUIRE(rep.sumSquaredOrders == 1);
    }
    SECTION("single column (1,1)")
    {
        ChainComplex c = twoStageComplex(IntMatrix{{1}, {1}});
        LemmaFinalReport rep = verifyLemmaFinal(c, 1);
        REQUIRE(rep.pass);
        REQUIRE(rep.covolumeSq == 2);
        REQUIRE(rep.sumSquaredOrders == 2);
    }
    SECTION("non-injective boundary is rejected")
    {
        REQUIRE(failsWith(Errc::NotATreeComplex, [] { verifyLemmaFinal(corpus::thetaGraph().complex, 1); }));
    }
    SECTION("random rationally injective matrices")
    {
        SeededRng rng(454);
        int done = 0;
        while (done < 20)
        {
            int cols = static_cast<int>(rng.nextInRange(1, 4));
            int rows = cols + static_cast<int>(rng.nextInRange(0, 3));
            IntMatrix m = randomIntMatrix(rng, rows, cols, -3, 3);
            if (rationalRank(m) != cols)
                continue;
            LemmaFinalReport rep = verifyLemmaFinal(twoStageComplex(m), 1);
            REQUIRE(rep.pass);
            ++done;
        }
    }
}

TEST_CASE("determinant variation matches the trace term")
{
    SeededRng rng(565);
    for (int trial = 0; trial < 5; ++trial)
    {
        ChainComplex c = randomComplex(rng, {3, 5, 4}, 2);
        DegreeContext ctx = makeDegreeContext(c, 2);
        if (ctx.rankB == 0)
            continue;
        for (double beta : {1.0, 2.0})
        {
            ScalarStructure s = randomScalars(rng, c, beta, -1.0, 1.0);
            int cell = static_cast<int>(rng.nextInRange(0, ctx.nCellsD - 1));
            VariationReport rep = checkDeterminantVariation(c, 2, s, cell);
            REQUIRE(rep.absoluteError <= 1e-4 * std::max(1.0, std::abs(rep.traceTerm)));
        }
    }
}
