#include "cohodge/chain_complex.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "cohodge/error.hpp"

namespace cohodge {

ChainComplex::ChainComplex(std::vector<std::vector<std::string>> cells, std::vector<IntMatrix> boundaries)
{
    cells_ = std::move(cells);
    boundaries_ = std::move(boundaries);
    if (cells_.empty())
        cells_.push_back({});
    validate(*this);
}

ChainComplex ChainComplex::unchecked(std::vector<std::vector<std::string>> cells, std::vector<IntMatrix> boundaries)
{
    ChainComplex c;
    c.cells_ = std::move(cells);
    c.boundaries_ = std::move(boundaries);
    if (c.cells_.empty())
        c.cells_.push_back({});
    return c;
}

int ChainComplex::numCells(int k) const
{
    if (k < 0 || k > topDegree())
        return 0;
    return static_cast<int>(cells_[k].size());
}

const std::vector<std::string>& ChainComplex::cellNames(int k) const
{
    static const std::vector<std::string> empty;
    if (k < 0 || k > topDegree())
        return empty;
    return cells_[k];
}

int ChainComplex::cellIndex(int k, const std::string& name) const
{
    const auto& names = cellNames(k);
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return static_cast<int>(i);
    return -1;
}

IntMatrix ChainComplex::boundary(int k) const
{
    if (k <= 0 || k > topDegree())
        return IntMatrix(std::max(numCells(k - 1), 0), std::max(numCells(k), 0));
    return boundaries_.at(k - 1);
}

void validate(const ChainComplex& c)
{
    const int top = c.topDegree();
    for (int k = 0; k <= top; ++k)
    {
        std::set<std::string> seen;
        for (const std::string& name : c.cellNames(k))
        {
            if (name.empty())
                fail(Errc::NotAComplex, "empty cell name in degree " + std::to_string(k));
            if (!seen.insert(name).second)
                fail(Errc::NotAComplex, "duplicate cell name '" + name + "' in degree " + std::to_string(k));
        }
    }
    for (int k = 1; k <= top; ++k)
    {
        IntMatrix del = c.boundary(k);
        if (del.rows() != c.numCells(k - 1) || del.cols() != c.numCells(k))
        {
            std::ostringstream os;
            os << "boundary in degree " << k << " has shape " << del.rows() << "x" << del.cols() << ", expected "
               << c.numCells(k - 1) << "x" << c.numCells(k);
            fail(Errc::NotAComplex, os.str());
        }
    }
    for (int k = 2; k <= top; ++k)
    {
        IntMatrix square = c.boundary(k - 1) * c.boundary(k);
        for (int i = 0; i < square.rows(); ++i)
            for (int j = 0; j < square.cols(); ++j)
                if (square(i, j) != 0)
                {
                    std::ostringstream os;
                    os << "boundary composition nonzero in degree " << k << " at entry (" << i << "," << j
                       << ") = " << square(i, j).get_str();
                    fail(Errc::NotAComplex, os.str());
                }
    }
}

ScalarStructure ScalarStructure::zero(const ChainComplex& c, double beta)
{
    ScalarStructure s;
    s.beta = beta;
    for (int k = 0; k <= c.topDegree(); ++k)
        s.energy[k] = std::vector<double>(c.numCells(k), 0.0);
    return s;
}

void ScalarStructure::require(const ChainComplex& c, std::initializer_list<int> degrees) const
{
    if (!(beta > 0.0) || !std::isfinite(beta))
        fail(Errc::MissingScalar, "inverse temperature must be positive and finite");
    for (int k : degrees)
    {
        if (k < 0)
            continue;  // nothing to cover below degree zero
        auto it = energy.find(k);
        if (it == energy.end())
            fail(Errc::MissingScalar, "no energies for degree " + std::to_string(k));
        if (static_cast<int>(it->second.size()) != c.numCells(k))
            fail(Errc::MissingScalar, "energy list for degree " + std::to_string(k) + " has wrong length");
    }
}

bool ScalarStructure::isZeroOn(std::initializer_list<int> degrees) const
{
    for (int k : degrees)
    {
        auto it = energy.find(k);
        if (it == energy.end())
            continue;
        for (double v : it->second)
            if (v != 0.0)
                return false;
    }
    return true;
}

std::vector<double> modifiedInnerProduct(const ChainComplex& c, const ScalarStructure& s, int k)
{
    if (k < 0 || k > c.topDegree())
        fail(Errc::DegreeOutOfRange, "degree " + std::to_string(k));
    s.require(c, {k});
    std::vector<double> w(c.numCells(k));
    for (int i = 0; i < c.numCells(k); ++i)
        w[i] = std::exp(s.beta * s.value(k, i));
    return w;
}

HomologySummary homology(const ChainComplex& c, int k)
{
    if (k < 0 || k > c.topDegree())
        fail(Errc::DegreeOutOfRange, "degree " + std::to_string(k) + " outside [0, " + std::to_string(c.topDegree()) + "]");

    HomologySummary out;
    out.degree = k;
    out.cycleLatticeBasis = kernelBasis(c.boundary(k));
    IntMatrix bGens = c.boundary(k + 1);
    out.boundaryLatticeBasis = imageBasis(bGens);

    // Boundaries in cycle-lattice coordinates.  The cycle basis is saturated,
    // so the rational solution is integral.
    RatMatrix coords =
        solveFullColumnRank(RatMatrix::fromInt(out.cycleLatticeBasis), RatMatrix::fromInt(bGens));
    if (!coords.isIntegral())
        fail(Errc::Internal, "boundary lattice has non-integral cycle coordinates");
    out.homologyLatticeMap = coords.asInt();

    SmithForm snf = smithNormalForm(out.homologyLatticeMap);
    out.bettiNumber = out.cycleLatticeBasis.cols() - snf.rank;
    out.torsionOrder = 1;
    for (const Int& d : snf.diag)
        out.torsionOrder *= d;
    return out;
}

ChainComplex reduceTwoStage(const ChainComplex& c, int d)
{
    if (d < 1 || d > c.topDegree())
        fail(Errc::DegreeOutOfRange, "degree " + std::to_string(d));
    if (d == 1)
    {
        // Nothing below degree d-1 to collapse; the degree-(0,1) data is kept.
        std::vector<std::vector<std::string>> cells{c.cellNames(0), c.cellNames(1)};
        std::vector<IntMatrix> boundaries{c.boundary(1)};
        return ChainComplex(std::move(cells), std::move(boundaries));
    }
    std::vector<std::vector<std::string>> cells(d + 1);
    cells[d - 1] = c.cellNames(d - 1);
    cells[d] = c.cellNames(d);
    std::vector<IntMatrix> boundaries;
    for (int k = 1; k <= d; ++k)
    {
        if (k == d)
            boundaries.push_back(c.boundary(d));
        else
            boundaries.push_back(IntMatrix(static_cast<int>(cells[k - 1].size()), static_cast<int>(cells[k].size())));
    }
    return ChainComplex(std::move(cells), std::move(boundaries));
}

DegreeContext makeDegreeContext(const ChainComplex& c, int d)
{
    if (d < 1 || d > c.topDegree())
        fail(Errc::DegreeOutOfRange, "degree " + std::to_string(d));

    DegreeContext ctx;
    ctx.d = d;
    ctx.nCellsD = c.numCells(d);
    ctx.nCellsDm1 = c.numCells(d - 1);
    ctx.del = c.boundary(d);

    SmithForm snf = smithNormalForm(ctx.del);
    ctx.rankB = snf.rank;
    ctx.thetaX = 1;
    for (const Int& v : snf.diag)
        ctx.thetaX *= v;

    ctx.imageBasisG = IntMatrix(ctx.nCellsDm1, snf.rank);
    for (int t = 0; t < snf.rank; ++t)
        for (int i = 0; i < ctx.nCellsDm1; ++i)
            ctx.imageBasisG(i, t) = snf.diag[t] * snf.leftInverse(i, t);

    std::vector<int> headRows(snf.rank);
    for (int t = 0; t < snf.rank; ++t)
        headRows[t] = t;
    ctx.coordsP = snf.rightInverse.selectRows(headRows);

    std::vector<int> tailRows;
    for (int i = snf.rank; i < ctx.nCellsDm1; ++i)
        tailRows.push_back(i);
    ctx.freeMapF = snf.left.selectRows(tailRows);

    ctx.cycleBasisZ = kernelBasis(c.boundary(d - 1));
    ctx.bettiDm1 = ctx.cycleBasisZ.cols() - ctx.rankB;
    return ctx;
}

}  // namespace cohodge
