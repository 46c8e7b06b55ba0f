#include "cohodge/process.hpp"

#include <cmath>
#include <deque>
#include <map>

#include "cohodge/error.hpp"
#include "cohodge/numeric.hpp"

namespace cohodge {

std::vector<PseudoRegularViolation> checkPseudoRegular(const ChainComplex& c, int d)
{
    if (d < 1 || d > c.topDegree())
        fail(Errc::DegreeOutOfRange, "degree " + std::to_string(d));
    std::vector<PseudoRegularViolation> out;
    IntMatrix del = c.boundary(d);
    for (int j = 0; j < del.cols(); ++j)
        for (int i = 0; i < del.rows(); ++i)
        {
            const Int& v = del(i, j);
            if (v != 0 && v != 1 && v != -1)
                out.push_back(PseudoRegularViolation{j, i, v});
        }
    return out;
}

CycleGraph explore(const ChainComplex& c, int d, const ScalarStructure& s, const std::vector<Int>& xhat,
                   int maxVertices, int maxDepth, RateConvention convention)
{
    if (!checkPseudoRegular(c, d).empty())
        fail(Errc::NotPseudoRegular, "complex is not pseudo-regular in degree " + std::to_string(d));
    s.require(c, {d - 1, d});

    const int n = c.numCells(d - 1);
    if (static_cast<int>(xhat.size()) != n)
        fail(Errc::WrongDimension, "cycle vector has wrong length");
    IntMatrix lower = c.boundary(d - 1);
    for (int i = 0; i < lower.rows(); ++i)
    {
        Int acc = 0;
        for (int j = 0; j < lower.cols(); ++j)
            acc += lower(i, j) * xhat[j];
        if (acc != 0)
            fail(Errc::NotACycle, "base chain has nonzero boundary");
    }

    IntMatrix del = c.boundary(d);
    const int nD = c.numCells(d);

    // Rate of the directed edge (f, e): under the unified convention the
    // (d-1)-cell energy enters positively and the d-cell energy negatively.
    auto logRate = [&](int f, int e) {
        double a = s.value(d - 1, f), b = s.value(d, e);
        if (convention == RateConvention::Swapped)
            std::swap(a, b);
        return s.beta * (a - b);
    };

    CycleGraph graph;
    graph.degree = d;
    graph.convention = convention;

    std::map<std::vector<Int>, int> index;
    std::deque<int> frontier;
    graph.vertices.push_back(CycleVertex{xhat, 0});
    index.emplace(xhat, 0);
    frontier.push_back(0);

    while (!frontier.empty())
    {
        const int vi = frontier.front();
        frontier.pop_front();
        const std::vector<Int> chain = graph.vertices[vi].chain;  // copy: vector may reallocate
        const int depth = graph.vertices[vi].depth;
        if (depth >= maxDepth)
            continue;
        for (int f = 0; f < n; ++f)
        {
            if (chain[f] == 0)
                continue;
            for (int e = 0; e < nD; ++e)
            {
                const Int& coeff = del(f, e);
                if (coeff == 0)
                    continue;
                // zeta' = zeta - <zeta,f><de,f> de; pseudo-regularity makes
                // <zeta',f> = 0 automatic.
                std::vector<Int> next(chain);
                Int scale = chain[f] * coeff;
                for (int i = 0; i < n; ++i)
                    next[i] -= scale * del(i, e);
                if (next[f] != 0)
                    fail(Errc::Internal, "elementary homology left the pivot cell occupied");

                auto it = index.find(next);
                int ti;
                if (it != index.end())
                {
                    ti = it->second;
                }
                else
                {
                    if (static_cast<int>(graph.vertices.size()) >= maxVertices)
                    {
                        graph.truncatedByCap = true;
                        continue;
                    }
                    ti = static_cast<int>(graph.vertices.size());
                    graph.vertices.push_back(CycleVertex{next, depth + 1});
                    index.emplace(std::move(next), ti);
                    frontier.push_back(ti);
                }
                double lr = logRate(f, e);
                graph.edges.push_back(CycleEdge{vi, ti, f, e, std::exp(lr), lr});
            }
        }
    }
    return graph;
}

Eigen::MatrixXd masterOperatorD1(const CycleGraph& graph)
{
    if (graph.degree != 1)
        fail(Errc::WrongDimension, "master operator requires a degree-1 exploration");
    const int n = static_cast<int>(graph.vertices.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (const CycleEdge& edge : graph.edges)
    {
        h(edge.to, edge.from) += edge.rate;
        h(edge.from, edge.from) -= edge.rate;
    }
    return h;
}

Eigen::VectorXd stationaryDistribution(const Eigen::MatrixXd& generator)
{
    const int n = static_cast<int>(generator.rows());
    if (n == 0)
        return Eigen::VectorXd();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(generator);
    Eigen::MatrixXd kernel = lu.kernel();
    if (kernel.cols() < 1)
        fail(Errc::Internal, "generator has trivial kernel");
    Eigen::VectorXd v = kernel.col(0);
    if (v.sum() < 0)
        v = -v;
    double total = v.sum();
    if (total <= 0)
        fail(Errc::Internal, "kernel vector is not signed consistently");
    return v / total;
}

StationaryReport compareStationaryD1(const ChainComplex& c, const ScalarStructure& s, double tolerance)
{
    const int n0 = c.numCells(0);
    if (n0 == 0)
        fail(Errc::WrongDimension, "graph has no vertices");

    // Base cycle: the first vertex.
    std::vector<Int> base(n0, 0);
    base[0] = 1;
    CycleGraph graph = explore(c, 1, s, base, n0 + 1, 8 * n0 + 8, RateConvention::Unified);

    StationaryReport rep;
    rep.vertexToCell.resize(graph.vertices.size(), -1);
    for (size_t v = 0; v < graph.vertices.size(); ++v)
    {
        int cell = -1;
        for (int i = 0; i < n0; ++i)
        {
            const Int& coeff = graph.vertices[v].chain[i];
            if (coeff == 0)
                continue;
            if (coeff != 1 || cell >= 0)
                fail(Errc::Internal, "degree-1 exploration left single-vertex states");
            cell = i;
        }
        rep.vertexToCell[v] = cell;
    }

    Eigen::MatrixXd h = masterOperatorD1(graph);
    rep.stationary = stationaryDistribution(h);

    BoltzmannDistribution rho = boltzmannDistribution(c, 1, s, base);
    rep.boltzmann.resize(graph.vertices.size(), 0.0);
    rep.maxAbsDifference = 0.0;
    for (size_t v = 0; v < graph.vertices.size(); ++v)
    {
        rep.boltzmann[v] = rho.cycle[rep.vertexToCell[v]];
        rep.maxAbsDifference = std::max(rep.maxAbsDifference, std::abs(rep.boltzmann[v] - rep.stationary(v)));
    }
    rep.pass = rep.maxAbsDifference <= tolerance;
    return rep;
}

}  // namespace cohodge
