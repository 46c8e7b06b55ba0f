#include "cohodge/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cohodge/error.hpp"

namespace cohodge {

unsigned long SeededRng::next()
{
    // xorshift64* keeps the stream platform-independent.
    unsigned long x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1DULL;
}

long SeededRng::nextInRange(long lo, long hi)
{
    if (hi < lo)
        fail(Errc::Internal, "bad range");
    unsigned long span = static_cast<unsigned long>(hi - lo) + 1UL;
    return lo + static_cast<long>(next() % span);
}

double SeededRng::nextReal(double lo, double hi)
{
    double u = static_cast<double>(next() >> 11) / 9007199254740992.0;  // 53-bit mantissa
    return lo + u * (hi - lo);
}

IntMatrix randomIntMatrix(SeededRng& rng, int rows, int cols, long lo, long hi)
{
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = rng.nextInRange(lo, hi);
    return m;
}

ChainComplex twoStageComplex(const IntMatrix& del)
{
    std::vector<std::string> zeroCells, oneCells;
    for (int i = 0; i < del.rows(); ++i)
        zeroCells.push_back("b" + std::to_string(i));
    for (int j = 0; j < del.cols(); ++j)
        oneCells.push_back("t" + std::to_string(j));
    return ChainComplex({std::move(zeroCells), std::move(oneCells)}, {del});
}

ChainComplex randomConnectedGraph(SeededRng& rng, int vertices, int extraEdges)
{
    if (vertices < 1)
        fail(Errc::Internal, "graph needs at least one vertex");
    std::set<std::pair<int, int>> edges;
    // Random spanning tree: attach each vertex to an earlier one.
    for (int v = 1; v < vertices; ++v)
    {
        int u = static_cast<int>(rng.nextInRange(0, v - 1));
        edges.emplace(u, v);
    }
    const long maxEdges = static_cast<long>(vertices) * (vertices - 1) / 2;
    for (int k = 0; k < extraEdges && static_cast<long>(edges.size()) < maxEdges;)
    {
        int u = static_cast<int>(rng.nextInRange(0, vertices - 1));
        int v = static_cast<int>(rng.nextInRange(0, vertices - 1));
        if (u == v)
            continue;
        if (u > v)
            std::swap(u, v);
        if (edges.emplace(u, v).second)
            ++k;
        else
            ++k;  // duplicate draw still consumes a slot; keeps runs bounded
    }

    std::vector<std::string> names0, names1;
    for (int v = 0; v < vertices; ++v)
        names0.push_back("v" + std::to_string(v));
    IntMatrix del(vertices, static_cast<int>(edges.size()));
    int j = 0;
    for (const auto& [u, v] : edges)
    {
        names1.push_back("e" + std::to_string(u) + "_" + std::to_string(v));
        del(u, j) = -1;
        del(v, j) = 1;
        ++j;
    }
    return ChainComplex({std::move(names0), std::move(names1)}, {del});
}

ChainComplex randomComplex(SeededRng& rng, const std::vector<int>& cellsPerDegree, long coeffBound)
{
    const int top = static_cast<int>(cellsPerDegree.size()) - 1;
    if (top < 0)
        fail(Errc::Internal, "empty degree list");
    std::vector<std::vector<std::string>> cells(top + 1);
    for (int k = 0; k <= top; ++k)
        for (int i = 0; i < cellsPerDegree[k]; ++i)
            cells[k].push_back("c" + std::to_string(k) + "_" + std::to_string(i));

    std::vector<IntMatrix> boundaries;
    IntMatrix previous(0, cellsPerDegree[0]);  // ∂_0
    for (int k = 1; k <= top; ++k)
    {
        // ∂_k = (kernel basis of ∂_{k-1}) * random, so ∂_{k-1} ∘ ∂_k = 0.
        IntMatrix kernel = kernelBasis(previous);
        IntMatrix mix = randomIntMatrix(rng, kernel.cols(), cellsPerDegree[k], -coeffBound, coeffBound);
        IntMatrix del = kernel * mix;
        boundaries.push_back(del);
        previous = std::move(del);
    }
    return ChainComplex(std::move(cells), std::move(boundaries));
}

ScalarStructure randomScalars(SeededRng& rng, const ChainComplex& c, double beta, double lo, double hi)
{
    ScalarStructure s;
    s.beta = beta;
    for (int k = 0; k <= c.topDegree(); ++k)
    {
        std::vector<double> values(c.numCells(k));
        for (double& v : values)
            v = rng.nextReal(lo, hi);
        s.energy[k] = std::move(values);
    }
    return s;
}

std::vector<double> injectiveEnergies(SeededRng& rng, int count, double step)
{
    std::vector<double> values(count);
    for (int i = 0; i < count; ++i)
        values[i] = step * (i + 1) + rng.nextReal(0.0, step / 16.0);
    // Shuffle so the minimum is not always the first cell.
    for (int i = count - 1; i > 0; --i)
    {
        int j = static_cast<int>(rng.nextInRange(0, i));
        std::swap(values[i], values[j]);
    }
    return values;
}

}  // namespace cohodge
