#include "cohodge/forests.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cohodge/error.hpp"
#include "cohodge/numeric.hpp"

namespace cohodge {

namespace {

std::vector<Int> standardBasisVector(int dim, int i)
{
    std::vector<Int> v(dim);
    v[i] = 1;
    return v;
}

/**
 * Lexicographic enumeration of the k-subsets of {0..n-1} whose candidate
 * vectors, together with the seed vectors, are linearly independent over Q.
 * Dependent prefixes are pruned immediately, so only O(#bases * n) pushes
 * happen in practice. The OpenMP kernel splits the search on the first
 * element; per-branch results are concatenated in branch order, which keeps
 * the output identical to the serial pass.
 */
class IndependentSubsetSearch {
  public:
    IndependentSubsetSearch(int dim, std::vector<std::vector<Int>> candidates, std::vector<std::vector<Int>> seed,
                            int k, const EnumerationOptions& opts)
        : dim_(dim), candidates_(std::move(candidates)), seed_(std::move(seed)), k_(k), opts_(opts)
    {
    }

    std::vector<std::vector<int>> run()
    {
        const int n = static_cast<int>(candidates_.size());
        if (k_ == 0)
            return {std::vector<int>{}};
        if (k_ > n)
            return {};

        std::vector<std::vector<std::vector<int>>> branchResults(n - k_ + 1);
        std::atomic<long long> visits{0};
        std::atomic<bool> overBudget{false};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts_.parallel)
#endif
        for (int first = 0; first <= n - k_; ++first)
        {
            if (overBudget.load(std::memory_order_relaxed))
                continue;
            RankTracker tracker(dim_);
            for (const auto& v : seed_)
                tracker.push(v);
            const int base = tracker.rank();
            visits.fetch_add(1, std::memory_order_relaxed);
            if (!tracker.push(candidates_[first]))
                continue;
            std::vector<int> current{first};
            extend(tracker, current, first + 1, base, branchResults[first], visits, overBudget);
        }

        if (overBudget.load() || visits.load() > opts_.budget)
            fail(Errc::BudgetExceeded,
                 "subset search exceeded budget of " + std::to_string(opts_.budget) + " candidate tests");

        std::vector<std::vector<int>> out;
        for (auto& branch : branchResults)
            for (auto& subset : branch)
                out.push_back(std::move(subset));
        return out;
    }

  private:
    void extend(RankTracker& tracker, std::vector<int>& current, int start, int base,
                std::vector<std::vector<int>>& out, std::atomic<long long>& visits, std::atomic<bool>& overBudget)
    {
        if (static_cast<int>(current.size()) == k_)
        {
            out.push_back(current);
            return;
        }
        const int n = static_cast<int>(candidates_.size());
        const int need = k_ - static_cast<int>(current.size());
        for (int i = start; i + need <= n; ++i)
        {
            long long seen = visits.fetch_add(1, std::memory_order_relaxed);
            if (seen >= opts_.budget)
            {
                overBudget.store(true, std::memory_order_relaxed);
                return;
            }
            if (!tracker.push(candidates_[i]))
                continue;
            current.push_back(i);
            extend(tracker, current, i + 1, base, out, visits, overBudget);
            current.pop_back();
            tracker.pop();
            if (overBudget.load(std::memory_order_relaxed))
                return;
        }
    }

    int dim_;
    std::vector<std::vector<Int>> candidates_;
    std::vector<std::vector<Int>> seed_;
    int k_;
    EnumerationOptions opts_;
};

std::vector<std::vector<Int>> matrixColumns(const IntMatrix& m)
{
    std::vector<std::vector<Int>> cols(m.cols());
    for (int j = 0; j < m.cols(); ++j)
        cols[j] = m.column(j);
    return cols;
}

// theta_T: order of the torsion subgroup of Z_{d-1}/∂(Z^T), computed in the
// saturated cycle-lattice basis, with an independent cross-check against
// |det P_T| * theta_X from the image-lattice coordinates.
Int treeInvariant(const DegreeContext& ctx, std::span<const int> subset)
{
    IntMatrix cols = ctx.del.selectColumns(subset);
    Int theta;
    if (ctx.cycleBasisZ.cols() == ctx.nCellsDm1 && ctx.cycleBasisZ == IntMatrix::identity(ctx.nCellsDm1))
    {
        theta = torsionOrder(cols);  // two-stage case: cycles are all chains
    }
    else
    {
        RatMatrix coords = solveFullColumnRank(RatMatrix::fromInt(ctx.cycleBasisZ), RatMatrix::fromInt(cols));
        if (!coords.isIntegral())
            fail(Errc::Internal, "tree columns have non-integral cycle coordinates");
        theta = torsionOrder(coords.asInt());
    }

    Int check = determinant(ctx.coordsP.selectColumns(subset));
    if (check < 0)
        check = -check;
    check *= ctx.thetaX;
    if (check != theta)
        fail(Errc::Internal, "tree invariant mismatch between lattice routes");
    return theta;
}

// a_L: order of H_{d-1}(X, L; Z), computed from the row-deleted boundary
// (direct relative homology) and cross-checked against theta_X * |det F_L|.
Int cotreeInvariant(const DegreeContext& ctx, std::span<const int> subset)
{
    std::vector<int> keptRows = complementIndices(ctx.nCellsDm1, subset);
    Int direct = torsionOrder(ctx.del.selectRows(keptRows));

    Int check = determinant(ctx.freeMapF.selectColumns(subset));
    if (check < 0)
        check = -check;
    check *= ctx.thetaX;
    if (check != direct)
        fail(Errc::Internal, "co-tree invariant mismatch between lattice routes");
    return direct;
}

}  // namespace

std::vector<SpanningTree> enumerateTrees(const DegreeContext& ctx, const EnumerationOptions& opts)
{
    IndependentSubsetSearch search(ctx.nCellsDm1, matrixColumns(ctx.del), {}, ctx.rankB, opts);
    std::vector<std::vector<int>> subsets = search.run();

    std::vector<SpanningTree> trees(subsets.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
    for (size_t i = 0; i < subsets.size(); ++i)
        trees[i] = SpanningTree{subsets[i], treeInvariant(ctx, subsets[i])};
    return trees;
}

std::vector<SpanningTree> enumerateTrees(const ChainComplex& c, int d, const EnumerationOptions& opts)
{
    return enumerateTrees(makeDegreeContext(c, d), opts);
}

std::vector<SpanningCoTree> enumerateCoTrees(const DegreeContext& ctx, const EnumerationOptions& opts)
{
    const int n = ctx.nCellsDm1;
    std::vector<std::vector<Int>> candidates(n);
    for (int i = 0; i < n; ++i)
        candidates[i] = standardBasisVector(n, i);
    IndependentSubsetSearch search(n, std::move(candidates), matrixColumns(ctx.imageBasisG), n - ctx.rankB, opts);
    std::vector<std::vector<int>> subsets = search.run();

    std::vector<SpanningCoTree> cotrees(subsets.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
    for (size_t i = 0; i < subsets.size(); ++i)
        cotrees[i] = SpanningCoTree{subsets[i], cotreeInvariant(ctx, subsets[i])};
    return cotrees;
}

std::vector<SpanningCoTree> enumerateCoTrees(const ChainComplex& c, int d, const EnumerationOptions& opts)
{
    return enumerateCoTrees(makeDegreeContext(c, d), opts);
}

std::vector<SpanningTree> enumerateTreesReference(const DegreeContext& ctx, const EnumerationOptions& opts)
{
    const int n = ctx.nCellsD, k = ctx.rankB;
    std::vector<SpanningTree> out;
    if (k == 0)
    {
        const std::vector<int> empty;
        out.push_back(SpanningTree{empty, treeInvariant(ctx, empty)});
        return out;
    }
    if (k > n)
        return out;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i)
        comb[i] = i;
    long long visits = 0;
    do
    {
        if (++visits > opts.budget)
            fail(Errc::BudgetExceeded, "reference enumeration exceeded budget");
        if (rationalRank(ctx.del.selectColumns(comb)) == k)
            out.push_back(SpanningTree{comb, treeInvariant(ctx, comb)});
    } while (nextCombination(comb, n));
    return out;
}

std::vector<SpanningCoTree> enumerateCoTreesReference(const DegreeContext& ctx, const EnumerationOptions& opts)
{
    const int n = ctx.nCellsDm1, k = n - ctx.rankB;
    std::vector<SpanningCoTree> out;
    if (k == 0)
    {
        const std::vector<int> empty;
        out.push_back(SpanningCoTree{empty, cotreeInvariant(ctx, empty)});
        return out;
    }
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i)
        comb[i] = i;
    long long visits = 0;
    do
    {
        if (++visits > opts.budget)
            fail(Errc::BudgetExceeded, "reference enumeration exceeded budget");
        // L spans C/B rationally iff the kept rows of ∂ still have full rank.
        std::vector<int> keptRows = complementIndices(n, comb);
        if (rationalRank(ctx.del.selectRows(keptRows)) == ctx.rankB)
            out.push_back(SpanningCoTree{comb, cotreeInvariant(ctx, comb)});
    } while (nextCombination(comb, n));
    return out;
}

SpanningCoTree greedyCoTree(const DegreeContext& ctx, const std::vector<double>* energy)
{
    const int n = ctx.nCellsDm1;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    if (energy)
    {
        if (static_cast<int>(energy->size()) != n)
            fail(Errc::MissingScalar, "energy list has wrong length");
        std::set<double> distinct(energy->begin(), energy->end());
        if (static_cast<int>(distinct.size()) != n)
            fail(Errc::DegenerateEnergy, "energy must be injective on the (d-1)-cells");
        std::sort(order.begin(), order.end(), [&](int a, int b) { return (*energy)[a] < (*energy)[b]; });
    }

    RankTracker tracker(n);
    for (const auto& col : matrixColumns(ctx.imageBasisG))
        tracker.push(col);

    const int want = n - ctx.rankB;
    std::vector<int> chosen;
    for (int i = 0; i < n && static_cast<int>(chosen.size()) < want; ++i)
        if (tracker.push(standardBasisVector(n, order[i])))
            chosen.push_back(order[i]);
    if (static_cast<int>(chosen.size()) != want)
        fail(Errc::Internal, "greedy failed to complete a co-tree");
    std::sort(chosen.begin(), chosen.end());
    return SpanningCoTree{chosen, cotreeInvariant(ctx, chosen)};
}

SpanningCoTree greedyCoTree(const ChainComplex& c, int d, const std::vector<double>* energy)
{
    return greedyCoTree(makeDegreeContext(c, d), energy);
}

ForestWeights forestWeights(const ChainComplex& c, int d, const std::vector<SpanningTree>& trees,
                            const std::vector<SpanningCoTree>& cotrees, const ScalarStructure& s)
{
    s.require(c, {d - 1, d});
    ForestWeights w;
    w.exact = s.isZeroOn({d - 1, d});

    w.treeLog.reserve(trees.size());
    for (const SpanningTree& t : trees)
    {
        double exponent = 0.0;
        for (int b : t.cells)
            exponent += s.value(d, b);
        w.treeLog.push_back(2.0 * logAbs(t.torsion) - s.beta * exponent);
        if (w.exact)
            w.treeExact.push_back(t.torsion * t.torsion);
    }
    w.cotreeLog.reserve(cotrees.size());
    for (const SpanningCoTree& l : cotrees)
    {
        double exponent = 0.0;
        for (int b : l.cells)
            exponent += s.value(d - 1, b);
        w.cotreeLog.push_back(2.0 * logAbs(l.relOrder) - s.beta * exponent);
        if (w.exact)
            w.cotreeExact.push_back(l.relOrder * l.relOrder);
    }

    w.treeSumLog = logSumExp(w.treeLog);
    w.cotreeSumLog = logSumExp(w.cotreeLog);
    w.treeSum = std::exp(w.treeSumLog);
    w.cotreeSum = std::exp(w.cotreeSumLog);
    if (w.exact)
    {
        w.treeSumExact = 0;
        for (const Int& v : w.treeExact)
            w.treeSumExact += v;
        w.cotreeSumExact = 0;
        for (const Int& v : w.cotreeExact)
            w.cotreeSumExact += v;
        w.treeSum = w.treeSumExact.get_d();
        w.cotreeSum = w.cotreeSumExact.get_d();
    }
    return w;
}

ChainComplex dualTwoStage(const ChainComplex& c, int d)
{
    DegreeContext ctx = makeDegreeContext(c, d);
    std::vector<std::string> zeroCells, oneCells;
    for (const std::string& name : c.cellNames(d))
        zeroCells.push_back(name + "*");
    for (const std::string& name : c.cellNames(d - 1))
        oneCells.push_back(name + "*");
    return ChainComplex({std::move(zeroCells), std::move(oneCells)}, {ctx.del.transpose()});
}

DualityReport dualize(const ChainComplex& c, int d, const EnumerationOptions& opts)
{
    DegreeContext ctx = makeDegreeContext(c, d);
    DualityReport rep{dualTwoStage(c, d), {}, {}, {}, {}, {}, {}, false, false};
    DegreeContext dualCtx = makeDegreeContext(rep.dualComplex, 1);

    rep.trees = enumerateTrees(ctx, opts);
    rep.dualCoTrees = enumerateCoTrees(dualCtx, opts);
    rep.cotrees = enumerateCoTrees(ctx, opts);
    rep.dualTrees = enumerateTrees(dualCtx, opts);

    auto findCoTree = [](const std::vector<SpanningCoTree>& list, const std::vector<int>& cells) {
        for (size_t i = 0; i < list.size(); ++i)
            if (list[i].cells == cells)
                return static_cast<int>(i);
        return -1;
    };
    auto findTree = [](const std::vector<SpanningTree>& list, const std::vector<int>& cells) {
        for (size_t i = 0; i < list.size(); ++i)
            if (list[i].cells == cells)
                return static_cast<int>(i);
        return -1;
    };

    bool bijective = rep.trees.size() == rep.dualCoTrees.size() && rep.cotrees.size() == rep.dualTrees.size();
    bool invariants = true;
    rep.treeToDualCoTree.assign(rep.trees.size(), -1);
    for (size_t i = 0; i < rep.trees.size(); ++i)
    {
        std::vector<int> comp = complementIndices(ctx.nCellsD, rep.trees[i].cells);
        int j = findCoTree(rep.dualCoTrees, comp);
        rep.treeToDualCoTree[i] = j;
        if (j < 0)
            bijective = false;
        else if (rep.dualCoTrees[j].relOrder != rep.trees[i].torsion)
            invariants = false;
    }
    rep.cotreeToDualTree.assign(rep.cotrees.size(), -1);
    for (size_t i = 0; i < rep.cotrees.size(); ++i)
    {
        std::vector<int> comp = complementIndices(ctx.nCellsDm1, rep.cotrees[i].cells);
        int j = findTree(rep.dualTrees, comp);
        rep.cotreeToDualTree[i] = j;
        if (j < 0)
            bijective = false;
        else if (rep.dualTrees[j].torsion != rep.cotrees[i].relOrder)
            invariants = false;
    }
    rep.bijective = bijective;
    rep.invariantsMatch = bijective && invariants;
    return rep;
}

}  // namespace cohodge
