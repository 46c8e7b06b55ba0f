#pragma once

#include <optional>
#include <vector>

#include "cohodge/chain_complex.hpp"
#include "cohodge/intmat.hpp"

namespace cohodge {

/**
 * A d-dimensional spanning tree: a subset of d-cells whose boundary columns
 * map isomorphically-mod-torsion onto B_{d-1}. `torsion` is the order of the
 * torsion subgroup of H_{d-1} of the tree subcomplex.
 */
struct SpanningTree {
    std::vector<int> cells;  // indices into X_d, strictly increasing
    Int torsion = 1;
};

/**
 * A (d-1)-dimensional spanning co-tree: a subset of (d-1)-cells spanning
 * C_{d-1}/B_{d-1} rationally. `relOrder` is the order of the finite relative
 * homology group H_{d-1}(X, L; Z).
 */
struct SpanningCoTree {
    std::vector<int> cells;  // indices into X_{d-1}, strictly increasing
    Int relOrder = 1;
};

struct EnumerationOptions {
    long long budget = 10'000'000;  // subset tests allowed before BudgetExceeded
    bool parallel = true;           // OpenMP kernel; false forces the serial path
};

/// Complete list of d-spanning trees, in lexicographic subset order.
/// Throws BudgetExceeded when the search visits more candidate subsets than
/// the configured budget.
std::vector<SpanningTree> enumerateTrees(const ChainComplex& c, int d, const EnumerationOptions& opts = {});
std::vector<SpanningTree> enumerateTrees(const DegreeContext& ctx, const EnumerationOptions& opts = {});

/// Complete list of (d-1)-spanning co-trees, lexicographic.
std::vector<SpanningCoTree> enumerateCoTrees(const ChainComplex& c, int d, const EnumerationOptions& opts = {});
std::vector<SpanningCoTree> enumerateCoTrees(const DegreeContext& ctx, const EnumerationOptions& opts = {});

/// Serial reference enumerators: plain iteration over all subsets of the
/// correct cardinality with a full rational-rank test per subset.  Kept as
/// the ground truth the pruned/parallel kernels are tested against.
std::vector<SpanningTree> enumerateTreesReference(const DegreeContext& ctx, const EnumerationOptions& opts = {});
std::vector<SpanningCoTree> enumerateCoTreesReference(const DegreeContext& ctx, const EnumerationOptions& opts = {});

/**
 * One valid spanning co-tree by matroid greedy.  With `energy` supplied the
 * result is the unique co-tree minimizing the energy sum; the energy must be
 * injective on the (d-1)-cells (DegenerateEnergy otherwise).  Without
 * energies, cells are taken in ingestion order.
 */
SpanningCoTree greedyCoTree(const DegreeContext& ctx, const std::vector<double>* energy = nullptr);
SpanningCoTree greedyCoTree(const ChainComplex& c, int d, const std::vector<double>* energy = nullptr);

/**
 * Per-forest weights w_T = torsion^2 * exp(-beta * sum_W) and
 * tau_L = relOrder^2 * exp(-beta * sum_E), with the exponents accumulated in
 * the log domain so large beta cannot underflow.  When every energy on
 * degrees d-1 and d vanishes the weights are exact integers.
 */
struct ForestWeights {
    std::vector<double> treeLog;    // ln w_T, aligned with the tree list
    std::vector<double> cotreeLog;  // ln tau_L
    double treeSumLog = 0.0;        // ln Delta_W
    double cotreeSumLog = 0.0;      // ln Nabla_E
    double treeSum = 0.0;           // Delta_W
    double cotreeSum = 0.0;         // Nabla_E
    bool exact = false;
    std::vector<Int> treeExact;    // torsion^2 (exact mode only)
    std::vector<Int> cotreeExact;  // relOrder^2
    Int treeSumExact = 0;
    Int cotreeSumExact = 0;
};

ForestWeights forestWeights(const ChainComplex& c, int d, const std::vector<SpanningTree>& trees,
                            const std::vector<SpanningCoTree>& cotrees, const ScalarStructure& s);

/**
 * Tree-co-tree duality: complementation identifies the spanning trees of
 * ∂ with the spanning co-trees of the adjoint ∂*, matching torsion
 * invariants. dualComplex is a two-stage complex carrying ∂^T.
 */
struct DualityReport {
    ChainComplex dualComplex;
    std::vector<SpanningTree> trees;            // trees of ∂
    std::vector<SpanningCoTree> dualCoTrees;    // co-trees of ∂*
    std::vector<int> treeToDualCoTree;          // index pairing via complement
    std::vector<SpanningCoTree> cotrees;        // co-trees of ∂
    std::vector<SpanningTree> dualTrees;        // trees of ∂*
    std::vector<int> cotreeToDualTree;
    bool bijective = false;
    bool invariantsMatch = false;  // multiset {theta_T} == {a_{T complement}} both ways
};

DualityReport dualize(const ChainComplex& c, int d, const EnumerationOptions& opts = {});

/// Two-stage complex whose degree-1 boundary is the transpose of ∂_d,
/// with dual cell names.
ChainComplex dualTwoStage(const ChainComplex& c, int d);

}  // namespace cohodge
