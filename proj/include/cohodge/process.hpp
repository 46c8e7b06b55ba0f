#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "cohodge/chain_complex.hpp"
#include "cohodge/hodge.hpp"

namespace cohodge {

/**
 * Transition-rate convention for the jump process.  The unified convention
 * reads exp(beta * (E_{d-1}(f) - E_d(e))): the value on the (d-1)-cell minus
 * the value on the jumped d-cell, which at d = 1 is the Arrhenius rate
 * exp(beta * (E_i - W_alpha)).  The swapped convention exchanges which of the
 * two user-supplied maps applies to which degree (the literal symbol order of
 * the higher-degree rate formula); it is selectable from the CLI.
 */
enum class RateConvention { Unified, Swapped };

struct PseudoRegularViolation {
    int cell = 0;      // d-cell index
    int faceCell = 0;  // (d-1)-cell index
    Int coefficient = 0;
};

/// Scans the degree-d boundary for coefficients outside {0, +-1}.
std::vector<PseudoRegularViolation> checkPseudoRegular(const ChainComplex& c, int d);

/// A state of the jump process: an integer (d-1)-cycle.
struct CycleVertex {
    std::vector<Int> chain;  // C_{d-1} coordinates
    int depth = 0;           // BFS distance from the base cycle
};

/// Elementary homology from `from` to `to` across d-cell `cell` at
/// (d-1)-cell `faceCell`, carrying its Arrhenius rate.
struct CycleEdge {
    int from = 0;
    int to = 0;
    int faceCell = 0;
    int cell = 0;
    double rate = 1.0;
    double logRate = 0.0;
};

struct CycleGraph {
    int degree = 1;
    std::vector<CycleVertex> vertices;  // vertex 0 is the base cycle
    std::vector<CycleEdge> edges;
    bool truncatedByCap = false;
    RateConvention convention = RateConvention::Unified;
};

/**
 * Breadth-first exploration of the cycle-incidence graph generated by `xhat`:
 * vertices are the integer cycles reachable by elementary homologies within
 * `maxDepth` jumps, capped at `maxVertices`.  Requires a d-pseudo-regular
 * complex and a cycle input.
 */
CycleGraph explore(const ChainComplex& c, int d, const ScalarStructure& s, const std::vector<Int>& xhat,
                   int maxVertices, int maxDepth, RateConvention convention = RateConvention::Unified);

/// Generator of the continuous-time process on an explored degree-1 graph:
/// column sums vanish and H_{ji} accumulates the rates of the i -> j edges.
Eigen::MatrixXd masterOperatorD1(const CycleGraph& graph);

/// Nonnegative kernel vector of a generator matrix, normalized to sum 1.
Eigen::VectorXd stationaryDistribution(const Eigen::MatrixXd& generator);

struct StationaryReport {
    Eigen::VectorXd stationary;     // kernel of the master operator
    std::vector<double> boltzmann;  // rho^B per vertex
    std::vector<int> vertexToCell;  // explored vertex -> 0-cell index
    double maxAbsDifference = 0.0;
    bool pass = false;
};

/// Compares the stationary distribution of the degree-1 process with the
/// Boltzmann distribution from the co-tree splitting, to `tolerance`.
StationaryReport compareStationaryD1(const ChainComplex& c, const ScalarStructure& s, double tolerance = 1e-10);

}  // namespace cohodge
