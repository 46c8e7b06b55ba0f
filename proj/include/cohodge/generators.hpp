#pragma once

#include <vector>

#include "cohodge/chain_complex.hpp"

namespace cohodge {

/// Deterministic pseudo-random stream (mt19937_64 with explicit reduction so
/// results are identical across platforms).
class SeededRng {
  public:
    explicit SeededRng(unsigned long seed) : state_(seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL) {}

    unsigned long next();
    long nextInRange(long lo, long hi);        // inclusive bounds
    double nextReal(double lo, double hi);

  private:
    unsigned long state_;
};

/// Random integer matrix with entries in [lo, hi].
IntMatrix randomIntMatrix(SeededRng& rng, int rows, int cols, long lo, long hi);

/// Wraps a boundary matrix as a two-stage complex in degrees (1, 0).
ChainComplex twoStageComplex(const IntMatrix& del);

/// Random connected simple graph on `vertices` vertices: a random spanning
/// tree plus `extraEdges` additional distinct edges.
ChainComplex randomConnectedGraph(SeededRng& rng, int vertices, int extraEdges);

/**
 * Random chain complex with the given number of cells per degree and
 * ∂∘∂ = 0 by construction: each boundary factors through a saturated basis
 * of the kernel of the previous one.
 */
ChainComplex randomComplex(SeededRng& rng, const std::vector<int>& cellsPerDegree, long coeffBound = 2);

/// Random scalar structure covering all degrees, energies uniform in [lo, hi].
ScalarStructure randomScalars(SeededRng& rng, const ChainComplex& c, double beta, double lo, double hi);

/// Injective energies on one degree: a shuffled, well-separated ramp.
std::vector<double> injectiveEnergies(SeededRng& rng, int count, double step = 1.0);

}  // namespace cohodge
