#pragma once

#include <map>
#include <string>
#include <vector>

#include "cohodge/intmat.hpp"

namespace cohodge {

/**
 * A finite chain complex of free abelian groups with named cells in a
 * contiguous range of degrees [0..D]. boundary(k) maps C_k -> C_{k-1};
 * columns are indexed by the k-cells in ingestion order, which is canonical
 * and preserved in every derived matrix.
 *
 * Instances are immutable after construction and safe to share across
 * threads.
 */
class ChainComplex {
  public:
    ChainComplex(std::vector<std::vector<std::string>> cells, std::vector<IntMatrix> boundaries);

    /// Builds without running validation (for tests that need to construct
    /// invalid input and for validate() itself).
    static ChainComplex unchecked(std::vector<std::vector<std::string>> cells, std::vector<IntMatrix> boundaries);

    int topDegree() const { return static_cast<int>(cells_.size()) - 1; }
    int numCells(int k) const;
    const std::vector<std::string>& cellNames(int k) const;
    const std::string& cellName(int k, int i) const { return cellNames(k).at(i); }
    int cellIndex(int k, const std::string& name) const;  // -1 when absent

    /// Boundary matrix C_k -> C_{k-1}. For k <= 0 or k > D this is the
    /// appropriately shaped zero map, so callers never special-case the ends.
    IntMatrix boundary(int k) const;

  private:
    ChainComplex() = default;

    std::vector<std::vector<std::string>> cells_;
    std::vector<IntMatrix> boundaries_;  // boundaries_[k]: C_{k+1} -> C_k, k = 0..D-1
};

/// Checks ∂∘∂ = 0, dimension consistency and name uniqueness.
/// Throws NotAComplex identifying the offending degree and entry.
void validate(const ChainComplex& c);

/**
 * Per-cell energies E_k plus inverse temperature.  At a working degree d the
 * maps of interest are E := E_{d-1} and W := E_d.
 */
struct ScalarStructure {
    double beta = 1.0;
    std::map<int, std::vector<double>> energy;  // degree -> values in cell order

    bool covers(int degree) const { return energy.count(degree) != 0; }
    double value(int degree, int cell) const { return energy.at(degree).at(cell); }

    /// Zero energies on every degree of `c` (the exact-arithmetic regime).
    static ScalarStructure zero(const ChainComplex& c, double beta = 1.0);

    /// Throws MissingScalar / DegreeOutOfRange when a required degree is not
    /// covered or sized wrongly; also enforces beta > 0.
    void require(const ChainComplex& c, std::initializer_list<int> degrees) const;

    /// True when every energy on the listed degrees is exactly zero, i.e.
    /// all weights e^{βE} equal 1 and rational arithmetic applies.
    bool isZeroOn(std::initializer_list<int> degrees) const;
};

/// Diagonal of the modified inner product on C_k: cell b gets e^{β E_k(b)}.
std::vector<double> modifiedInnerProduct(const ChainComplex& c, const ScalarStructure& s, int k);

struct HomologySummary {
    int degree = 0;
    int bettiNumber = 0;
    Int torsionOrder = 1;
    IntMatrix cycleLatticeBasis;     // saturated basis of Z_k(X;Z), columns
    IntMatrix boundaryLatticeBasis;  // lattice basis of B_k(X;Z), columns
    IntMatrix homologyLatticeMap;    // generators of B_k in Z_k coordinates
};

/// Exact homology in degree k via Smith normal form.
HomologySummary homology(const ChainComplex& c, int k);

/**
 * The two-stage reduction: the chain complex of X^(d)/X^(d-2).  Degrees d and
 * d-1 keep their cells and the degree-d boundary; everything below d-1 is
 * collapsed, so every (d-1)-chain of the result is a cycle.  Spanning trees,
 * spanning co-trees and their invariants agree with those of the input.
 */
ChainComplex reduceTwoStage(const ChainComplex& c, int d);

/**
 * Shared lattice data for computations at a fixed degree d.  Derived once
 * from the Smith normal form of ∂_d:
 *
 *   - imageBasisG: lattice basis of B_{d-1}(X;Z) as columns,
 *   - coordsP:     ∂_d = imageBasisG * coordsP with coordsP surjective over Z,
 *   - freeMapF:    presents C_{d-1} -> (C_{d-1}/B_{d-1}) / torsion,
 *   - thetaX:      |torsion H_{d-1}(X;Z)| (= product of invariant factors),
 *   - cycleBasisZ: saturated basis of Z_{d-1}(X;Z).
 */
struct DegreeContext {
    int d = 0;
    int nCellsD = 0;
    int nCellsDm1 = 0;
    IntMatrix del;  // ∂_d
    int rankB = 0;
    IntMatrix imageBasisG;
    IntMatrix coordsP;
    IntMatrix freeMapF;
    Int thetaX = 1;
    IntMatrix cycleBasisZ;
    int bettiDm1 = 0;  // rank Z_{d-1} - rank B_{d-1}

    int homologyRank() const { return nCellsDm1 - rankB; }  // rank of C/B
};

DegreeContext makeDegreeContext(const ChainComplex& c, int d);

}  // namespace cohodge
