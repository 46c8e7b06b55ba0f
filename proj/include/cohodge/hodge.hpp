#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "cohodge/chain_complex.hpp"
#include "cohodge/forests.hpp"
#include "cohodge/intmat.hpp"

namespace cohodge {

enum class ArithmeticMode {
    Auto,   // exact when every relevant energy vanishes, double otherwise
    Exact,  // demand zero energies; fail otherwise
    Float,
};

struct HodgeOptions {
    ArithmeticMode mode = ArithmeticMode::Auto;
    bool keepCertificate = true;  // retain per-forest summands (memory trade-off)
    EnumerationOptions enumeration;
};

/// Resolves the arithmetic mode against the energies actually in play.
/// Exact mode demands vanishing energies (Unsupported otherwise).
bool useExactArithmetic(ArithmeticMode mode, bool energiesVanish);

/// One summand of a forest-summation operator: which forest, its integer
/// invariant, its weight (log domain; exact rational in exact mode) and the
/// per-forest map.
struct ForestTerm {
    std::vector<int> cotreeCells;
    std::vector<int> treeCells;
    Int invariant = 1;  // a_L, theta_T, or their product for pairs
    double logWeight = 0.0;
    std::optional<Rat> exactWeight;
    RatMatrix summand;  // empty when certificate retention is off
};

/**
 * A linear operator assembled as a normalized forest sum
 * (1/N) * sum_F weight_F * summand_F.  The assembled matrix is always
 * produced; the certificate allows independent recomputation.
 */
struct SplittingOperator {
    std::string sourceSpace;
    std::string targetSpace;
    Eigen::MatrixXd matrix;
    std::optional<RatMatrix> exactMatrix;  // populated in exact mode
    double logNormalizer = 0.0;            // ln sum of weights
    std::optional<Rat> exactNormalizer;
    std::vector<ForestTerm> certificate;

    bool isExact() const { return exactMatrix.has_value(); }

    /// Re-assembles the matrix from the certificate (for verification).
    Eigen::MatrixXd assembleFromCertificate() const;
    std::optional<RatMatrix> assembleExactFromCertificate() const;
};

struct BoltzmannDistribution {
    std::vector<double> cycle;  // real (d-1)-cycle in cell coordinates
    std::optional<RatMatrix> cycleExact;
    std::vector<Int> classInput;  // the integer cycle the class came from
    double betaUsed = 1.0;
    bool degenerate = false;  // H_{d-1}(X;R) = 0, cycle is zero
};

// ---------------------------------------------------------------------------
// Moore-Penrose oracles (normal equations with weighted adjoints)

/**
 * Weighted Moore-Penrose pseudo-inverse of `a` where source and target carry
 * diagonal inner products.  Requires full row rank (surjective case,
 * A+ = A# (A A#)^{-1}) or full column rank (injective case,
 * A+ = (A# A)^{-1} A#), with A# the weighted adjoint.  Serves as the
 * ground-truth oracle for every summation formula.
 * Throws RankDeficientBothWays otherwise.
 */
Eigen::MatrixXd mpPseudoInverseOracle(const Eigen::MatrixXd& a, const Eigen::VectorXd& sourceWeights,
                                      const Eigen::VectorXd& targetWeights);

/// Exact-rational variant of the oracle.  Empty weight vectors mean unit
/// weights; double weights convert to rationals exactly, so this carries no
/// roundoff beyond the caller's final conversion.
RatMatrix mpPseudoInverseOracleExact(const RatMatrix& a, const std::vector<Rat>& sourceWeights = {},
                                     const std::vector<Rat>& targetWeights = {});

/**
 * Summation formula for the weighted pseudo-inverse of a surjective map:
 * A+ = (1/nabla) sum_S t_S i_S (A_S)^{-1} over column subsets S with
 * det A_S != 0 and t_S = det(A_S)^2 / prod_{i in S} mu_i.
 * Throws NotSurjective when A lacks full row rank.
 */
SplittingOperator mpSummationSurjective(const RatMatrix& a, const std::vector<double>& sourceWeights,
                                        const HodgeOptions& opts = {});

// ---------------------------------------------------------------------------
// Forest-summation operators at degree d

/**
 * The Boltzmann splitting operator: the co-tree-weighted splitting of the
 * projection to homology, orthogonal in the E-modified inner product.
 * Source coordinates are the free coordinates of C_{d-1}/B_{d-1} determined
 * by the integral lattice (ctx.freeMapF); target is C_{d-1}.  Applied to the
 * free coordinates of a cycle class this solves the combinatorial Hodge
 * problem.
 */
SplittingOperator boltzmannSplitting(const ChainComplex& c, int d, const ScalarStructure& s,
                                     const HodgeOptions& opts = {});

/// The unique E-co-closed real cycle representing the class of the integer
/// cycle xhat.  Throws NotACycle when xhat is not a cycle.
BoltzmannDistribution boltzmannDistribution(const ChainComplex& c, int d, const ScalarStructure& s,
                                            const std::vector<Int>& xhat, const HodgeOptions& opts = {});

/**
 * Tree-summation splitting of ∂: B_{d-1} -> C_d (the network projection).
 * Source is B_{d-1} in the integral image-lattice basis; satisfies
 * ∂ ∘ p+ = id on B_{d-1} and equals the W-weighted pseudo-inverse oracle.
 */
SplittingOperator kirchhoffProjection(const ChainComplex& c, int d, const ScalarStructure& s,
                                      const HodgeOptions& opts = {});

/**
 * Co-tree-summation projection C_{d-1} -> B_{d-1} (in the image-lattice
 * basis); the E-weighted orthogonal projection onto the boundary space,
 * i+ ∘ i = id.
 */
SplittingOperator cotreeProjection(const ChainComplex& c, int d, const ScalarStructure& s,
                                   const HodgeOptions& opts = {});

/**
 * The full weighted pseudo-inverse of ∂: C_d -> C_{d-1}, assembled as the
 * (L,T)-pair sum (1/(Delta*nabla)) sum tau_L w_T phi_T ∘ zeta_L. Equals the
 * composition of the two operators above.
 */
SplittingOperator kirchhoffBoltzmann(const ChainComplex& c, int d, const ScalarStructure& s,
                                     const HodgeOptions& opts = {});

// ---------------------------------------------------------------------------
// Low-temperature behaviour

struct LowTemperatureRow {
    double beta = 0.0;
    std::vector<double> normalizedWeights;  // tau_L / nabla per co-tree
    int argmax = -1;
};

struct LowTemperatureReport {
    std::vector<SpanningCoTree> cotrees;
    int minimizerIndex = -1;     // index of L_mu (exhaustive argmin of the energy sum)
    bool greedyAgrees = false;   // greedy co-tree equals the argmin
    double energyGap = 0.0;      // delta: smallest excess energy over the minimum
    double betaThreshold = 0.0;  // beta_0 with tau/nabla >= 1 - exp(-beta*delta/2) beyond it
    std::vector<LowTemperatureRow> table;
    bool dominantAtLargestBeta = false;  // minimizer weight is the maximum at the largest beta
    bool trendsToOne = false;            // minimizer weight non-decreasing along the grid
    std::optional<RatMatrix> limitCycle;  // psi_{L_mu}(xhat) when a class was supplied
};

/// Normalized co-tree weights on a beta grid, the minimizing co-tree and the
/// quantization threshold.  Requires injective E on the (d-1)-cells.
LowTemperatureReport lowTemperatureLimit(const ChainComplex& c, int d, const ScalarStructure& s,
                                         const std::vector<double>& betaGrid,
                                         const std::vector<Int>* xhat = nullptr, const HodgeOptions& opts = {});

// ---------------------------------------------------------------------------
// Per-forest maps (exposed for tests and the certificate machinery)

/// psi_L: the unique chain supported on L with prescribed free coordinates.
RatMatrix cotreeSplittingMap(const DegreeContext& ctx, const SpanningCoTree& L);

/// phi_T: B_{d-1} (image-lattice coords) -> C_d, inverse of ∂ on the tree.
RatMatrix treeProjectionMap(const DegreeContext& ctx, const SpanningTree& T);

/// zeta_L: C_{d-1} -> B_{d-1} (image-lattice coords) through the co-tree
/// complement.
RatMatrix cotreeProjectionMap(const DegreeContext& ctx, const SpanningCoTree& L);

}  // namespace cohodge
