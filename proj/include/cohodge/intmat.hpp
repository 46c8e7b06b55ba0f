#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cohodge {

using Int = mpz_class;
using Rat = mpq_class;

/**
 * Dense matrix over the integers with arbitrary-precision entries.
 *
 * All homological computations in this library run over Z (or Q); fixed-width
 * integers are never used for matrix entries. Instances are value types and
 * safe to share across threads once constructed.
 */
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Int& operator()(int i, int j) const { return data_[index(i, j)]; }
    Int& operator()(int i, int j) { return data_[index(i, j)]; }

    bool operator==(const IntMatrix& other) const = default;

    bool isZero() const;
    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;

    IntMatrix selectColumns(std::span<const int> cols) const;
    IntMatrix selectRows(std::span<const int> rows) const;
    std::vector<Int> column(int j) const;

    /// Decimal text form; parses back bit-exactly with fromText.
    std::string toText() const;
    static IntMatrix fromText(const std::string& text);

  private:
    int index(int i, int j) const;

    int rows_, cols_;
    std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/** Dense matrix over the rationals; entries kept in canonical form. */
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols);

    static RatMatrix identity(int n);
    static RatMatrix fromInt(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& operator()(int i, int j) const { return data_[index(i, j)]; }
    Rat& operator()(int i, int j) { return data_[index(i, j)]; }

    bool operator==(const RatMatrix& other) const = default;

    bool isZero() const;
    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    RatMatrix operator+(const RatMatrix& rhs) const;
    RatMatrix operator-(const RatMatrix& rhs) const;
    RatMatrix operator*(const Rat& s) const;

    RatMatrix selectColumns(std::span<const int> cols) const;
    RatMatrix selectRows(std::span<const int> rows) const;

    /// True when every entry is an integer; `asInt` then extracts them.
    bool isIntegral() const;
    IntMatrix asInt() const;

  private:
    int index(int i, int j) const;

    int rows_, cols_;
    std::vector<Rat> data_;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

/**
 * Smith normal form U * M * V = diag(d_1, ..., d_r) with d_i | d_{i+1},
 * d_i > 0, and U, V unimodular. Inverses of the change-of-basis matrices are
 * tracked during the reduction so that lattice bases of the kernel and image
 * come out for free.
 */
struct SmithForm {
    IntMatrix left;          // U
    IntMatrix leftInverse;   // U^{-1}
    IntMatrix right;         // V
    IntMatrix rightInverse;  // V^{-1}
    std::vector<Int> diag;   // invariant factors, nonzero
    int rank = 0;

    IntMatrix diagonalMatrix(int rows, int cols) const;
};

SmithForm smithNormalForm(const IntMatrix& m);

/// Order of the torsion subgroup of coker(m): the product of the nonzero
/// invariant factors of m.
Int torsionOrder(const IntMatrix& m);

/// Rank of m over the rationals (fraction-free elimination).
int rationalRank(const IntMatrix& m);

/// Determinant of a square integer matrix (Bareiss fraction-free algorithm).
Int determinant(const IntMatrix& m);

/// Saturated lattice basis of ker(m) over Z, returned as the columns of the
/// result. The basis spans a direct summand of the source lattice.
IntMatrix kernelBasis(const IntMatrix& m);

/// Lattice basis of the image m(Z^cols) inside Z^rows, as columns.
IntMatrix imageBasis(const IntMatrix& m);

/// Exact solution X of m * X = rhs for square invertible m.
/// Throws SingularMatrix when det(m) = 0.
RatMatrix solveExact(const RatMatrix& m, const RatMatrix& rhs);

/// Exact determinant of a square rational matrix.
Rat determinant(const RatMatrix& m);

/// Least-squares-free exact solve of a full-column-rank system m * X = rhs
/// (rhs must lie in the column span). Throws DependentBasis if the columns of
/// m are dependent, SingularMatrix if rhs is outside the span.
RatMatrix solveFullColumnRank(const RatMatrix& m, const RatMatrix& rhs);

/// Gram determinant det(B^T B) of a lattice basis given by the columns of
/// `latticeBasis` (integer coordinates in an ambient orthonormal basis).
/// This is the squared covolume of the spanned lattice.
/// Throws DependentBasis when the columns are linearly dependent.
Int gramCovolumeSq(const IntMatrix& latticeBasis);

/**
 * Incremental rank oracle over Q with push/pop semantics, used by the subset
 * enumerators to prune dependent column choices early. Internally keeps an
 * integer echelon basis of the span of the pushed vectors.
 */
class RankTracker {
  public:
    explicit RankTracker(int dimension);

    int rank() const { return static_cast<int>(pivots_.size()); }

    /// Adds `v` to the tracked span. Returns true (and records the vector) if
    /// the rank grows; returns false and leaves the state unchanged otherwise.
    bool push(std::span<const Int> v);

    /// Undoes the most recent successful push.
    void pop();

  private:
    int dim_;
    std::vector<std::vector<Int>> echelon_;
    std::vector<int> pivots_;
};

/// Complement of a sorted index subset inside {0, ..., n-1}.
std::vector<int> complementIndices(int n, std::span<const int> subset);

/// Advances a strictly increasing k-subset of {0..n-1} to its lexicographic
/// successor; returns false after the last subset.
bool nextCombination(std::vector<int>& comb, int n);

/// Random unimodular matrix built from seeded elementary operations
/// (test utility; determinant is exactly +-1).
IntMatrix randomUnimodular(int n, unsigned long seed, int ops = -1);

}  // namespace cohodge
