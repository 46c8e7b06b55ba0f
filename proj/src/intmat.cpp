#include "cohodge/intmat.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "cohodge/error.hpp"

namespace cohodge {

namespace {

void checkShape(bool ok, const char* what)
{
    if (!ok)
        fail(Errc::Internal, std::string("matrix shape mismatch in ") + what);
}

// Exact division helper; q must divide n.
Int divExact(const Int& n, const Int& q)
{
    Int r;
    mpz_divexact(r.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols)
{
    if (rows < 0 || cols < 0)
        fail(Errc::Internal, "negative matrix dimension");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : rows)
    {
        checkShape(static_cast<int>(row.size()) == cols_, "IntMatrix initializer");
        for (long v : row)
            data_.emplace_back(v);
    }
}

int IntMatrix::index(int i, int j) const
{
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        fail(Errc::Internal, "IntMatrix index out of bounds");
    return i * cols_ + j;
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool IntMatrix::isZero() const
{
    for (const Int& v : data_)
        if (v != 0)
            return false;
    return true;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    checkShape(cols_ == rhs.rows_, "IntMatrix multiply");
    IntMatrix out(rows_, rhs.cols_);
    Int acc, tmp;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rhs.cols_; ++j)
        {
            acc = 0;
            for (int k = 0; k < cols_; ++k)
            {
                tmp = (*this)(i, k) * rhs(k, j);
                acc += tmp;
            }
            out(i, j) = acc;
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const
{
    checkShape(rows_ == rhs.rows_ && cols_ == rhs.cols_, "IntMatrix add");
    IntMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = data_[k] + rhs.data_[k];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const
{
    checkShape(rows_ == rhs.rows_ && cols_ == rhs.cols_, "IntMatrix subtract");
    IntMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = data_[k] - rhs.data_[k];
    return out;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = -data_[k];
    return out;
}

IntMatrix IntMatrix::selectColumns(std::span<const int> cols) const
{
    IntMatrix out(rows_, static_cast<int>(cols.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            out(i, static_cast<int>(j)) = (*this)(i, cols[j]);
    return out;
}

IntMatrix IntMatrix::selectRows(std::span<const int> rows) const
{
    IntMatrix out(static_cast<int>(rows.size()), cols_);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols_; ++j)
            out(static_cast<int>(i), j) = (*this)(rows[i], j);
    return out;
}

std::vector<Int> IntMatrix::column(int j) const
{
    std::vector<Int> out(rows_);
    for (int i = 0; i < rows_; ++i)
        out[i] = (*this)(i, j);
    return out;
}

std::string IntMatrix::toText() const
{
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (int i = 0; i < rows_; ++i)
    {
        for (int j = 0; j < cols_; ++j)
        {
            if (j)
                os << ' ';
            os << (*this)(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

IntMatrix IntMatrix::fromText(const std::string& text)
{
    std::istringstream is(text);
    int rows, cols;
    if (!(is >> rows >> cols) || rows < 0 || cols < 0)
        fail(Errc::ParseError, "bad matrix header");
    IntMatrix m(rows, cols);
    std::string token;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
        {
            if (!(is >> token))
                fail(Errc::ParseError, "matrix body truncated");
            if (mpz_set_str(m(i, j).get_mpz_t(), token.c_str(), 10) != 0)
                fail(Errc::ParseError, "bad integer literal: " + token);
        }
    return m;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    for (int i = 0; i < m.rows(); ++i)
    {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m(i, j).get_str();
        os << "]";
    }
    return os;
}

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols)
{
    if (rows < 0 || cols < 0)
        fail(Errc::Internal, "negative matrix dimension");
}

int RatMatrix::index(int i, int j) const
{
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        fail(Errc::Internal, "RatMatrix index out of bounds");
    return i * cols_ + j;
}

RatMatrix RatMatrix::identity(int n)
{
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::fromInt(const IntMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out(i, j) = Rat(m(i, j));
    return out;
}

bool RatMatrix::isZero() const
{
    for (const Rat& v : data_)
        if (v != 0)
            return false;
    return true;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const
{
    checkShape(cols_ == rhs.rows_, "RatMatrix multiply");
    RatMatrix out(rows_, rhs.cols_);
    Rat acc;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rhs.cols_; ++j)
        {
            acc = 0;
            for (int k = 0; k < cols_; ++k)
                acc += (*this)(i, k) * rhs(k, j);
            out(i, j) = acc;
        }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const
{
    checkShape(rows_ == rhs.rows_ && cols_ == rhs.cols_, "RatMatrix add");
    RatMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = data_[k] + rhs.data_[k];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const
{
    checkShape(rows_ == rhs.rows_ && cols_ == rhs.cols_, "RatMatrix subtract");
    RatMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = data_[k] - rhs.data_[k];
    return out;
}

RatMatrix RatMatrix::operator*(const Rat& s) const
{
    RatMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = data_[k] * s;
    return out;
}

RatMatrix RatMatrix::selectColumns(std::span<const int> cols) const
{
    RatMatrix out(rows_, static_cast<int>(cols.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            out(i, static_cast<int>(j)) = (*this)(i, cols[j]);
    return out;
}

RatMatrix RatMatrix::selectRows(std::span<const int> rows) const
{
    RatMatrix out(static_cast<int>(rows.size()), cols_);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols_; ++j)
            out(static_cast<int>(i), j) = (*this)(rows[i], j);
    return out;
}

bool RatMatrix::isIntegral() const
{
    for (const Rat& v : data_)
        if (v.get_den() != 1)
            return false;
    return true;
}

IntMatrix RatMatrix::asInt() const
{
    IntMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
        {
            const Rat& v = (*this)(i, j);
            if (v.get_den() != 1)
                fail(Errc::Internal, "asInt on non-integral rational matrix");
            out(i, j) = v.get_num();
        }
    return out;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m)
{
    for (int i = 0; i < m.rows(); ++i)
    {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m(i, j).get_str();
        os << "]";
    }
    return os;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Elementary operations applied simultaneously to the work matrix and the
// accumulated basis matrices, keeping U*M*V = work and the inverses in sync.
struct SnfState {
    IntMatrix w, u, uInv, v, vInv;

    void swapRows(int a, int b)
    {
        if (a == b)
            return;
        for (int j = 0; j < w.cols(); ++j)
            std::swap(w(a, j), w(b, j));
        for (int j = 0; j < u.cols(); ++j)
            std::swap(u(a, j), u(b, j));
        for (int i = 0; i < uInv.rows(); ++i)
            std::swap(uInv(i, a), uInv(i, b));
    }

    void swapCols(int a, int b)
    {
        if (a == b)
            return;
        for (int i = 0; i < w.rows(); ++i)
            std::swap(w(i, a), w(i, b));
        for (int i = 0; i < v.rows(); ++i)
            std::swap(v(i, a), v(i, b));
        for (int j = 0; j < vInv.cols(); ++j)
            std::swap(vInv(a, j), vInv(b, j));
    }

    // row a -= q * row b
    void rowAxpy(int a, int b, const Int& q)
    {
        if (q == 0)
            return;
        for (int j = 0; j < w.cols(); ++j)
            w(a, j) -= q * w(b, j);
        for (int j = 0; j < u.cols(); ++j)
            u(a, j) -= q * u(b, j);
        for (int i = 0; i < uInv.rows(); ++i)
            uInv(i, b) += q * uInv(i, a);
    }

    // col a -= q * col b
    void colAxpy(int a, int b, const Int& q)
    {
        if (q == 0)
            return;
        for (int i = 0; i < w.rows(); ++i)
            w(i, a) -= q * w(i, b);
        for (int i = 0; i < v.rows(); ++i)
            v(i, a) -= q * v(i, b);
        for (int j = 0; j < vInv.cols(); ++j)
            vInv(b, j) += q * vInv(a, j);
    }

    void negateRow(int a)
    {
        for (int j = 0; j < w.cols(); ++j)
            w(a, j) = -w(a, j);
        for (int j = 0; j < u.cols(); ++j)
            u(a, j) = -u(a, j);
        for (int i = 0; i < uInv.rows(); ++i)
            uInv(i, a) = -uInv(i, a);
    }
};

}  // namespace

SmithForm smithNormalForm(const IntMatrix& m)
{
    const int rows = m.rows(), cols = m.cols();
    SnfState s{m, IntMatrix::identity(rows), IntMatrix::identity(rows), IntMatrix::identity(cols),
               IntMatrix::identity(cols)};

    const int steps = std::min(rows, cols);
    int rank = 0;
    for (int t = 0; t < steps; ++t)
    {
        // Smallest-magnitude nonzero pivot in the trailing block; this is the
        // usual guard against coefficient explosion.
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
            {
                const Int& v = s.w(i, j);
                if (v == 0)
                    continue;
                if (pi < 0 || mpz_cmpabs(v.get_mpz_t(), s.w(pi, pj).get_mpz_t()) < 0)
                {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0)
            break;
        s.swapRows(t, pi);
        s.swapCols(t, pj);

        bool settled = false;
        while (!settled)
        {
            // Clear column t below the pivot.
            for (int i = t + 1; i < rows; ++i)
                while (s.w(i, t) != 0)
                {
                    Int q = s.w(i, t) / s.w(t, t);  // truncated quotient
                    s.rowAxpy(i, t, q);
                    if (s.w(i, t) != 0)
                        s.swapRows(i, t);  // strictly smaller pivot
                }
            // Clear row t right of the pivot. Column swaps here can dirty the
            // column again, hence the surrounding loop.
            bool colDirty = false;
            for (int j = t + 1; j < cols; ++j)
                while (s.w(t, j) != 0)
                {
                    Int q = s.w(t, j) / s.w(t, t);
                    s.colAxpy(j, t, q);
                    if (s.w(t, j) != 0)
                    {
                        s.swapCols(j, t);
                        colDirty = true;
                    }
                }
            if (colDirty)
            {
                bool columnClear = true;
                for (int i = t + 1; i < rows && columnClear; ++i)
                    columnClear = s.w(i, t) == 0;
                if (!columnClear)
                    continue;
            }
            // Enforce the divisibility chain: the pivot must divide every
            // entry of the trailing block.
            int bi = -1, bj = -1;
            for (int i = t + 1; i < rows && bi < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (s.w(i, j) % s.w(t, t) != 0)
                    {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0)
                settled = true;
            else
                s.rowAxpy(t, bi, Int(-1));  // pull the offending row up, re-reduce
        }
        if (s.w(t, t) < 0)
            s.negateRow(t);
        ++rank;
    }

    SmithForm out;
    out.left = std::move(s.u);
    out.leftInverse = std::move(s.uInv);
    out.right = std::move(s.v);
    out.rightInverse = std::move(s.vInv);
    out.rank = rank;
    out.diag.reserve(rank);
    for (int t = 0; t < rank; ++t)
        out.diag.push_back(s.w(t, t));
    return out;
}

IntMatrix SmithForm::diagonalMatrix(int rows, int cols) const
{
    IntMatrix d(rows, cols);
    for (int t = 0; t < rank; ++t)
        d(t, t) = diag[t];
    return d;
}

Int torsionOrder(const IntMatrix& m)
{
    SmithForm snf = smithNormalForm(m);
    Int order = 1;
    for (const Int& d : snf.diag)
        order *= d;
    return order;
}

int rationalRank(const IntMatrix& m)
{
    // Bareiss fraction-free elimination with full pivoting.
    IntMatrix w = m;
    const int rows = w.rows(), cols = w.cols();
    Int prev = 1;
    int r = 0;
    while (r < rows && r < cols)
    {
        int pi = -1, pj = -1;
        for (int i = r; i < rows && pi < 0; ++i)
            for (int j = r; j < cols; ++j)
                if (w(i, j) != 0)
                {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0)
            break;
        if (pi != r)
            for (int j = 0; j < cols; ++j)
                std::swap(w(r, j), w(pi, j));
        if (pj != r)
            for (int i = 0; i < rows; ++i)
                std::swap(w(i, r), w(i, pj));
        for (int i = r + 1; i < rows; ++i)
        {
            for (int j = r + 1; j < cols; ++j)
                w(i, j) = divExact(w(r, r) * w(i, j) - w(i, r) * w(r, j), prev);
            w(i, r) = 0;
        }
        prev = w(r, r);
        ++r;
    }
    return r;
}

Int determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        fail(Errc::Internal, "determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (int r = 0; r < n - 1; ++r)
    {
        if (w(r, r) == 0)
        {
            int pi = -1;
            for (int i = r + 1; i < n; ++i)
                if (w(i, r) != 0)
                {
                    pi = i;
                    break;
                }
            if (pi < 0)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(w(r, j), w(pi, j));
            sign = -sign;
        }
        for (int i = r + 1; i < n; ++i)
        {
            for (int j = r + 1; j < n; ++j)
                w(i, j) = divExact(w(r, r) * w(i, j) - w(i, r) * w(r, j), prev);
            w(i, r) = 0;
        }
        prev = w(r, r);
    }
    return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

IntMatrix kernelBasis(const IntMatrix& m)
{
    SmithForm snf = smithNormalForm(m);
    std::vector<int> tail;
    for (int j = snf.rank; j < m.cols(); ++j)
        tail.push_back(j);
    return snf.right.selectColumns(tail);
}

IntMatrix imageBasis(const IntMatrix& m)
{
    SmithForm snf = smithNormalForm(m);
    IntMatrix out(m.rows(), snf.rank);
    for (int t = 0; t < snf.rank; ++t)
        for (int i = 0; i < m.rows(); ++i)
            out(i, t) = snf.diag[t] * snf.leftInverse(i, t);
    return out;
}

// ---------------------------------------------------------------------------
// Rational elimination

RatMatrix solveExact(const RatMatrix& m, const RatMatrix& rhs)
{
    if (m.rows() != m.cols())
        fail(Errc::SingularMatrix, "solveExact requires a square matrix");
    checkShape(m.rows() == rhs.rows(), "solveExact rhs");
    const int n = m.rows(), p = rhs.cols();
    RatMatrix a = m, b = rhs;
    for (int r = 0; r < n; ++r)
    {
        int pi = -1;
        for (int i = r; i < n; ++i)
            if (a(i, r) != 0)
            {
                pi = i;
                break;
            }
        if (pi < 0)
            fail(Errc::SingularMatrix, "matrix is singular");
        if (pi != r)
        {
            for (int j = 0; j < n; ++j)
                std::swap(a(r, j), a(pi, j));
            for (int j = 0; j < p; ++j)
                std::swap(b(r, j), b(pi, j));
        }
        Rat inv = 1 / a(r, r);
        for (int j = r; j < n; ++j)
            a(r, j) *= inv;
        for (int j = 0; j < p; ++j)
            b(r, j) *= inv;
        for (int i = 0; i < n; ++i)
        {
            if (i == r || a(i, r) == 0)
                continue;
            Rat f = a(i, r);
            for (int j = r; j < n; ++j)
                a(i, j) -= f * a(r, j);
            for (int j = 0; j < p; ++j)
                b(i, j) -= f * b(r, j);
        }
    }
    return b;
}

Rat determinant(const RatMatrix& m)
{
    if (m.rows() != m.cols())
        fail(Errc::Internal, "determinant of non-square matrix");
    const int n = m.rows();
    RatMatrix a = m;
    Rat det = 1;
    for (int r = 0; r < n; ++r)
    {
        int pi = -1;
        for (int i = r; i < n; ++i)
            if (a(i, r) != 0)
            {
                pi = i;
                break;
            }
        if (pi < 0)
            return Rat(0);
        if (pi != r)
        {
            for (int j = 0; j < n; ++j)
                std::swap(a(r, j), a(pi, j));
            det = -det;
        }
        det *= a(r, r);
        Rat inv = 1 / a(r, r);
        for (int i = r + 1; i < n; ++i)
        {
            if (a(i, r) == 0)
                continue;
            Rat f = a(i, r) * inv;
            for (int j = r; j < n; ++j)
                a(i, j) -= f * a(r, j);
        }
    }
    return det;
}

RatMatrix solveFullColumnRank(const RatMatrix& m, const RatMatrix& rhs)
{
    checkShape(m.rows() == rhs.rows(), "solveFullColumnRank rhs");
    const int n = m.rows(), k = m.cols(), p = rhs.cols();
    RatMatrix a = m, b = rhs;
    std::vector<int> pivotRow(k, -1);
    int r = 0;
    for (int c = 0; c < k; ++c)
    {
        int pi = -1;
        for (int i = r; i < n; ++i)
            if (a(i, c) != 0)
            {
                pi = i;
                break;
            }
        if (pi < 0)
            fail(Errc::DependentBasis, "columns are linearly dependent");
        if (pi != r)
        {
            for (int j = 0; j < k; ++j)
                std::swap(a(r, j), a(pi, j));
            for (int j = 0; j < p; ++j)
                std::swap(b(r, j), b(pi, j));
        }
        Rat inv = 1 / a(r, c);
        for (int j = c; j < k; ++j)
            a(r, j) *= inv;
        for (int j = 0; j < p; ++j)
            b(r, j) *= inv;
        for (int i = 0; i < n; ++i)
        {
            if (i == r || a(i, c) == 0)
                continue;
            Rat f = a(i, c);
            for (int j = c; j < k; ++j)
                a(i, j) -= f * a(r, j);
            for (int j = 0; j < p; ++j)
                b(i, j) -= f * b(r, j);
        }
        pivotRow[c] = r;
        ++r;
    }
    // Rows beyond the pivot rows must have zero right-hand side, otherwise the
    // system is inconsistent.
    for (int i = r; i < n; ++i)
        for (int j = 0; j < p; ++j)
            if (b(i, j) != 0)
                fail(Errc::SingularMatrix, "right-hand side outside the column span");
    RatMatrix x(k, p);
    for (int c = 0; c < k; ++c)
        for (int j = 0; j < p; ++j)
            x(c, j) = b(pivotRow[c], j);
    return x;
}

Int gramCovolumeSq(const IntMatrix& latticeBasis)
{
    IntMatrix gram = latticeBasis.transpose() * latticeBasis;
    Int det = determinant(gram);
    if (det == 0)
        fail(Errc::DependentBasis, "lattice basis columns are dependent");
    return det;
}

// ---------------------------------------------------------------------------
// RankTracker

RankTracker::RankTracker(int dimension) : dim_(dimension) {}

bool RankTracker::push(std::span<const Int> v)
{
    if (static_cast<int>(v.size()) != dim_)
        fail(Errc::Internal, "RankTracker dimension mismatch");
    std::vector<Int> w(v.begin(), v.end());
    for (size_t k = 0; k < echelon_.size(); ++k)
    {
        const int p = pivots_[k];
        if (w[p] == 0)
            continue;
        const std::vector<Int>& e = echelon_[k];
        Int a = e[p], b = w[p];
        Int g = gcd(a, b);
        a /= g;
        b /= g;
        for (int j = 0; j < dim_; ++j)
            w[j] = a * w[j] - b * e[j];
    }
    int pivot = -1;
    Int g = 0;
    for (int j = 0; j < dim_; ++j)
        if (w[j] != 0)
        {
            if (pivot < 0)
                pivot = j;
            g = gcd(g, w[j]);
        }
    if (pivot < 0)
        return false;
    if (w[pivot] < 0)
        g = -g;
    for (int j = pivot; j < dim_; ++j)
        w[j] /= g;
    echelon_.push_back(std::move(w));
    pivots_.push_back(pivot);
    return true;
}

void RankTracker::pop()
{
    if (echelon_.empty())
        fail(Errc::Internal, "RankTracker pop on empty stack");
    echelon_.pop_back();
    pivots_.pop_back();
}

bool nextCombination(std::vector<int>& comb, int n)
{
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i)
        if (comb[i] < n - k + i)
        {
            ++comb[i];
            for (int j = i + 1; j < k; ++j)
                comb[j] = comb[j - 1] + 1;
            return true;
        }
    return false;
}

std::vector<int> complementIndices(int n, std::span<const int> subset)
{
    std::vector<int> out;
    out.reserve(n - static_cast<int>(subset.size()));
    size_t k = 0;
    for (int i = 0; i < n; ++i)
    {
        if (k < subset.size() && subset[k] == i)
            ++k;
        else
            out.push_back(i);
    }
    return out;
}

IntMatrix randomUnimodular(int n, unsigned long seed, int ops)
{
    IntMatrix m = IntMatrix::identity(n);
    if (n <= 1)
        return m;
    std::mt19937_64 rng(seed);
    if (ops < 0)
        ops = 4 * n;
    for (int k = 0; k < ops; ++k)
    {
        int a = static_cast<int>(rng() % n);
        int b = static_cast<int>(rng() % n);
        if (a == b)
        {
            for (int j = 0; j < n; ++j)
                m(a, j) = -m(a, j);
            continue;
        }
        long c = static_cast<long>(rng() % 5) - 2;
        for (int j = 0; j < n; ++j)
            m(a, j) += c * m(b, j);
    }
    return m;
}

}  // namespace cohodge
